use gtable_core::exactla::{q, Scalar};
use gtable_core::gtable::{
    assemble, check_morphism, corollary_check, expand, extract_algebra, GMatrix, GTable, SummandInfo,
};
use gtable_core::repkit::{decompose_standard, Decomposition, Group, IrrepId, Labeling};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check, CheckResult, Suite};

/// Size of the random morphism corpus.
pub const ORACLE_CASES: usize = 160;

/// A source table, a target table and a candidate morphism between them.
#[derive(Debug, Clone)]
pub struct OracleCase {
    pub labeling: Labeling,
    pub source: GTable,
    pub target: GTable,
    pub f: GMatrix,
}

impl OracleCase {
    /// `φ(a b) = φ(a) φ(b)` on basis pairs of the expanded algebras.
    pub fn direct(&self) -> bool {
        let lab = &self.labeling;
        let (ma, mb) = (expand(&self.source, lab).unwrap(), expand(&self.target, lab).unwrap());
        let phi = assemble(&self.f, self.source.summands(), self.target.summands(), lab).unwrap();
        (0..ma.left())
            .all(|i| (0..ma.right()).all(|j| phi.mul_vec(ma.image(i, j)) == mb.eval(&phi.col(i), &phi.col(j))))
    }
}

fn labelings() -> Vec<Labeling> {
    vec![
        Labeling::trivial(),
        Labeling::sl2_first(),
        Labeling::sl2_poly(3),
        Labeling::s3(),
        Labeling::gl(3),
    ]
}

fn info(irreps: &[IrrepId]) -> Vec<SummandInfo> {
    irreps
        .iter()
        .enumerate()
        .map(|(i, &irrep)| SummandInfo {
            id: format!("{irrep}#{i}"),
            irrep,
            hwv_weight: match irrep {
                IrrepId::Sl2(n) => Some(n as i64),
                _ => None,
            },
        })
        .collect()
}

fn standard(irreps: &[IrrepId], lab: &Labeling) -> Decomposition {
    let parts: Vec<(String, IrrepId)> = info(irreps).into_iter().map(|s| (s.id, s.irrep)).collect();
    decompose_standard(&parts, lab).unwrap()
}

fn nonzero(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let c = q(rng.gen_range(-3..=3), rng.gen_range(1..=2));
        if !c.is_zero() {
            return c;
        }
    }
}

fn random_irreps(rng: &mut ChaCha8Rng, lab: &Labeling, max: usize) -> Vec<IrrepId> {
    let ids: Vec<IrrepId> = lab.models().map(|m| m.id).collect();
    let n = rng.gen_range(1..=max);
    (0..n).map(|_| ids[rng.gen_range(0..ids.len())]).collect()
}

fn random_table(rng: &mut ChaCha8Rng, lab: &Labeling, irreps: &[IrrepId]) -> GTable {
    let n = irreps.len();
    let mut raw = Vec::new();
    for r1 in 0..n {
        for r2 in 0..n {
            for s in 0..n {
                for qq in 1..=lab.multiplicity(irreps[r1], irreps[r2], irreps[s]) {
                    if rng.gen_bool(0.6) {
                        raw.push((r1, r2, s, qq, nonzero(rng)));
                    }
                }
            }
        }
    }
    GTable::new(lab, info(irreps), None, raw).unwrap()
}

fn random_gmatrix(rng: &mut ChaCha8Rng, src: &[IrrepId], tgt: &[IrrepId], density: f64) -> GMatrix {
    let mut f = GMatrix::new();
    for (r, a) in src.iter().enumerate() {
        for (x, b) in tgt.iter().enumerate() {
            if a == b && rng.gen_bool(density) {
                f.set(x, r, nonzero(rng));
            }
        }
    }
    f
}

/// The table of `φ⁻¹ ∘ μ_B ∘ (φ ⊗ φ)` for an invertible `φ`.
fn pullback(tb: &GTable, f: &GMatrix, irreps: &[IrrepId], lab: &Labeling) -> Option<GTable> {
    let phi = assemble(f, tb.summands(), tb.summands(), lab).unwrap();
    let inv = phi.inverse()?;
    let mu = expand(tb, lab).unwrap().transform(&phi, &phi, &inv);
    Some(extract_algebra(&mu, &standard(irreps, lab), lab).unwrap())
}

/// `A ⊕ C` with `C` random and no cross terms.
fn direct_sum(ta: &GTable, tc: &GTable, lab: &Labeling) -> GTable {
    let n = ta.summands().len();
    let mut sum = ta.summands().to_vec();
    sum.extend(tc.summands().iter().cloned());
    let irreps: Vec<IrrepId> = sum.iter().map(|s| s.irrep).collect();
    let raw = ta.entries().map(|(r1, r2, e)| (r1, r2, e.s, e.q, e.c.clone())).chain(
        tc.entries()
            .map(|(r1, r2, e)| (r1 + n, r2 + n, e.s + n, e.q, e.c.clone())),
    );
    GTable::new(lab, info(&irreps), None, raw).unwrap()
}

/// One randomized `(A, B, f)`; the mix covers both outcomes.
fn random_parts(rng: &mut ChaCha8Rng, case: usize) -> (Labeling, GTable, GTable, GMatrix) {
    let labs = labelings();
    let lab = labs[rng.gen_range(0..labs.len())].clone();
    let max = if lab.group() == Group::Gl(3) { 2 } else { 4 };
    let irreps = random_irreps(rng, &lab, max);
    match case % 4 {
        // pullback along an invertible f, optionally perturbed
        0 | 1 => loop {
            let tb = random_table(rng, &lab, &irreps);
            let f = random_gmatrix(rng, &irreps, &irreps, 0.8);
            let Some(ta) = pullback(&tb, &f, &irreps, &lab) else {
                continue;
            };
            if case.is_multiple_of(4) {
                return (lab, ta, tb, f);
            }
            let n = irreps.len();
            let (r1, r2, s) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            let d = lab.multiplicity(irreps[r1], irreps[r2], irreps[s]);
            if d == 0 {
                return (lab, ta, tb, f);
            }
            let raw = ta.entries().map(|(a, b, e)| (a, b, e.s, e.q, e.c.clone())).chain([(
                r1,
                r2,
                s,
                rng.gen_range(1..=d),
                Scalar::one(),
            )]);
            let ta = GTable::new(&lab, ta.summands().to_vec(), None, raw).unwrap();
            return (lab, ta, tb, f);
        },
        // inclusion into a direct sum, scaled
        2 => {
            let ta = random_table(rng, &lab, &irreps);
            let extra = random_irreps(rng, &lab, 2);
            let tb = direct_sum(&ta, &random_table(rng, &lab, &extra), &lab);
            let lambda = if rng.gen_bool(0.5) { Scalar::one() } else { nonzero(rng) };
            let mut f = GMatrix::new();
            for r in 0..irreps.len() {
                f.set(r, r, lambda.clone());
            }
            (lab, ta, tb, f)
        }
        // unrelated tables
        _ => {
            let tgt = random_irreps(rng, &lab, max);
            let ta = random_table(rng, &lab, &irreps);
            let tb = random_table(rng, &lab, &tgt);
            let f = random_gmatrix(rng, &irreps, &tgt, 0.4);
            (lab, ta, tb, f)
        }
    }
}

/// Case `case` of the corpus; the four kinds alternate with `case % 4`.
pub fn random_case(rng: &mut ChaCha8Rng, case: usize) -> OracleCase {
    let (labeling, source, target, f) = random_parts(rng, case);
    OracleCase {
        labeling,
        source,
        target,
        f,
    }
}

pub fn suite(seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<OracleCase> = (0..ORACLE_CASES).map(|i| random_case(&mut rng, i)).collect();
    let verdicts: Vec<bool> = cases.iter().map(OracleCase::direct).collect();
    let s = Suite::Gtable;
    let agree =
        |name: &str,
         test: fn(&GTable, &GTable, &GMatrix, &Labeling) -> Result<bool, gtable_core::gtable::TableError>| {
            check(s, name, ORACLE_CASES, |i| {
                let c = &cases[i];
                match test(&c.source, &c.target, &c.f, &c.labeling) {
                    Ok(v) if v == verdicts[i] => Ok(()),
                    Ok(v) => Err(format!(
                        "{}: criterion says {v}, direct check says {}",
                        c.labeling.name(),
                        verdicts[i]
                    )),
                    Err(e) => Err(format!("{}: {e}", c.labeling.name())),
                }
            })
        };
    let yes = verdicts.iter().filter(|&&v| v).count();
    vec![
        agree("table criterion matches the direct check", check_morphism),
        agree("plain-algebra criterion matches the direct check", corollary_check),
        check(s, "corpus has both outcomes", 1, |_| {
            let no = ORACLE_CASES - yes;
            if yes >= ORACLE_CASES / 4 && no >= ORACLE_CASES / 4 {
                Ok(())
            } else {
                Err(format!("{yes} morphisms, {no} non-morphisms"))
            }
        }),
    ]
}
