use gtable_core::exactla::{is_zero_vector, solve, Matrix, Scalar, Strategy};
use gtable_core::repkit::{first_equivariance_failure, Labeling};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check, CheckResult, Suite};

const MATRIX_CASES: usize = 300;

/// A random matrix of bounded rank: a product of two random factors, with
/// sparse entries so the kernel is often large.
fn random_matrix(rng: &mut ChaCha8Rng) -> Matrix {
    let (rows, cols) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
    let inner = rng.gen_range(1..=8);
    let entry = |rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.4) {
            Scalar::zero()
        } else {
            Scalar::new(rng.gen_range(-4..=4), rng.gen_range(1..=3))
        }
    };
    let a = Matrix::from_fn(rows, inner, |_, _| entry(rng));
    let b = Matrix::from_fn(inner, cols, |_, _| entry(rng));
    a.mul(&b)
}

pub fn exactla_suite(seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = Suite::Exactla;
    let mut out = Vec::new();

    out.push(check(s, "rank-nullity", MATRIX_CASES, |_| {
        let m = random_matrix(&mut rng);
        let (r, k) = (m.rank(), m.kernel().dim());
        if r + k != m.cols() {
            return Err(format!("rank {r} + nullity {k} != {} columns", m.cols()));
        }
        if m.transpose().rank() != r {
            return Err("row rank differs from column rank".into());
        }
        Ok(())
    }));
    out.push(check(s, "kernel is annihilated", MATRIX_CASES, |_| {
        let m = random_matrix(&mut rng);
        match m.kernel().basis().iter().find(|v| !is_zero_vector(&m.mul_vec(v))) {
            Some(v) => Err(format!("m·{v:?} ≠ 0")),
            None => Ok(()),
        }
    }));
    out.push(check(s, "solve round-trip", MATRIX_CASES, |_| {
        let m = random_matrix(&mut rng);
        let x: Vec<Scalar> = (0..m.cols()).map(|_| Scalar::from_int(rng.gen_range(-5..=5))).collect();
        let b = m.mul_vec(&x);
        let Some(sol) = solve(&m, &b) else {
            return Err("consistent system reported unsolvable".into());
        };
        if m.mul_vec(&sol.particular) != b {
            return Err("particular solution does not solve the system".into());
        }
        if !sol.kernel.contains(&gtable_core::exactla::sub(&x, &sol.particular)) {
            return Err("two solutions differ outside the kernel".into());
        }
        Ok(())
    }));
    out.push(check(s, "dense and sparse elimination agree", MATRIX_CASES, |_| {
        let m = random_matrix(&mut rng);
        if m.echelon_with(Strategy::Dense) == m.echelon_with(Strategy::Sparse) {
            Ok(())
        } else {
            Err(format!("echelon forms differ for {m:?}"))
        }
    }));
    out.push(check(s, "inverse and determinant", MATRIX_CASES, |_| {
        let n = rng.gen_range(1..=6);
        let m = Matrix::from_fn(n, n, |_, _| Scalar::new(rng.gen_range(-3..=3), rng.gen_range(1..=2)));
        let full = m.rank() == n;
        if full == m.determinant().is_zero() {
            return Err("determinant disagrees with rank".into());
        }
        match (m.inverse(), full) {
            (Some(inv), true) if m.mul(&inv) == Matrix::identity(n) => Ok(()),
            (None, false) => Ok(()),
            _ => Err("inverse disagrees with rank".into()),
        }
    }));
    out
}

fn labelings() -> Vec<Labeling> {
    let mut v = vec![
        Labeling::trivial(),
        Labeling::sl2_first(),
        Labeling::sl2_poly(4),
        Labeling::s3(),
    ];
    v.extend((2..=4).map(Labeling::gl));
    v
}

pub fn repkit_suite() -> Vec<CheckResult> {
    let s = Suite::Repkit;
    let labs = labelings();
    let models: Vec<(String, _)> = labs
        .iter()
        .flat_map(|lab| lab.models().map(move |m| (format!("{} {}", lab.name(), m.id), m)))
        .collect();
    let maps: Vec<_> = labs
        .iter()
        .flat_map(|lab| {
            lab.triples().flat_map(move |((i1, i2, j), ms)| {
                ms.iter().enumerate().map(move |(q, m)| (lab, (*i1, *i2, *j), q + 1, m))
            })
        })
        .collect();
    vec![
        check(s, "models satisfy their relations", models.len(), |i| {
            let (name, m) = &models[i];
            m.module.validate().map_err(|e| format!("{name}: {e}"))?;
            if m.dim() != m.id.dim() {
                return Err(format!("{name}: dimension {} != {}", m.dim(), m.id.dim()));
            }
            Ok(())
        }),
        check(s, "registry maps are equivariant", maps.len(), |i| {
            let (lab, (i1, i2, j), q, m) = maps[i];
            let module = |id| &lab.model(id).expect("registered irrep").module;
            match first_equivariance_failure(m, module(i1), module(i2), module(j)) {
                None => Ok(()),
                Some(why) => Err(format!("{}: ({i1}, {i2}, {j}) q={q}: {why:?}", lab.name())),
            }
        }),
    ]
}
