//! An explicit isomorphism between `H_E` and `gl(3) ⋉ gl(3)_ab`.

use alloc::vec::Vec;

use crate::exactla::Scalar;
use crate::gtable::{assemble, check_morphism, GMatrix, GTable};
use crate::repkit::Labeling;

use super::gln::gln_sl2_algebra;
use super::heisenberg::heisenberg_pipeline;
use super::GalleryError;

/// `λ_s = k · λ_{r1} · λ_{r2}`
#[derive(Debug, Clone)]
struct Relation {
    s: usize,
    r1: usize,
    r2: usize,
    k: Scalar,
}

/// Relations forced on a diagonal `f_{π(r), r} = λ_r` by one pair of
/// tables; `None` when the supports do not match under `π`.
fn relations(ta: &GTable, tb: &GTable, perm: &[usize], lab: &Labeling, out: &mut Vec<Relation>) -> bool {
    let n = perm.len();
    let irreps: Vec<_> = ta.summands().iter().map(|s| s.irrep).collect();
    for r1 in 0..n {
        for r2 in 0..n {
            for s in 0..n {
                for q in 1..=lab.multiplicity(irreps[r1], irreps[r2], irreps[s]) {
                    let c = ta.coeff(r1, r2, s, q);
                    let d = tb.coeff(perm[r1], perm[r2], perm[s], q);
                    match (c.is_zero(), d.is_zero()) {
                        (true, true) => {}
                        (false, false) => out.push(Relation { s, r1, r2, k: &d / &c }),
                        _ => return false,
                    }
                }
            }
        }
    }
    true
}

fn grid() -> Vec<Scalar> {
    let mut v = Vec::new();
    for (n, d) in [(1, 1), (2, 1), (3, 1), (6, 1), (1, 2), (1, 3), (1, 6), (3, 2), (2, 3)] {
        v.push(Scalar::new(n, d));
        v.push(Scalar::new(-n, d));
    }
    v
}

/// Depth-first propagation of the multiplicative relations.
fn solve(rel: &[Relation], lambda: &mut Vec<Option<Scalar>>, grid: &[Scalar]) -> bool {
    loop {
        let mut progress = false;
        for r in rel {
            let (a, b, s) = (lambda[r.r1].clone(), lambda[r.r2].clone(), lambda[r.s].clone());
            match (a, b, s) {
                (Some(a), Some(b), Some(s)) => {
                    if s != &r.k * &a * &b {
                        return false;
                    }
                }
                (Some(a), Some(b), None) => {
                    lambda[r.s] = Some(&r.k * &a * &b);
                    progress = true;
                }
                (Some(a), None, Some(s)) if r.r1 != r.r2 => {
                    lambda[r.r2] = Some(&s / &(&r.k * &a));
                    progress = true;
                }
                (None, Some(b), Some(s)) if r.r1 != r.r2 => {
                    lambda[r.r1] = Some(&s / &(&r.k * &b));
                    progress = true;
                }
                (None, None, Some(s)) if r.r1 == r.r2 => {
                    let Some(root) = (&s / &r.k).sqrt_exact() else {
                        return false;
                    };
                    for cand in [root.clone(), -root] {
                        let mut trial = lambda.clone();
                        trial[r.r1] = Some(cand);
                        if solve(rel, &mut trial, grid) {
                            *lambda = trial;
                            return true;
                        }
                    }
                    return false;
                }
                _ => {}
            }
        }
        if !progress {
            break;
        }
    }
    let Some(free) = lambda.iter().position(Option::is_none) else {
        return true;
    };
    for g in grid {
        let mut trial = lambda.clone();
        trial[free] = Some(g.clone());
        if solve(rel, &mut trial, grid) {
            *lambda = trial;
            return true;
        }
    }
    false
}

/// In-place lexicographic successor; `false` after the last permutation.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The four tables involved: `H_E` cup and bracket, then the product and
/// bracket of `gl(3) ⋉ gl(3)_ab` under the corner `SL(2)`.
fn tables() -> Result<[GTable; 4], GalleryError> {
    let report = heisenberg_pipeline()?;
    let (p, b) = gln_sl2_algebra()?;
    Ok([report.cup, report.bracket, p.table()?, b.table()?])
}

/// Searches block permutations with diagonal rescalings for a Poisson
/// isomorphism `H_E → gl(3) ⋉ gl(3)_ab`. The bracket relations are imposed
/// before the product relations.
pub fn find_isomorphism() -> Result<GMatrix, GalleryError> {
    let [cup, bra, prod, glbra] = tables()?;
    let lab = Labeling::sl2_first();
    let n = cup.summands().len();
    // isotypic classes on each side, in summand order
    let mut classes: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for (r, s) in cup.summands().iter().enumerate() {
        match classes.iter_mut().find(|(a, _)| cup.summands()[a[0]].irrep == s.irrep) {
            Some((a, _)) => a.push(r),
            None => classes.push((alloc::vec![r], Vec::new())),
        }
    }
    for (x, s) in prod.summands().iter().enumerate() {
        let class = classes
            .iter_mut()
            .find(|(a, _)| cup.summands()[a[0]].irrep == s.irrep)
            .ok_or(GalleryError::NotFound)?;
        class.1.push(x);
    }
    if classes.iter().any(|(a, b)| a.len() != b.len()) {
        return Err(GalleryError::NotFound);
    }
    let grid = grid();
    let mut orders: Vec<Vec<usize>> = classes.iter().map(|(_, b)| b.clone()).collect();
    loop {
        let mut perm = alloc::vec![0; n];
        for ((a, _), b) in classes.iter().zip(&orders) {
            for (r, x) in a.iter().zip(b) {
                perm[*r] = *x;
            }
        }
        let mut rel = Vec::new();
        if relations(&bra, &glbra, &perm, &lab, &mut rel) && relations(&cup, &prod, &perm, &lab, &mut rel) {
            let mut lambda = alloc::vec![None; n];
            if solve(&rel, &mut lambda, &grid) {
                let mut f = GMatrix::new();
                for (r, l) in lambda.into_iter().enumerate() {
                    f.set(perm[r], r, l.expect("solved"));
                }
                if check_morphism(&bra, &glbra, &f, &lab)? && check_morphism(&cup, &prod, &f, &lab)? {
                    return Ok(f);
                }
            }
        }
        // advance the odometer of per-class permutations
        let mut k = 0;
        while k < orders.len() && !next_permutation(&mut orders[k]) {
            k += 1;
        }
        if k == orders.len() {
            return Err(GalleryError::NotFound);
        }
    }
}

/// The isomorphism found by [`find_isomorphism`], kept as data:
/// `(target summand, source summand, num, den)`.
const ARCHIVED: [(usize, usize, i64, i64); 10] = [
    (0, 0, 1, 1),
    (1, 1, 1, 1),
    (2, 2, -1, 1),
    (3, 3, 1, 1),
    (4, 4, 1, 1),
    (5, 5, 1, 3),
    (6, 6, 1, 1),
    (7, 7, -1, 1),
    (8, 8, 1, 1),
    (9, 9, 1, 1),
];

pub fn archived_isomorphism() -> GMatrix {
    let mut f = GMatrix::new();
    for (x, r, n, d) in ARCHIVED {
        f.set(x, r, Scalar::new(n, d));
    }
    f
}

/// Whether `f` is an invertible morphism for both structures.
pub fn verify_isomorphism(f: &GMatrix) -> Result<bool, GalleryError> {
    let [cup, bra, prod, glbra] = tables()?;
    let lab = Labeling::sl2_first();
    let invertible = assemble(f, cup.summands(), prod.summands(), &lab)?.determinant() != Scalar::zero();
    Ok(invertible && check_morphism(&bra, &glbra, f, &lab)? && check_morphism(&cup, &prod, f, &lab)?)
}
