use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::exactla::{Matrix, Scalar};
use crate::repkit::Labeling;

use super::table::{GTable, SummandInfo};
use super::TableError;

/// Coefficients `f_{x,r}` of an equivariant linear map between two
/// decomposed modules, indexed by (target summand, source summand).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GMatrix {
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl GMatrix {
    pub fn new() -> Self {
        GMatrix::default()
    }

    pub fn identity(n: usize) -> Self {
        let mut f = GMatrix::new();
        for r in 0..n {
            f.set(r, r, Scalar::one());
        }
        f
    }

    pub fn set(&mut self, x: usize, r: usize, c: Scalar) {
        if c.is_zero() {
            self.entries.remove(&(x, r));
        } else {
            self.entries.insert((x, r), c);
        }
    }

    pub fn get(&self, x: usize, r: usize) -> Scalar {
        self.entries.get(&(x, r)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(x, r), c)| (x, r, c))
    }

    /// Nonzero `f_{x,r}` for a fixed source summand `r`.
    pub fn column(&self, r: usize) -> Vec<(usize, &Scalar)> {
        self.entries
            .iter()
            .filter(|((_, rr), _)| *rr == r)
            .map(|(&(x, _), c)| (x, c))
            .collect()
    }

    pub(crate) fn check_shape(&self, source: &[SummandInfo], target: &[SummandInfo]) -> Result<(), TableError> {
        for &(x, r) in self.entries.keys() {
            if r >= source.len() || x >= target.len() {
                return Err(TableError::ShapeMismatch(format!("entry ({x}, {r}) out of range")));
            }
            if source[r].irrep != target[x].irrep {
                return Err(TableError::ShapeMismatch(format!(
                    "{} and {} are not isomorphic",
                    target[x].id, source[r].id
                )));
            }
        }
        Ok(())
    }
}

/// The assembled linear map on concatenated model bases: block `(x, r)` is
/// `f_{x,r}` times the identity of the common model.
pub fn assemble(
    f: &GMatrix,
    source: &[SummandInfo],
    target: &[SummandInfo],
    lab: &Labeling,
) -> Result<Matrix, TableError> {
    f.check_shape(source, target)?;
    let dim = |s: &SummandInfo| s.irrep.dim();
    let offsets = |v: &[SummandInfo]| -> Vec<usize> {
        v.iter()
            .scan(0, |acc, s| {
                let o = *acc;
                *acc += dim(s);
                Some(o)
            })
            .collect()
    };
    if source.iter().chain(target).any(|s| lab.model(s.irrep).is_none()) {
        return Err(TableError::LabelingMismatch);
    }
    let (so, to) = (offsets(source), offsets(target));
    let mut m = Matrix::zeros(target.iter().map(dim).sum(), source.iter().map(dim).sum());
    for (x, r, c) in f.entries() {
        for k in 0..dim(&source[r]) {
            m[(to[x] + k, so[r] + k)] = c.clone();
        }
    }
    Ok(m)
}

/// Decides whether `f` is an algebra morphism `A → B` from the two tables
/// alone: for every `(r1, r2, y, q)`,
/// `Σ_s c_{r1,r2}^{s,q} f_{y,s} = Σ_{x1,x2} d_{x1,x2}^{y,q} f_{x1,r1} f_{x2,r2}`.
pub fn check_morphism(ta: &GTable, tb: &GTable, f: &GMatrix, lab: &Labeling) -> Result<bool, TableError> {
    if ta.labeling() != lab.name() || tb.labeling() != lab.name() {
        return Err(TableError::LabelingMismatch);
    }
    if ta.has_separate_targets() || tb.has_separate_targets() {
        return Err(TableError::ShapeMismatch("tables must describe algebras".into()));
    }
    let (ra, xb) = (ta.summands(), tb.summands());
    f.check_shape(ra, xb)?;
    let cols: Vec<Vec<(usize, &Scalar)>> = (0..ra.len()).map(|r| f.column(r)).collect();
    for r1 in 0..ra.len() {
        for r2 in 0..ra.len() {
            for (y, sy) in xb.iter().enumerate() {
                for q in 1..=lab.multiplicity(ra[r1].irrep, ra[r2].irrep, sy.irrep) {
                    let mut lhs = Scalar::zero();
                    for e in ta.cell(r1, r2).iter().filter(|e| e.q == q) {
                        if ra[e.s].irrep == sy.irrep {
                            lhs += &e.c * &f.get(y, e.s);
                        }
                    }
                    let mut rhs = Scalar::zero();
                    for (x1, f1) in &cols[r1] {
                        for (x2, f2) in &cols[r2] {
                            let d = tb.coeff(*x1, *x2, y, q);
                            if !d.is_zero() {
                                rhs += &(&d * *f1) * *f2;
                            }
                        }
                    }
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
