use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::exactla::{Bilinear, Matrix, Scalar};
use crate::repkit::{IrrepId, Labeling, Triple};

use super::morphism::GMatrix;
use super::table::GTable;
use super::TableError;

/// One chosen intertwiner index (from 1) per triple.
pub type ChoiceQ = BTreeMap<Triple, usize>;

/// Registry triples whose three irreps all occur in `irreps`, with their
/// multiplicities.
pub fn occurring_triples(irreps: &[IrrepId], lab: &Labeling) -> Vec<(Triple, usize)> {
    let present: BTreeSet<IrrepId> = irreps.iter().copied().collect();
    lab.triples()
        .filter(|((a, b, c), _)| present.contains(a) && present.contains(b) && present.contains(c))
        .map(|(t, maps)| (*t, maps.len()))
        .collect()
}

/// Every choice over the given triples.
pub fn all_choices(triples: &[(Triple, usize)]) -> Vec<ChoiceQ> {
    let mut out = alloc::vec![ChoiceQ::new()];
    for &(t, d) in triples {
        out = out
            .into_iter()
            .flat_map(|q| {
                (1..=d).map(move |k| {
                    let mut q = q.clone();
                    q.insert(t, k);
                    q
                })
            })
            .collect();
    }
    out
}

/// `P(A, Q)`: one basis vector per summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlainAlgebra {
    ids: Vec<String>,
    constants: Bilinear,
}

impl PlainAlgebra {
    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn constants(&self) -> &Bilinear {
        &self.constants
    }

    /// `e_i · e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        self.constants.image(i, j)
    }

    /// Whether `phi` (columns indexed by this basis) is multiplicative into
    /// `other`.
    pub fn is_morphism_into(&self, other: &PlainAlgebra, phi: &Matrix) -> bool {
        let n = self.ids.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = phi.mul_vec(self.product(i, j));
                lhs == other.constants.eval(&phi.col(i), &phi.col(j))
            })
        })
    }
}

pub fn plain_algebra(t: &GTable, choice: &ChoiceQ, lab: &Labeling) -> Result<PlainAlgebra, TableError> {
    if t.has_separate_targets() {
        return Err(TableError::ShapeMismatch(
            "plain algebras need a table of an algebra".into(),
        ));
    }
    let irreps: Vec<IrrepId> = t.summands().iter().map(|s| s.irrep).collect();
    for (triple, _) in occurring_triples(&irreps, lab) {
        if !choice.contains_key(&triple) {
            return Err(TableError::MissingChoice(format!(
                "({}, {}, {})",
                triple.0, triple.1, triple.2
            )));
        }
    }
    let n = irreps.len();
    let mut constants = Bilinear::zero(n, n, n);
    for (r1, r2, e) in t.entries() {
        if choice[&(irreps[r1], irreps[r2], irreps[e.s])] == e.q {
            constants.image_mut(r1, r2)[e.s] += e.c.clone();
        }
    }
    Ok(PlainAlgebra {
        ids: t.summands().iter().map(|s| s.id.clone()).collect(),
        constants,
    })
}

/// `P(φ)`: the matrix `(f_{x,r})`.
pub fn plain_map(f: &GMatrix, source_len: usize, target_len: usize) -> Matrix {
    let mut m = Matrix::zeros(target_len, source_len);
    for (x, r, c) in f.entries() {
        m[(x, r)] = c.clone();
    }
    m
}

/// Whether `P(φ)` is a morphism `P(A, Q) → P(B, Q)` for every choice `Q`.
pub fn corollary_check(ta: &GTable, tb: &GTable, f: &GMatrix, lab: &Labeling) -> Result<bool, TableError> {
    f.check_shape(ta.summands(), tb.summands())?;
    let irreps: Vec<IrrepId> = ta.summands().iter().chain(tb.summands()).map(|s| s.irrep).collect();
    let phi = plain_map(f, ta.summands().len(), tb.summands().len());
    for choice in all_choices(&occurring_triples(&irreps, lab)) {
        let (pa, pb) = (plain_algebra(ta, &choice, lab)?, plain_algebra(tb, &choice, lab)?);
        if !pa.is_morphism_into(&pb, &phi) {
            return Ok(false);
        }
    }
    Ok(true)
}
