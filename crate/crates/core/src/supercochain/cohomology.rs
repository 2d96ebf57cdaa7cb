use alloc::vec::Vec;

use crate::exactla::{coords_modulo, LinalgError, Subspace, Vector};

use super::context::ComplexContext;
use super::element::Element;
use super::CochainError;

/// `H^{p,q}` as chosen cocycle representatives together with the
/// boundaries and cocycles of `C^{p,q}`, in the monomial coordinates of
/// [`ComplexContext::basis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cohomology {
    p: usize,
    q: usize,
    reps: Vec<Element>,
    rep_vectors: Vec<Vector>,
    boundary: Subspace,
    cocycles: Subspace,
}

fn boundaries_and_cocycles(ctx: &ComplexContext, p: usize, q: usize) -> (Subspace, Subspace) {
    let boundary = if p == 0 {
        Subspace::zero(ctx.basis(p, q).len())
    } else {
        ctx.d_matrix(p - 1, q).column_space()
    };
    (boundary, ctx.d_matrix(p, q).kernel())
}

/// Cohomology of bidegree `(p, q)` with echelon-canonical representatives:
/// the cocycle basis vectors that are new modulo the boundaries, in order.
pub fn cohomology(ctx: &ComplexContext, p: usize, q: usize) -> Cohomology {
    let (boundary, cocycles) = boundaries_and_cocycles(ctx, p, q);
    let mut span = boundary.clone();
    let mut rep_vectors = Vec::new();
    for z in cocycles.basis() {
        if !span.contains(z) {
            span = span.sum(&Subspace::from_spanning(span.ambient_dim(), alloc::vec![z.clone()]));
            rep_vectors.push(z.clone());
        }
    }
    let reps = rep_vectors.iter().map(|v| ctx.from_vector(v, p, q)).collect();
    Cohomology {
        p,
        q,
        reps,
        rep_vectors,
        boundary,
        cocycles,
    }
}

/// Cohomology of bidegree `(p, q)` with caller-supplied representatives,
/// which must be cocycles forming a basis modulo the boundaries.
pub fn cohomology_with(
    ctx: &ComplexContext,
    p: usize,
    q: usize,
    reps: Vec<Element>,
) -> Result<Cohomology, CochainError> {
    let (boundary, cocycles) = boundaries_and_cocycles(ctx, p, q);
    let mut rep_vectors = Vec::with_capacity(reps.len());
    for r in &reps {
        if r.terms().any(|(m, _)| m.p() != p || m.q() != q) {
            return Err(CochainError::WrongBidegree);
        }
        let v = ctx.to_vector(r, p, q);
        if !cocycles.contains(&v) {
            return Err(CochainError::NotACocycle);
        }
        rep_vectors.push(v);
    }
    let expected = cocycles.dim() - boundary.dim();
    let mut cols = boundary.basis().to_vec();
    cols.extend(rep_vectors.iter().cloned());
    let span = Subspace::from_spanning(boundary.ambient_dim(), cols);
    if reps.len() != expected || span.dim() != cocycles.dim() {
        return Err(CochainError::NotABasis {
            expected,
            got: reps.len(),
        });
    }
    Ok(Cohomology {
        p,
        q,
        reps,
        rep_vectors,
        boundary,
        cocycles,
    })
}

impl Cohomology {
    pub fn bidegree(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Element] {
        &self.reps
    }

    pub fn boundary(&self) -> &Subspace {
        &self.boundary
    }

    pub fn cocycles(&self) -> &Subspace {
        &self.cocycles
    }

    /// Coordinates of the class of the cocycle `z` on the representatives.
    pub fn class_coords(&self, ctx: &ComplexContext, z: &Element) -> Result<Vector, CochainError> {
        if z.terms().any(|(m, _)| m.p() != self.p || m.q() != self.q) {
            return Err(CochainError::WrongBidegree);
        }
        if !ctx.differential(z).is_zero() {
            return Err(CochainError::NotACocycle);
        }
        class_coords(&ctx.to_vector(z, self.p, self.q), &self.rep_vectors, &self.boundary)
    }
}

/// Coordinates of a cocycle vector modulo `boundary`.
pub fn class_coords(
    z: &[crate::exactla::Scalar],
    reps: &[Vector],
    boundary: &Subspace,
) -> Result<Vector, CochainError> {
    match coords_modulo(z, reps, boundary) {
        Ok(Some(c)) => Ok(c),
        Ok(None) => unreachable!("representatives span the cohomology"),
        Err(LinalgError::DimensionMismatch) => Err(CochainError::WrongBidegree),
        Err(LinalgError::AmbiguousCoordinates) => Err(CochainError::NotABasis {
            expected: reps.len(),
            got: reps.len(),
        }),
    }
}
