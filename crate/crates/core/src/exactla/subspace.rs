use alloc::vec::Vec;

use super::echelon::Echelon;
use super::matrix::{is_zero_vector, Matrix, Vector};
use super::scalar::Scalar;
use super::LinalgError;

/// A linear subspace of `Q^n`, stored by its reduced echelon basis.
///
/// Two subspaces are equal exactly when their stored bases are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_echelon(Matrix::identity(ambient).echelon())
    }

    pub fn from_spanning(ambient: usize, vectors: Vec<Vector>) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        Subspace::from_echelon(Matrix::from_rows_with_cols(vectors, ambient).echelon())
    }

    pub fn from_echelon(e: Echelon) -> Self {
        let ambient = e.cols();
        let pivots = e.pivots().to_vec();
        Subspace {
            ambient,
            basis: e.into_rows(),
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after clearing the pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.ambient, vs)
    }
}

/// Coordinates of `z` against `reps` modulo `w`: the unique `λ` with
/// `z - Σ λ_i reps_i ∈ w`.
///
/// `Ok(None)` when `z` lies outside `span(reps) + w`.
pub fn coords_modulo(z: &[Scalar], reps: &[Vector], w: &Subspace) -> Result<Option<Vector>, LinalgError> {
    let n = w.ambient_dim();
    if z.len() != n || reps.iter().any(|r| r.len() != n) {
        return Err(LinalgError::DimensionMismatch);
    }
    // Reducing modulo w first leaves a system in the complement of its pivots.
    let reduced: Vec<Vector> = reps.iter().map(|r| w.reduce(r)).collect();
    let target = w.reduce(z);
    let m = Matrix::from_cols(n, &reduced);
    if m.rank() < reps.len() {
        return Err(LinalgError::AmbiguousCoordinates);
    }
    Ok(super::matrix::solve(&m, &target).map(|s| s.particular))
}
