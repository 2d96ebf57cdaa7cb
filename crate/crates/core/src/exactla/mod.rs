//! Exact linear algebra over the rationals.

mod bilinear;
mod echelon;
mod matrix;
mod scalar;
mod subspace;

pub use bilinear::Bilinear;
pub use echelon::{Echelon, Strategy, SPARSE_THRESHOLD};
pub use matrix::{
    add, axpy, is_zero_vector, scale, solve, sub, unit_vector, vec_from_i64, zero_vector, Matrix, SolveResult, Vector,
};
pub use scalar::{q, ParseScalarError, Scalar};
pub use subspace::{coords_modulo, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("vector lengths do not match the ambient dimension")]
    DimensionMismatch,
    #[error("representatives are linearly dependent modulo the subspace")]
    AmbiguousCoordinates,
}
