//! The bigraded complex `Λ^p g* ⊗ Λ^q g` with its product, big bracket,
//! differential and cohomology.

mod bracket;
mod cohomology;
mod context;
mod element;

pub use bracket::{bracket, bracket_factored, bracket_gen};
pub use cohomology::{class_coords, cohomology, cohomology_with, Cohomology};
pub use context::{ComplexContext, Sl2Op};
pub use element::{Element, Gen, Mono, MAX_DIM};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CochainError {
    #[error("dimension {0} exceeds the supported maximum")]
    DimensionTooLarge(usize),
    #[error("mu is not a Lie structure of bidegree (2,1)")]
    NotALieBracket,
    #[error("operators do not satisfy the sl(2) relations")]
    InvalidSl2Action,
    #[error("context carries no sl(2) action")]
    NoSl2Action,
    #[error("element is not a cocycle")]
    NotACocycle,
    #[error("element is not of the expected bidegree")]
    WrongBidegree,
    #[error("representatives do not form a basis of cohomology: expected {expected}, got {got}")]
    NotABasis { expected: usize, got: usize },
}
