//! Group modules, labelings of their irreducibles, and decompositions.

mod decompose;
mod irrep;
mod labeling;
mod module;
pub mod s3;
pub mod slk;

use alloc::string::String;

pub use decompose::{
    decompose_s3, decompose_sl2, decompose_standard, decompose_trivial, highest_weight_vectors, hwv_weight,
    s3_isotypic_projector, s3_matrix_unit, Decomposition, Summand,
};
pub use irrep::{ActionKind, GlLabel, Group, IrrepId, S3Label};
pub use labeling::{poly_operators, sl2_matrices, v2_coords, v2_matrix, Labeling, Model, Triple};
pub use module::{first_equivariance_failure, is_equivariant_bilinear, is_equivariant_linear, GModule};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("H is not diagonalizable with integer eigenvalues")]
    NonDiagonalizableH,
    #[error("invalid module: {0}")]
    InvalidModule(&'static str),
    #[error("module and labeling belong to different groups")]
    WrongGroup,
    #[error("irrep {0} has no model in this labeling")]
    UnknownIrrep(IrrepId),
    #[error("embedding of summand `{0}` is not equivariant")]
    NotEquivariant(String),
    #[error("summand images do not form a direct sum of the module")]
    NotDirectSum,
    #[error("vector is not a highest weight vector")]
    NotHighestWeight,
    #[error("seed `{0}` does not lie in a single isotypic component")]
    SeedNotIsotypic(String),
}
