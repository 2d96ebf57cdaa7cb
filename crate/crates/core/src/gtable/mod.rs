//! Tables of equivariant products relative to a labeling, their expansion
//! back to structure constants, and the morphism criterion.

mod morphism;
mod plain;
mod table;

use alloc::string::String;

pub use morphism::{assemble, check_morphism, GMatrix};
pub use plain::{all_choices, corollary_check, occurring_triples, plain_algebra, plain_map, ChoiceQ, PlainAlgebra};
pub use table::{cotable, expand, expand_in_module, extract, extract_algebra, Entry, GTable, SummandInfo};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("product is not equivariant: generator {gen} on basis pair ({i}, {j})")]
    NotEquivariant { gen: usize, i: usize, j: usize },
    #[error("no coefficients reproduce the product on {r1} x {r2} in component {s}")]
    InconsistentSystem { r1: String, r2: String, s: String },
    #[error("intertwiners for {0} are linearly dependent")]
    AmbiguousSystem(String),
    #[error("dimensions of the product and the decompositions disagree")]
    DimensionMismatch,
    #[error("tables or decompositions use different groups or labelings")]
    LabelingMismatch,
    #[error("irrep {0} has no model in the labeling")]
    UnknownIrrep(String),
    #[error("invalid entry: {0}")]
    InvalidEntry(String),
    #[error("G-matrix does not respect the isotypic blocks: {0}")]
    ShapeMismatch(String),
    #[error("choice missing for triple {0}")]
    MissingChoice(String),
}
