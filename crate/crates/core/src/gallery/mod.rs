//! Worked algebras with their expected tables.

mod examples;
mod gln;
mod heisenberg;
mod iso;

use alloc::string::String;

use crate::exactla::Scalar;
use crate::gtable::{GTable, SummandInfo, TableError};
use crate::repkit::{Labeling, RepError};
use crate::supercochain::CochainError;

pub use examples::{
    mk_algebra, mk_fixture, mk_table, poly_algebra, poly_fixture, poly_table, s3_algebra, s3_cotable,
    s3_cotable_fixture, s3_fixture, s3_table, sl3_algebra, sl3_fixture, sl3_printed_fixture, sl3_table, GalleryAlgebra,
};
pub use gln::{gln_algebra, gln_bracket_fixture, gln_product_fixture, gln_sl2_algebra, gln_tables, GlnGlnAb};
pub use heisenberg::{
    check_representatives, even_dimensions, heisenberg_bracket_fixture, heisenberg_context, heisenberg_cup_fixture,
    heisenberg_pipeline, printed_representatives, EvenCohomology, HeisenbergReport, RepresentativeCheck,
    REPRESENTATIVE_IDS,
};
pub use iso::{archived_isomorphism, find_isomorphism, verify_isomorphism};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GalleryError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Cochain(#[from] CochainError),
    #[error("{fixture}: cell ({r1}, {r2}) differs from the expected table")]
    FixtureMismatch { fixture: String, r1: String, r2: String },
    #[error("representative {0} fails its checks")]
    Representative(String),
    #[error("matrix sizes differ")]
    SizeMismatch,
    #[error("matrix is not traceless")]
    NotTraceless,
    #[error("no isomorphism found")]
    NotFound,
}

/// A fixture row: `(r1, r2, [(s, q, num, den)])`.
pub(crate) type Cell<'a> = (usize, usize, &'a [(usize, usize, i64, i64)]);

pub(crate) fn fixture_table(lab: &Labeling, summands: alloc::vec::Vec<SummandInfo>, cells: &[Cell]) -> GTable {
    let raw = cells
        .iter()
        .flat_map(|&(r1, r2, terms)| terms.iter().map(move |&(s, q, n, d)| (r1, r2, s, q, Scalar::new(n, d))));
    GTable::new(lab, summands, None, raw).expect("fixture entries are valid")
}

/// Compares an extracted table with its fixture.
pub fn compare(name: &str, got: &GTable, expected: &GTable) -> Result<(), GalleryError> {
    if got.summands() != expected.summands() {
        return Err(GalleryError::FixtureMismatch {
            fixture: name.into(),
            r1: "summands".into(),
            r2: "summands".into(),
        });
    }
    match got.first_difference(expected) {
        None => Ok(()),
        Some((r1, r2)) => Err(GalleryError::FixtureMismatch {
            fixture: name.into(),
            r1: got.summands()[r1].id.clone(),
            r2: got.summands()[r2].id.clone(),
        }),
    }
}
