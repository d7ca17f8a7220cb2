//! Bernstein blocks of G2 attached to its maximal Levi subgroups.
//!
//! A [`BlockDescriptor`] records the data of a block (root length, depth,
//! twisted Levi sequence, characters). [`classify`] derives `W_O`, `R(O)`,
//! `#X_nr(M, sigma)` and the Hecke algebra presentations on the `G` and
//! `G^0` sides; [`emit_table`] regenerates the four summary tables.

mod classify;
mod descriptor;
mod table;

pub use classify::{
    check_ro_reduction, check_weyl_iso, classify, classify_with, plancherel_case_for, BlockClassification,
    ClassifyOptions, RState,
};
pub use descriptor::{BlockDescriptor, DepthClass, G0Kind, LOverF, Phi0};
pub use table::{
    canonical_descriptors, diff_against_golden, emit_classified, emit_table, family_of, render_text, table_document,
    Family, HeckeSummary, TableDocument, TableRow, SCHEMA_VERSION,
};

use thiserror::Error;

use crate::plancherel::PlancherelError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BlockError {
    #[error("invalid descriptor: {0}")]
    Invalid(String),
    #[error("descriptor matches no table row: {0}")]
    NoRow(String),
    #[error("row needs the assumption that p is good: {0}")]
    PrimeAssumption(String),
    #[error("golden table: {0}")]
    Golden(String),
    #[error(transparent)]
    Plancherel(#[from] PlancherelError),
}

pub type Result<T, E = BlockError> = std::result::Result<T, E>;
