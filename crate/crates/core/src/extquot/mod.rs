//! Twisted extended quotients on finite models of Bernstein orbits.
//!
//! The orbit of a cuspidal representation under unramified twists is a
//! complex torus; it is modeled by a finite torsor under `prod Z/n_i` (its
//! `n`-torsion) with the action of a group `Gamma` of order at most 2.
//! Equivariance statements are checked exactly at that finite level.

mod corpus;
mod matching;
mod model;
mod quotient;

pub use corpus::{block_models, involutions, model_for_block, paired_corpus, sweep_models, PairedModel, DEFAULT_TORSION};
pub use matching::{
    check_property, depth_zero_transfer, matching_bijection, PropertyVerdict, QuotientBijection, Transfer, Violation,
    ViolationKind,
};
pub use model::{Cocycle, FiniteOrbitModel, RawModel};
pub use quotient::{closed_form_count, crossed_product_irr_count, extended_quotient, ExtQuotPoint};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtQuotError {
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("invalid cocycle: {0}")]
    Cocycle(String),
    #[error("equivariance fails: {0}")]
    Property(Violation),
    #[error("cocycle tables differ {0}")]
    CocycleMismatch(String),
    #[error("stabilizers differ: {0}")]
    StabilizerMismatch(String),
    #[error("not a bijection: {0}")]
    NotBijective(String),
    #[error("R(O) is unknown for this block, so W(M, O) cannot be modeled")]
    UnknownRGroup,
}

pub type Result<T, E = ExtQuotError> = std::result::Result<T, E>;
