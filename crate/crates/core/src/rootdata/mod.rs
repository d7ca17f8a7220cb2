//! Based root data, Weyl groups and the G2 datum.
//!
//! Characters and cocharacters are integer vectors in fixed bases of `X` and
//! `Y`; the pairing `<x, y>` is the dot product. The Weyl group acts on `X`
//! by integer matrices applied to column vectors.

mod affine;
mod classify;
mod datum;
mod g2;
mod weyl;

pub use affine::{AffineWeylElement, RankOneAffine};
pub use classify::{bad_primes, classify, CartanType};
pub use datum::{BasedRootDatum, Vector};
pub use g2::{g2_datum, g2_eval_charts, maximal_levi, EvalChart, MaximalLevi};
pub use weyl::{generate_weyl, WeylElement, WeylGroup, DEFAULT_GROWTH_BOUND};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("invalid root datum: {0}")]
    Invalid(String),
    #[error("Weyl group exceeds {0} elements; the root system is not finite")]
    NotFinite(usize),
    #[error("cannot classify the root system: {0}")]
    Unclassified(String),
    #[error("no such root: {0}")]
    NoSuchRoot(String),
}

pub type Result<T, E = RootDataError> = std::result::Result<T, E>;
