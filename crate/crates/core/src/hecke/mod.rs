//! Affine Hecke algebras of rank one in the Bernstein presentation.
//!
//! An algebra is given by a lattice `M` with group algebra spanned by
//! `theta_x`, an element `h` with `X = theta_h`, a reflection
//! `s(x) = x - <x, a> h` where `<h, a> = 2`, and labels `(lambda, lambda*)`.
//! Elements are finite sums `c * theta_x * T_w` with `w` in `{1, s}` and `c`
//! a Laurent polynomial in `v = q^(1/2)`.

mod element;
mod lusztig;
mod multiply;
mod presentation;
mod verify;

pub use element::HeckeElement;
pub use lusztig::{check_lusztig, default_allowed, parse_allowed, AllowedSet};
pub use multiply::multiply;
pub use presentation::{AffineHeckePresentation, CommutationRule, RGroup, WeightFunction, Word};
pub use verify::{verify_relations, verify_relations_with, RelationCheck, RelationReport, VerifyOptions};

use thiserror::Error;

use crate::exactalg::AlgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("finite Weyl group of order {0} is not supported; only rank-one parts (order <= 2)")]
    UnsupportedRank(usize),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("division in the Bernstein relation is not exact: {0}")]
    NonExactDivision(String),
    #[error("elements belong to different presentations")]
    PresentationMismatch,
    #[error("word {0:?} is not an element of the finite Weyl group")]
    BadWord(Vec<usize>),
    #[error("cannot parse Hecke element at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid Lusztig allowed set: {0}")]
    AllowedSet(String),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

pub type Result<T, E = HeckeError> = std::result::Result<T, E>;
