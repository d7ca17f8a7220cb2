//! Plancherel `mu`-functions for the maximal Levi subgroups of G2.
//!
//! Each case assembles `mu` from blocks of the shape
//! `(1 - Y)(1 - Y^-1) / ((1 - Q^-1 Y)(1 - Q^-1 Y^-1))` in `z = q^-s`, then
//! rewrites it in the variable `X` of the rank-one Silberger form
//!
//! ```text
//! c * (1 - X)(1 - X^-1) / ((1 - qa^-1 X)(1 - qa^-1 X^-1))
//!   * (1 + X)(1 + X^-1) / ((1 + qb^-1 X)(1 + qb^-1 X^-1))
//! ```
//!
//! from which `(q_alpha, q_alpha*) = (qa, qb)` are read off. The positive
//! prefactor `c` is an opaque variable.

mod case;
mod mu;

pub use case::{expected_case, CaseId, CharData, FieldData, PlancherelCase, RootKind};
pub use mu::{labels, matching_residual, mu, mu_ring, raw_ring, solve_matching, weyl_from_zeros, MatchingVerdict, MuFunction, Substitution, WeylOrder};

use thiserror::Error;

use crate::exactalg::AlgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlancherelError {
    #[error("inconsistent case data: {0}")]
    Inconsistent(String),
    #[error("unknown case {0:?}")]
    UnknownCase(String),
    #[error("the matching equation has no solution: {0}")]
    Unsolvable(String),
    #[error("expression is not in Silberger normal form: {0}")]
    NotSilberger(String),
    #[error("parameter {0} is not an integer power of q")]
    NotIntegerPower(String),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

pub type Result<T, E = PlancherelError> = std::result::Result<T, E>;

/// `q^(k/2)` written as a power of `q` where possible: `1`, `q`, `q^2`,
/// otherwise `v^k`.
pub fn q_power_string(v_exp: i32) -> String {
    match v_exp {
        0 => "1".into(),
        2 => "q".into(),
        k if k % 2 == 0 => format!("q^{}", k / 2),
        k => format!("v^{k}"),
    }
}
