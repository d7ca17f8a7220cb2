//! Exact symbolic arithmetic over the rationals.
//!
//! Expressions live in a [`Ring`] that declares its variables once. A
//! [`LaurentExpr`] is a finite sum of rational multiples of Laurent monomials;
//! a [`RationalExpr`] is a reduced quotient of two of them. A ring may carry a
//! square-root relation `v^2 = q`, in which case `q` is always eliminated in
//! favour of `v`.
//!
//! Monomials are ordered lexicographically on the declaration order of the
//! ring's variables. This order determines leading terms, the printed order
//! of terms and the normalization of denominators.

mod laurent;
mod parse;
mod poly;
mod rational;
mod ring;
mod units;
mod zeros;

pub use laurent::{Coeff, Exponents, LaurentExpr};
pub use rational::RationalExpr;
pub use ring::{Ring, SqrtRelation};
pub use units::{Sign, UnitConstant};
pub use zeros::{eval_unit_circle_zeros, split_linear_factors, LinearFactor, UnitPoint};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgError {
    #[error("a ring needs at least one variable")]
    EmptyRing,
    #[error("duplicate variable name {0:?}")]
    DuplicateVariable(String),
    #[error("invalid variable name {0:?}")]
    InvalidVariableName(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("expressions belong to different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not divisible by {1}")]
    NotDivisible(String, String),
    #[error("{0} is not a Laurent polynomial")]
    NotLaurent(String),
    #[error("cannot raise the non-monomial {0} to a negative power")]
    NegativePowerOfSum(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("expression {0} is not a product of factors (1 +- c*X^+-1)")]
    UnrecognizedShape(String),
}

pub type Result<T, E = AlgError> = std::result::Result<T, E>;

/// The four ring operations accepted by [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to two rational expressions of the same ring.
///
/// Laurent operands can be lifted with `RationalExpr::from`; the result is
/// always reduced.
pub fn arith(a: &RationalExpr, b: &RationalExpr, op: Op) -> Result<RationalExpr> {
    match op {
        Op::Add => a.checked_add(b),
        Op::Sub => a.checked_sub(b),
        Op::Mul => a.checked_mul(b),
        Op::Div => a.checked_div(b),
    }
}
