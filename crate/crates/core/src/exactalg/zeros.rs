use std::collections::BTreeSet;
use std::fmt;

use super::{AlgError, LaurentExpr, RationalExpr, Result, Sign};

/// A point of the unit circle at which the formal factors can vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UnitPoint {
    Plus,
    Minus,
}

impl fmt::Display for UnitPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitPoint::Plus => "1",
            UnitPoint::Minus => "-1",
        })
    }
}

/// The factor `X - sign * v^v_power`, where `v` is the square-root variable
/// of the ring (or the first variable when there is none).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearFactor {
    pub sign: Sign,
    pub v_power: i32,
    pub multiplicity: u32,
}

impl LinearFactor {
    pub fn unit_point(&self) -> Option<UnitPoint> {
        (self.v_power == 0).then_some(match self.sign {
            Sign::Plus => UnitPoint::Plus,
            Sign::Minus => UnitPoint::Minus,
        })
    }
}

fn root_var(e: &LaurentExpr) -> usize {
    e.ring().sqrt_relation().map_or(0, |r| r.root)
}

/// Splits `e` into linear factors `X - ±v^k` times a remainder that has a
/// single power of `X`.
///
/// Fails with `UnrecognizedShape` if some other factor involving `X`
/// remains, or if `X` is the `v` slot itself.
pub fn split_linear_factors(e: &LaurentExpr, x: usize) -> Result<(Vec<LinearFactor>, LaurentExpr)> {
    let ring = e.ring().clone();
    let vi = root_var(e);
    if vi == x || e.is_zero() {
        return Err(AlgError::UnrecognizedShape(e.to_string()));
    }
    let span = match e.degree_range(vi) {
        Some((lo, hi)) => hi - lo,
        None => 0,
    };
    let mut rest = e.clone();
    let mut factors = Vec::new();
    for k in -span..=span {
        for sign in [Sign::Plus, Sign::Minus] {
            let mut mono = vec![0; ring.nvars()];
            mono[vi] = k;
            let mut lin = LaurentExpr::var_power(&ring, &ring.vars()[x], 1)?;
            lin = &lin - &LaurentExpr::monomial(&ring, sign.coeff(), mono.clone());
            let mut mult = 0;
            while rest.degree_range(x).is_some_and(|(lo, hi)| lo < hi)
                && rest.subs_monomial(x, &sign.coeff(), &mono)?.is_zero()
            {
                rest = rest.exact_div(&lin)?;
                mult += 1;
            }
            if mult > 0 {
                factors.push(LinearFactor { sign, v_power: k, multiplicity: mult });
            }
        }
    }
    match rest.degree_range(x) {
        Some((lo, hi)) if lo == hi => Ok((factors, rest)),
        _ => Err(AlgError::UnrecognizedShape(e.to_string())),
    }
}

/// Which of `X = 1`, `X = -1` are zeros of `f`, for `f` a product of factors
/// `1 ± c*X^±1` with `c` a signed power of `v`.
pub fn eval_unit_circle_zeros(f: &RationalExpr, var: &str) -> Result<BTreeSet<UnitPoint>> {
    let x = f.ring().index_of(var)?;
    if f.is_zero() {
        return Err(AlgError::UnrecognizedShape(f.to_string()));
    }
    let count = |e: &LaurentExpr| -> Result<Vec<(UnitPoint, i64)>> {
        if e.degree_range(x).is_some_and(|(lo, hi)| lo == hi) {
            return Ok(Vec::new());
        }
        let (fs, _) = split_linear_factors(e, x)?;
        Ok(fs
            .iter()
            .filter_map(|lf| lf.unit_point().map(|p| (p, lf.multiplicity as i64)))
            .collect())
    };
    let mut order = [0i64; 2];
    for (p, m) in count(f.numerator())? {
        order[p as usize] += m;
    }
    for (p, m) in count(f.denominator())? {
        order[p as usize] -= m;
    }
    let mut out = BTreeSet::new();
    if order[0] > 0 {
        out.insert(UnitPoint::Plus);
    }
    if order[1] > 0 {
        out.insert(UnitPoint::Minus);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Ring;

    fn ring() -> Ring {
        Ring::standard(&["c", "X"])
    }

    fn zeros(s: &str) -> Result<BTreeSet<UnitPoint>> {
        eval_unit_circle_zeros(&RationalExpr::parse(&ring(), s)?, "X")
    }

    #[test]
    fn constant_has_no_zeros() {
        assert!(zeros("c").unwrap().is_empty());
        assert!(zeros("3*v^2").unwrap().is_empty());
    }

    #[test]
    fn split_reports_multiplicity() {
        let e = LaurentExpr::parse(&ring(), "(1 - X)^2*(1 + q*X^-1)*c").unwrap();
        let (fs, rest) = split_linear_factors(&e, 2).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&LinearFactor { sign: Sign::Plus, v_power: 0, multiplicity: 2 }));
        assert!(fs.contains(&LinearFactor { sign: Sign::Minus, v_power: 2, multiplicity: 1 }));
        assert!(rest.is_monomial());
    }

    #[test]
    fn quadratic_irreducible_rejected() {
        assert!(matches!(zeros("1 + X^2"), Err(AlgError::UnrecognizedShape(_))));
        assert!(matches!(zeros("1 - 2*X"), Err(AlgError::UnrecognizedShape(_))));
    }

    #[test]
    fn denominator_cancels_order() {
        // numerator and denominator are reduced, so a pole at 1 is not a zero
        assert!(zeros("1/(1 - X)").unwrap().is_empty());
        assert_eq!(zeros("(1 + X)/(1 - q*X)").unwrap(), BTreeSet::from([UnitPoint::Minus]));
    }
}
