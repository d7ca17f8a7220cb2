use std::fmt;

use num_traits::One;

use super::laurent::Coeff;
use super::poly;
use super::{AlgError, LaurentExpr, Result, Ring};

/// Reduced quotient of Laurent polynomials.
///
/// Canonical form: numerator and denominator share no non-unit factor, the
/// denominator is an honest polynomial divisible by no variable, and its
/// lexicographic leading coefficient is 1. Two equal rational functions
/// therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalExpr {
    num: LaurentExpr,
    den: LaurentExpr,
}

impl RationalExpr {
    pub fn new(num: LaurentExpr, den: LaurentExpr) -> Result<Self> {
        num.ring().check_same(den.ring())?;
        if den.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let ring = num.ring().clone();
        if num.is_zero() {
            return Ok(RationalExpr { den: LaurentExpr::one(&ring), num });
        }
        let n = ring.nvars();
        let mn = num.min_exponents();
        let md = den.min_exponents();
        let neg = |m: &[i32]| m.iter().map(|x| -x).collect::<Vec<_>>();
        let np = poly::shift(num.raw(), &neg(&mn));
        let dp = poly::shift(den.raw(), &neg(&md));
        let g = poly::gcd(&np, &dp, n);
        let np = poly::divide_exact(&np, &g).expect("gcd divides numerator");
        let dp = poly::divide_exact(&dp, &g).expect("gcd divides denominator");
        let lc = poly::lead(&dp).expect("nonzero denominator").1.recip();
        let np = poly::scale(&np, &lc);
        let dp = poly::scale(&dp, &lc);
        let diff: Vec<i32> = mn.iter().zip(&md).map(|(x, y)| x - y).collect();
        Ok(RationalExpr {
            num: LaurentExpr::from_raw(&ring, poly::shift(&np, &diff)),
            den: LaurentExpr::from_raw(&ring, dp),
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        LaurentExpr::zero(ring).into()
    }

    pub fn one(ring: &Ring) -> Self {
        LaurentExpr::one(ring).into()
    }

    pub fn ring(&self) -> &Ring {
        self.num.ring()
    }

    pub fn numerator(&self) -> &LaurentExpr {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentExpr {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this equals, if the denominator is 1.
    pub fn as_laurent(&self) -> Option<LaurentExpr> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        let n = self.num.checked_mul(&o.den)? + &o.num * &self.den;
        Self::new(n, &self.den * &o.den)
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        let n = self.num.checked_mul(&o.den)? - &o.num * &self.den;
        Self::new(n, &self.den * &o.den)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        Self::new(self.num.checked_mul(&o.num)?, &self.den * &o.den)
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Self::new(self.num.checked_mul(&o.den)?, &self.den * &o.num)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn neg(&self) -> Self {
        RationalExpr { num: -&self.num, den: self.den.clone() }
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one(self.ring());
        for _ in 0..k.unsigned_abs() {
            acc = acc.checked_mul(&base)?;
        }
        Ok(acc)
    }

    pub fn invert_var(&self, var: usize) -> Result<Self> {
        Self::new(self.num.invert_var(var), self.den.invert_var(var))
    }

    pub fn subs_monomial(&self, var: usize, coeff: &Coeff, mono: &[i32]) -> Result<Self> {
        Self::new(
            self.num.subs_monomial(var, coeff, mono)?,
            self.den.subs_monomial(var, coeff, mono)?,
        )
    }

    /// `self / other` when that ratio is a nonzero constant.
    pub fn constant_ratio(&self, other: &Self) -> Option<Coeff> {
        let r = self.checked_div(other).ok()?;
        r.as_laurent()?.as_constant()
    }

    pub fn parse(ring: &Ring, s: &str) -> Result<Self> {
        super::parse::parse_rational(ring, s)
    }

    pub fn display_q(&self) -> RationalQDisplay<'_> {
        RationalQDisplay(self)
    }
}

impl From<LaurentExpr> for RationalExpr {
    fn from(num: LaurentExpr) -> Self {
        let den = LaurentExpr::one(num.ring());
        let r = RationalExpr { num, den };
        debug_assert!(r.den.leading_positive());
        r
    }
}

fn write_ratio(
    f: &mut fmt::Formatter<'_>,
    r: &RationalExpr,
    show: impl Fn(&LaurentExpr) -> String,
) -> fmt::Result {
    if r.den.as_constant().is_some_and(|c| c.is_one()) {
        return f.write_str(&show(&r.num));
    }
    write!(f, "({})/({})", show(&r.num), show(&r.den))
}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ratio(f, self, |e| e.to_string())
    }
}

impl fmt::Debug for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalExpr({self})")
    }
}

pub struct RationalQDisplay<'a>(&'a RationalExpr);

impl fmt::Display for RationalQDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.0;
        let q_ok = match r.ring().sqrt_relation() {
            Some(rel) => r.num.only_even_powers(rel.root) && r.den.only_even_powers(rel.root),
            None => false,
        };
        if q_ok {
            write_ratio(f, r, |e| e.display_q().to_string())
        } else {
            write!(f, "{r}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::standard(&["X"])
    }

    fn r(s: &str) -> RationalExpr {
        RationalExpr::parse(&ring(), s).unwrap()
    }

    #[test]
    fn cancellation() {
        let a = r("(1 - X)*(1 - X^-1)");
        let b = r("1 - X");
        assert_eq!(a.checked_div(&b).unwrap(), r("1 - X^-1"));
        assert!(a.checked_div(&b).unwrap().as_laurent().is_some());
    }

    #[test]
    fn canonical_denominator() {
        let x = r("1/(1 - X^-1)");
        assert_eq!(x.denominator(), &LaurentExpr::parse(&ring(), "X - 1").unwrap());
        assert_eq!(x.numerator(), &LaurentExpr::parse(&ring(), "X").unwrap());
        // same function written differently
        assert_eq!(x, r("(2*X)/(2*X - 2)"));
        assert_eq!(r("(-X)/(1 - X)"), x);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(r("1").checked_div(&r("0")), Err(AlgError::DivisionByZero));
        assert!(RationalExpr::parse(&ring(), "1/(X - X)").is_err());
    }

    #[test]
    fn times_denominator_recovers() {
        let f = r("(1 + v*X)*(3 - X^2)");
        let g = r("(1 - v^2*X)*(1 + X)");
        assert_eq!(f.checked_div(&g).unwrap().checked_mul(&g).unwrap(), f);
    }

    #[test]
    fn q_display() {
        let e = r("(1 - q^-1*X)/(1 + q*X)");
        assert_eq!(e.display_q().to_string(), "(1 - q^-1*X)/(q*X + 1)");
    }
}
