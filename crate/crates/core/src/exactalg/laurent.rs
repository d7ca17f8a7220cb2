use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{self, Terms};
use super::{AlgError, RationalExpr, Result, Ring};

pub type Coeff = BigRational;
pub type Exponents = Vec<i32>;

/// Finite sum of rational multiples of Laurent monomials.
///
/// Never stores zero coefficients. In a ring with `v^2 = q` the `q` slot (if
/// declared) is always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentExpr {
    ring: Ring,
    terms: BTreeMap<Exponents, Coeff>,
}

fn canonical(ring: &Ring, terms: impl IntoIterator<Item = (Exponents, Coeff)>) -> Terms {
    let n = ring.nvars();
    let fold = ring
        .sqrt_relation()
        .and_then(|rel| rel.square_slot.map(|s| (rel.root, s)));
    let mut out = Terms::new();
    for (mut e, c) in terms {
        assert_eq!(e.len(), n, "exponent vector length must match the ring");
        if let Some((root, sq)) = fold {
            e[root] += 2 * e[sq];
            e[sq] = 0;
        }
        poly::add_term(&mut out, e, c);
    }
    out
}

pub(crate) fn int(c: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(c))
}

impl LaurentExpr {
    pub fn zero(ring: &Ring) -> Self {
        LaurentExpr { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::monomial(ring, c, vec![0; ring.nvars()])
    }

    pub fn integer(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, int(c))
    }

    pub fn monomial(ring: &Ring, c: Coeff, exps: Exponents) -> Self {
        Self::from_terms(ring, [(exps, c)])
    }

    /// `c * name^power`; resolves the square of a square-root relation.
    pub fn var_power(ring: &Ring, name: &str, power: i32) -> Result<Self> {
        let mut e = vec![0; ring.nvars()];
        match ring.index_of(name) {
            Ok(i) => e[i] = power,
            Err(err) => match ring.sqrt_relation() {
                Some(rel) if rel.square == name => e[rel.root] = 2 * power,
                _ => return Err(err),
            },
        }
        Ok(Self::monomial(ring, Coeff::one(), e))
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self> {
        Self::var_power(ring, name, 1)
    }

    /// Builds a canonical expression; exponent vectors must have the ring's
    /// length.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Exponents, Coeff)>) -> Self {
        LaurentExpr { ring: ring.clone(), terms: canonical(ring, terms) }
    }

    pub(crate) fn from_raw(ring: &Ring, terms: Terms) -> Self {
        LaurentExpr { ring: ring.clone(), terms }
    }

    /// Re-applies the square-root elimination and drops zero coefficients.
    pub fn canonicalize(&self) -> Self {
        Self::from_terms(&self.ring, self.terms.iter().map(|(e, c)| (e.clone(), c.clone())))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub(crate) fn raw(&self) -> &Terms {
        &self.terms
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Coeff)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn coeff(&self, exps: &[i32]) -> Coeff {
        self.terms.get(exps).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Leading term in lexicographic order on declaration order.
    pub fn leading_term(&self) -> Option<(&Exponents, &Coeff)> {
        poly::lead(&self.terms)
    }

    pub fn min_exponents(&self) -> Exponents {
        poly::min_exponents(&self.terms, self.ring.nvars())
    }

    /// Smallest and largest exponent of one variable, `None` for zero.
    pub fn degree_range(&self, var: usize) -> Option<(i32, i32)> {
        let lo = self.terms.keys().map(|e| e[var]).min()?;
        let hi = self.terms.keys().map(|e| e[var]).max()?;
        Some((lo, hi))
    }

    /// Multiplies by the monomial `x^by`.
    pub fn shift(&self, by: &[i32]) -> Self {
        Self::from_raw(&self.ring, poly::shift(&self.terms, by))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self::from_raw(&self.ring, poly::scale(&self.terms, c))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(Self::from_raw(&self.ring, poly::add(&self.terms, &other.terms)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(Self::from_raw(&self.ring, poly::sub(&self.terms, &other.terms)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(Self::from_raw(&self.ring, poly::mul(&self.terms, &other.terms)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<RationalExpr> {
        RationalExpr::new(self.clone(), other.clone())
    }

    /// Quotient in the Laurent ring, or `NotDivisible`.
    pub fn exact_div(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        if other.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let ma = self.min_exponents();
        let mb = other.min_exponents();
        let neg = |m: &[i32]| m.iter().map(|x| -x).collect::<Vec<_>>();
        let a = poly::shift(&self.terms, &neg(&ma));
        let b = poly::shift(&other.terms, &neg(&mb));
        let q = poly::divide_exact(&a, &b)
            .ok_or_else(|| AlgError::NotDivisible(self.to_string(), other.to_string()))?;
        let diff: Vec<i32> = ma.iter().zip(&mb).map(|(x, y)| x - y).collect();
        Ok(Self::from_raw(&self.ring, poly::shift(&q, &diff)))
    }

    /// Integer power; negative exponents only for monomials.
    pub fn pow(&self, k: i32) -> Result<Self> {
        if k < 0 {
            if !self.is_monomial() {
                return Err(AlgError::NegativePowerOfSum(self.to_string()));
            }
            let (e, c) = self.terms.iter().next().expect("monomial");
            let inv = Self::monomial(&self.ring, c.recip(), e.iter().map(|x| -x).collect());
            return inv.pow(-k);
        }
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut k = k as u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Substitutes `x_var -> coeff * x^mono`. The image is a unit of the
    /// Laurent ring, so negative powers stay well defined.
    pub fn subs_monomial(&self, var: usize, coeff: &Coeff, mono: &[i32]) -> Result<Self> {
        if coeff.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let mut out = Terms::new();
        for (e, c) in &self.terms {
            let p = e[var];
            let mut e2 = e.clone();
            e2[var] = 0;
            for (x, m) in e2.iter_mut().zip(mono) {
                *x += p * m;
            }
            let factor = if p >= 0 {
                num_traits::pow(coeff.clone(), p as usize)
            } else {
                num_traits::pow(coeff.recip(), (-p) as usize)
            };
            poly::add_term(&mut out, e2, c * factor);
        }
        Ok(Self::from_terms(&self.ring, out))
    }

    /// Sets `x_var = value` for a nonzero rational value.
    pub fn specialize(&self, var: usize, value: &Coeff) -> Result<Self> {
        self.subs_monomial(var, value, &vec![0; self.ring.nvars()])
    }

    /// `x_var -> x_var^-1`.
    pub fn invert_var(&self, var: usize) -> Self {
        Self::from_raw(
            &self.ring,
            self.terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2[var] = -e2[var];
                    (e2, c.clone())
                })
                .collect(),
        )
    }

    /// True when every exponent of `var` is even.
    pub fn only_even_powers(&self, var: usize) -> bool {
        self.terms.keys().all(|e| e[var] % 2 == 0)
    }

    /// Wrapper whose `Display` writes even powers of the square-root variable
    /// as powers of its square, e.g. `1 - q^-1*X` instead of `1 - v^-2*X`.
    pub fn display_q(&self) -> super::parse::QDisplay<'_> {
        super::parse::QDisplay(self)
    }

    pub fn parse(ring: &Ring, s: &str) -> Result<Self> {
        let r = RationalExpr::parse(ring, s)?;
        r.as_laurent().ok_or_else(|| AlgError::NotLaurent(s.to_string()))
    }

    /// Positive leading coefficient check used by normalizations.
    pub(crate) fn leading_positive(&self) -> bool {
        self.leading_term().is_none_or(|(_, c)| c.is_positive())
    }
}

impl fmt::Debug for LaurentExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentExpr({self})")
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&LaurentExpr> for &LaurentExpr {
            type Output = LaurentExpr;
            /// Panics if the operands belong to different rings.
            fn $method(self, rhs: &LaurentExpr) -> LaurentExpr {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
        impl $trait for LaurentExpr {
            type Output = LaurentExpr;
            fn $method(self, rhs: LaurentExpr) -> LaurentExpr {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &LaurentExpr {
    type Output = LaurentExpr;
    fn neg(self) -> LaurentExpr {
        self.scale(&-Coeff::one())
    }
}

impl Neg for LaurentExpr {
    type Output = LaurentExpr;
    fn neg(self) -> LaurentExpr {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::standard(&["X"])
    }

    fn p(s: &str) -> LaurentExpr {
        LaurentExpr::parse(&ring(), s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("1 + v") * &p("1 - v"), p("1 - v^2"));
    }

    #[test]
    fn q_is_eliminated() {
        let r = Ring::new(&["v", "q", "X"]).unwrap().with_sqrt("v", "q").unwrap();
        let e = LaurentExpr::parse(&r, "1 - q*X").unwrap();
        let expected = LaurentExpr::parse(&r, "1 - v^2*X").unwrap();
        assert_eq!(e, expected);
        assert_eq!(e.coeff(&[2, 0, 1]), int(-1));
        assert_eq!(e.canonicalize(), e);
    }

    #[test]
    fn exact_division_laurent() {
        // (X - X^-1) / (1 - X^-2) = X
        assert_eq!(p("X - X^-1").exact_div(&p("1 - X^-2")).unwrap(), p("X"));
        assert!(matches!(
            p("X + 1").exact_div(&p("1 - X^-2")),
            Err(AlgError::NotDivisible(..))
        ));
        assert_eq!(p("1").exact_div(&p("0")), Err(AlgError::DivisionByZero));
    }

    #[test]
    fn negative_power() {
        assert_eq!(p("2*v*X").pow(-2).unwrap(), p("1/4*v^-2*X^-2"));
        assert!(p("1 + X").pow(-1).is_err());
        assert_eq!(p("1 + X").pow(0).unwrap(), p("1"));
    }

    #[test]
    fn substitution() {
        let x = 1;
        assert_eq!(p("1 - X + X^-2").invert_var(x), p("1 - X^-1 + X^2"));
        assert_eq!(p("1 - X").specialize(x, &int(1)).unwrap(), p("0"));
        assert_eq!(p("v^2 - 1").specialize(0, &int(1)).unwrap(), p("0"));
        assert_eq!(p("X^-1 + X").specialize(x, &int(-1)).unwrap(), p("-2"));
    }

    #[test]
    fn mismatched_rings() {
        let other = Ring::new(&["v", "Y"]).unwrap();
        let a = p("X");
        let b = LaurentExpr::var(&other, "Y").unwrap();
        assert!(matches!(a.checked_add(&b), Err(AlgError::RingMismatch { .. })));
    }
}
