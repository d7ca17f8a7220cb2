//! Text form of expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '·' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)?
//! exponent := '-'? integer | '(' '-'? integer ')'
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Printing writes terms in descending monomial order, coefficient first,
//! e.g. `-1/2*v^2*X^-1 + 3`. Parsing the printed form gives back the same
//! expression.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{AlgError, LaurentExpr, RationalExpr, Result, Ring};

struct Parser<'a> {
    ring: &'a Ring,
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(AlgError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn expr(&mut self) -> Result<RationalExpr> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' | '-' => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = if c == '+' { acc.checked_add(&rhs)? } else { acc.checked_sub(&rhs)? };
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalExpr> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' | '·' => {
                    self.bump();
                    acc = acc.checked_mul(&self.unary()?)?;
                }
                '/' => {
                    self.bump();
                    let at = self.pos;
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(AlgError::Parse { pos: at, msg: "division by zero".into() });
                    }
                    acc = acc.checked_div(&rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalExpr> {
        if self.peek() == Some('-') {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].chars().take_while(|c| c.is_ascii_digit()).count();
        if len == 0 {
            return self.err("expected an integer");
        }
        self.pos += len;
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<i32> {
        let paren = self.peek() == Some('(');
        if paren {
            self.bump();
        }
        let neg = self.peek() == Some('-');
        if neg {
            self.bump();
        }
        let at = self.pos;
        let k = self.integer()?;
        let k: i32 = match i32::try_from(k) {
            Ok(k) => k,
            Err(_) => return Err(AlgError::Parse { pos: at, msg: "exponent too large".into() }),
        };
        if paren && self.bump() != Some(')') {
            return self.err("expected ')'");
        }
        Ok(if neg { -k } else { k })
    }

    fn power(&mut self) -> Result<RationalExpr> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let k = self.exponent()?;
            if k < 0 && base.is_zero() {
                return self.err("zero to a negative power");
            }
            return base.pow(k);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RationalExpr> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                if self.bump() != Some(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(LaurentExpr::constant(self.ring, BigRational::from_integer(n)).into())
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                let len: usize = self.src[start..]
                    .chars()
                    .take_while(|c| c.is_alphanumeric() || *c == '_')
                    .map(char::len_utf8)
                    .sum();
                self.pos += len;
                let name = &self.src[start..self.pos];
                match LaurentExpr::var(self.ring, name) {
                    Ok(e) => Ok(e.into()),
                    Err(_) => Err(AlgError::Parse {
                        pos: start,
                        msg: format!("unknown variable {name:?}"),
                    }),
                }
            }
            Some(c) => self.err(format!("unexpected {c:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub(crate) fn parse_rational(ring: &Ring, s: &str) -> Result<RationalExpr> {
    let mut p = Parser { ring, src: s, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

fn write_coeff_abs(out: &mut String, c: &BigRational) {
    let a = c.abs();
    if a.is_integer() {
        out.push_str(&a.numer().to_string());
    } else {
        out.push_str(&format!("{}/{}", a.numer(), a.denom()));
    }
}

/// Renders a term list. `names[i]` and `scale[i]` give the printed variable
/// and the divisor applied to its exponent.
fn render(e: &LaurentExpr, names: &[String], scale: &[i32]) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (exps, c)) in e.terms().rev().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors = Vec::new();
        for (k, &x) in exps.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = x / scale[k];
            if x == 1 {
                factors.push(names[k].clone());
            } else {
                factors.push(format!("{}^{}", names[k], x));
            }
        }
        let unit = c.abs().is_one();
        if !unit || factors.is_empty() {
            write_coeff_abs(&mut out, c);
            if !factors.is_empty() {
                out.push('*');
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

impl fmt::Display for LaurentExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scale = vec![1; self.ring().nvars()];
        f.write_str(&render(self, self.ring().vars(), &scale))
    }
}

/// See [`LaurentExpr::display_q`].
pub struct QDisplay<'a>(pub(crate) &'a LaurentExpr);

impl fmt::Display for QDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.0;
        let ring = e.ring();
        let mut names = ring.vars().to_vec();
        let mut scale = vec![1; ring.nvars()];
        if let Some(rel) = ring.sqrt_relation() {
            if e.only_even_powers(rel.root) {
                names[rel.root] = rel.square.clone();
                scale[rel.root] = 2;
            }
        }
        f.write_str(&render(e, &names, &scale))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::standard(&["X"])
    }

    fn roundtrip(s: &str) {
        let e = RationalExpr::parse(&ring(), s).unwrap();
        let printed = e.to_string();
        assert_eq!(RationalExpr::parse(&ring(), &printed).unwrap(), e, "{s} -> {printed}");
    }

    #[test]
    fn printing() {
        let e = LaurentExpr::parse(&ring(), "1 - q^-1*X").unwrap();
        assert_eq!(e.to_string(), "1 - v^-2*X");
        assert_eq!(e.display_q().to_string(), "1 - q^-1*X");
        let e = LaurentExpr::parse(&ring(), "-1/2 * v * X^(-1) + 3").unwrap();
        assert_eq!(e.to_string(), "-1/2*v*X^-1 + 3");
        assert_eq!(e.display_q().to_string(), "-1/2*v*X^-1 + 3");
    }

    #[test]
    fn roundtrips() {
        for s in [
            "0",
            "1",
            "-X",
            "(1 - X)*(1 - X^-1)/((1 - q^-1*X)*(1 - q^-1*X^-1))",
            "2/3*v^3 - 7*X^-4 + v*X",
            "1/(v + X)",
        ] {
            roundtrip(s);
        }
    }

    #[test]
    fn middle_dot_is_multiplication() {
        let a = RationalExpr::parse(&ring(), "v·X").unwrap();
        let b = RationalExpr::parse(&ring(), "v*X").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring();
        assert!(matches!(RationalExpr::parse(&r, "1 +"), Err(AlgError::Parse { pos: 3, .. })));
        assert!(matches!(RationalExpr::parse(&r, "Y"), Err(AlgError::Parse { pos: 0, .. })));
        assert!(matches!(RationalExpr::parse(&r, "(1"), Err(AlgError::Parse { .. })));
        assert!(matches!(RationalExpr::parse(&r, "1/0"), Err(AlgError::Parse { pos: 2, .. })));
        assert!(matches!(RationalExpr::parse(&r, "1 2"), Err(AlgError::Parse { .. })));
    }
}
