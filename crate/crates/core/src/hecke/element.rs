use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::{Coeff, LaurentExpr, Ring};

use super::{AffineHeckePresentation, HeckeError, Result, Word};

/// A finite sum `sum_w f_w * T_w` where `f_w` lies in the coefficient ring
/// of the presentation (Laurent in `v` and in `theta`). Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HeckeElement {
    ring: Ring,
    terms: BTreeMap<Word, LaurentExpr>,
}

fn coeff_ring() -> Ring {
    Ring::standard(&[])
}

impl HeckeElement {
    pub fn zero(p: &AffineHeckePresentation) -> Self {
        HeckeElement { ring: p.ring().clone(), terms: BTreeMap::new() }
    }

    pub fn one(p: &AffineHeckePresentation) -> Self {
        Self::from_part(p, vec![], LaurentExpr::one(p.ring()))
    }

    /// `f * T_w` for `f` in the coefficient ring of `p`.
    pub fn from_part(p: &AffineHeckePresentation, w: Word, f: LaurentExpr) -> Self {
        let mut e = Self::zero(p);
        e.add_part(w, f);
        e
    }

    pub fn theta(p: &AffineHeckePresentation, x: &[i64]) -> Self {
        Self::from_part(p, vec![], p.theta(x))
    }

    pub fn t(p: &AffineHeckePresentation, w: &[usize]) -> Result<Self> {
        p.check_word(w)?;
        Ok(Self::from_part(p, w.to_vec(), LaurentExpr::one(p.ring())))
    }

    /// `c * theta_x * T_w` with `c` a Laurent polynomial in `v` given as an
    /// expression of the ring `Q[v]`.
    pub fn basis(p: &AffineHeckePresentation, c: &LaurentExpr, x: &[i64], w: &[usize]) -> Result<Self> {
        p.check_word(w)?;
        let lifted = lift_coeff(p, c)?;
        Ok(Self::from_part(p, w.to_vec(), &lifted * &p.theta(x)))
    }

    pub(crate) fn add_part(&mut self, w: Word, f: LaurentExpr) {
        if f.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            Some(old) => {
                let sum = &old + &f;
                if !sum.is_zero() {
                    self.terms.insert(w, sum);
                }
            }
            None => {
                self.terms.insert(w, f);
            }
        }
    }

    pub fn parts(&self) -> impl Iterator<Item = (&Word, &LaurentExpr)> {
        self.terms.iter()
    }

    pub fn part(&self, w: &[usize]) -> Option<&LaurentExpr> {
        self.terms.get(w)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Basis expansion: `(x, w) -> coefficient in Q[v]`, ordered by word then
    /// lattice point.
    pub fn basis_terms(&self) -> BTreeMap<(Word, Vec<i64>), LaurentExpr> {
        let cr = coeff_ring();
        let mut out: BTreeMap<(Word, Vec<i64>), Vec<(Vec<i32>, Coeff)>> = BTreeMap::new();
        for (w, f) in &self.terms {
            for (e, c) in f.terms() {
                let x: Vec<i64> = e[1..].iter().map(|&a| i64::from(a)).collect();
                out.entry((w.clone(), x)).or_default().push((vec![e[0]], c.clone()));
            }
        }
        out.into_iter().map(|(k, t)| (k, LaurentExpr::from_terms(&cr, t))).collect()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(HeckeError::PresentationMismatch);
        }
        let mut out = self.clone();
        for (w, f) in &other.terms {
            out.add_part(w.clone(), f.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&LaurentExpr::integer(&self.ring, -1))
    }

    /// Left multiplication by a coefficient (which commutes with nothing but
    /// scalars in `v`; this is the left module structure).
    pub fn scale(&self, f: &LaurentExpr) -> Self {
        let mut out = HeckeElement { ring: self.ring.clone(), terms: BTreeMap::new() };
        for (w, g) in &self.terms {
            out.add_part(w.clone(), f * g);
        }
        out
    }

    /// Sets `v = value` (for instance `v = 1`, the group-algebra limit).
    pub fn specialize_v(&self, value: i64) -> Result<Self> {
        let c = Coeff::from_integer(value.into());
        let mut out = HeckeElement { ring: self.ring.clone(), terms: BTreeMap::new() };
        for (w, g) in &self.terms {
            out.add_part(w.clone(), g.specialize(0, &c)?);
        }
        Ok(out)
    }

    pub fn parse(p: &AffineHeckePresentation, s: &str) -> Result<Self> {
        parse_element(p, s)
    }
}

fn lift_coeff(p: &AffineHeckePresentation, c: &LaurentExpr) -> Result<LaurentExpr> {
    if c.ring().nvars() != 1 {
        return Err(HeckeError::InvalidPresentation(format!(
            "coefficient {c} must be a Laurent polynomial in v alone"
        )));
    }
    let n = p.ring().nvars();
    Ok(LaurentExpr::from_terms(
        p.ring(),
        c.terms()
            .map(|(e, x)| {
                let mut e2 = vec![0; n];
                e2[0] = e[0];
                (e2, x.clone())
            })
            .collect::<Vec<_>>(),
    ))
}

fn fmt_list(x: &[impl fmt::Display]) -> String {
    x.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.basis_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((w, x), c)) in terms.iter().enumerate() {
            let mut cs = c.display_q().to_string();
            let negative = c.is_monomial() && cs.starts_with('-');
            if negative {
                cs.remove(0);
            }
            if i > 0 {
                f.write_str(if negative { " - " } else { " + " })?;
            } else if negative {
                f.write_str("-")?;
            }
            if c.is_monomial() {
                if cs != "1" {
                    write!(f, "{cs}*")?;
                }
            } else {
                write!(f, "({cs})*")?;
            }
            write!(f, "θ[{}]·T[{}]", fmt_list(x), fmt_list(w))?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElement({self})")
    }
}

fn parse_err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(HeckeError::Parse { pos, msg: msg.into() })
}

/// Splits at top-level `+`/`-`, keeping the sign with the summand. A `-`
/// right after `^` belongs to an exponent.
fn summands(s: &str) -> Result<Vec<(usize, bool, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    let mut prev: Option<char> = None;
    let mut seen_content = false;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return parse_err(i, "unbalanced bracket");
                }
            }
            '+' | '-' if depth == 0 && prev != Some('^') => {
                if seen_content {
                    out.push((start, negative, &s[start..i]));
                    seen_content = false;
                    negative = c == '-';
                } else if c == '-' {
                    negative = !negative;
                }
                start = i + 1;
                prev = Some(c);
                continue;
            }
            _ => {}
        }
        if !c.is_whitespace() {
            seen_content = true;
            prev = Some(c);
        }
    }
    if depth != 0 {
        return parse_err(s.len(), "unbalanced bracket");
    }
    if seen_content {
        out.push((start, negative, &s[start..]));
    } else if !out.is_empty() || negative {
        return parse_err(s.len(), "dangling sign");
    }
    Ok(out)
}

fn parse_list(s: &str, at: usize) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().or_else(|_| parse_err(at, format!("bad integer {t:?}"))))
        .collect()
}

fn parse_element(p: &AffineHeckePresentation, s: &str) -> Result<HeckeElement> {
    let cr = coeff_ring();
    let mut out = HeckeElement::zero(p);
    for (start, negative, text) in summands(s)? {
        let basis_at = ["θ[", "theta[", "T["]
            .iter()
            .filter_map(|m| text.find(m))
            .min()
            .unwrap_or(text.len());
        let coeff_text = text[..basis_at].trim();
        let coeff_text = coeff_text
            .strip_suffix('*')
            .or_else(|| coeff_text.strip_suffix('·'))
            .unwrap_or(coeff_text)
            .trim();
        let mut c = if coeff_text.is_empty() {
            LaurentExpr::one(&cr)
        } else {
            LaurentExpr::parse(&cr, coeff_text).map_err(|e| HeckeError::Parse {
                pos: start,
                msg: format!("coefficient {coeff_text:?}: {e}"),
            })?
        };
        if negative {
            c = -c;
        }
        let mut rest = text[basis_at..].trim();
        let mut x = vec![0; p.lattice_rank()];
        let mut w: Word = Vec::new();
        let mut saw_theta = false;
        let mut saw_t = false;
        let at = start + basis_at;
        while !rest.is_empty() {
            let (is_theta, tail) = if let Some(t) = rest.strip_prefix("θ[") {
                (true, t)
            } else if let Some(t) = rest.strip_prefix("theta[") {
                (true, t)
            } else if let Some(t) = rest.strip_prefix("T[") {
                (false, t)
            } else {
                return parse_err(at, format!("unexpected {rest:?}"));
            };
            let Some(close) = tail.find(']') else {
                return parse_err(at, "missing ']'");
            };
            let list = parse_list(&tail[..close], at)?;
            if is_theta {
                if saw_theta || saw_t {
                    return parse_err(at, "θ must come once, before T");
                }
                if list.len() != p.lattice_rank() {
                    return parse_err(at, format!("θ needs {} coordinates", p.lattice_rank()));
                }
                x = list;
                saw_theta = true;
            } else {
                if saw_t {
                    return parse_err(at, "T may appear only once");
                }
                if list.iter().any(|&i| i < 0) {
                    return parse_err(at, "negative generator index");
                }
                w = list.into_iter().map(|i| i as usize).collect();
                saw_t = true;
            }
            rest = tail[close + 1..].trim_start();
            rest = rest
                .strip_prefix('·')
                .or_else(|| rest.strip_prefix('*'))
                .unwrap_or(rest)
                .trim_start();
        }
        let term = HeckeElement::basis(p, &c, &x, &w).map_err(|e| match e {
            HeckeError::BadWord(_) => HeckeError::Parse { pos: at, msg: e.to_string() },
            other => other,
        })?;
        out = out.checked_add(&term)?;
    }
    Ok(out)
}
