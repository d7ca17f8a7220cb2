use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::exactalg::{eval_unit_circle_zeros, split_linear_factors, Coeff, LaurentExpr, RationalExpr, Ring, Sign};
use crate::hecke::WeightFunction;

use super::{q_power_string, CaseId, PlancherelCase, PlancherelError, Result};

const V: usize = 0;
const C: usize = 1;
const X: usize = 2;

/// `Q[v, c, z]` with `z = q^-s`.
pub fn raw_ring() -> Ring {
    Ring::standard(&["c", "z"])
}

/// `Q[v, c, X]`, the ring of the Silberger form.
pub fn mu_ring() -> Ring {
    Ring::standard(&["c", "X"])
}

/// The identification `X = sign * z^power`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Substitution {
    pub sign: Sign,
    pub power: u32,
    pub text: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeylOrder {
    #[serde(rename = "trivial")]
    Trivial,
    #[serde(rename = "order-2")]
    Order2,
}

impl fmt::Display for WeylOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeylOrder::Trivial => "trivial",
            WeylOrder::Order2 => "order-2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuFunction {
    case: Option<CaseId>,
    raw: Option<RationalExpr>,
    substitution: Option<Substitution>,
    expr: RationalExpr,
    q_alpha_v: i32,
    q_alpha_star_v: i32,
}

impl MuFunction {
    /// Reads `(q_alpha, q_alpha*)` off an expression in [`mu_ring`],
    /// checking that it has Silberger form with a monomial positive
    /// prefactor.
    pub fn from_expr(expr: RationalExpr) -> Result<Self> {
        if expr.ring() != &mu_ring() {
            return Err(PlancherelError::NotSilberger(format!("{expr} is not in Q[v, c, X]")));
        }
        let not = || PlancherelError::NotSilberger(expr.display_q().to_string());
        let den = expr.denominator();
        let (plus, minus) = if den.degree_range(X).is_some_and(|(lo, hi)| lo < hi) {
            let (factors, _) = split_linear_factors(den, X).map_err(|_| not())?;
            let mut plus = BTreeSet::new();
            let mut minus = BTreeSet::new();
            for lf in factors {
                match lf.sign {
                    Sign::Plus => plus.insert(lf.v_power.abs()),
                    Sign::Minus => minus.insert(lf.v_power.abs()),
                };
            }
            (plus, minus)
        } else {
            (BTreeSet::new(), BTreeSet::new())
        };
        let single = |s: &BTreeSet<i32>| -> Result<i32> {
            match s.len() {
                0 => Ok(0),
                1 => Ok(*s.iter().next().expect("one element")),
                _ => Err(not()),
            }
        };
        let (a, b) = (single(&plus)?, single(&minus)?);
        if plus.contains(&0) || minus.contains(&0) {
            return Err(not());
        }
        let ratio = expr.checked_div(&silberger(a, b))?.as_laurent().ok_or_else(not)?;
        let prefactor_ok = ratio.is_monomial()
            && ratio.degree_range(X) == Some((0, 0))
            && ratio.leading_term().is_some_and(|(_, c)| c.is_positive());
        if !prefactor_ok {
            return Err(not());
        }
        Ok(MuFunction { case: None, raw: None, substitution: None, expr, q_alpha_v: a, q_alpha_star_v: b })
    }

    pub fn case(&self) -> Option<CaseId> {
        self.case
    }

    /// The assembled product in `z = q^-s`, before the change of variable.
    pub fn raw(&self) -> Option<&RationalExpr> {
        self.raw.as_ref()
    }

    pub fn substitution(&self) -> Option<&Substitution> {
        self.substitution.as_ref()
    }

    pub fn expr(&self) -> &RationalExpr {
        &self.expr
    }

    /// `(q_alpha, q_alpha*)` as exponents of `v = q^(1/2)`.
    pub fn v_exponents(&self) -> (i32, i32) {
        (self.q_alpha_v, self.q_alpha_star_v)
    }

    /// `(q_alpha, q_alpha*)` as exponents of `q`, when integral.
    pub fn q_exponents(&self) -> Result<(u32, u32)> {
        let half = |k: i32| -> Result<u32> {
            if k % 2 == 0 && k >= 0 {
                Ok((k / 2) as u32)
            } else {
                Err(PlancherelError::NotIntegerPower(q_power_string(k)))
            }
        };
        Ok((half(self.q_alpha_v)?, half(self.q_alpha_star_v)?))
    }

    /// The Silberger form with the extracted parameters, e.g.
    /// `c * (1 - X)(1 - X^-1)/((1 - q^-1*X)(1 - q^-1*X^-1))`.
    pub fn factored(&self) -> String {
        let mut s = String::from("c");
        let block = |sign: char, k: i32| -> String {
            let qinv = match k {
                2 => "q^-1".to_string(),
                k if k % 2 == 0 => format!("q^-{}", k / 2),
                k => format!("v^-{k}"),
            };
            format!(
                " * (1 {sign} X)(1 {sign} X^-1)/((1 {sign} {qinv}*X)(1 {sign} {qinv}*X^-1))"
            )
        };
        if self.q_alpha_v != 0 {
            s.push_str(&block('-', self.q_alpha_v));
        }
        if self.q_alpha_star_v != 0 {
            s.push_str(&block('+', self.q_alpha_star_v));
        }
        s
    }
}

impl fmt::Display for MuFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr.display_q())
    }
}

fn lin(ring: &Ring, c: Coeff, exps: [i32; 3]) -> LaurentExpr {
    LaurentExpr::monomial(ring, c, exps.to_vec())
}

/// `(1 - Y)(1 - Y^-1) / ((1 - Q^-1 Y)(1 - Q^-1 Y^-1))` with
/// `Y = sign * var^k` and `Q = v^qv`.
fn block(ring: &Ring, var: usize, sign: Sign, k: i32, qv: i32) -> RationalExpr {
    let one = LaurentExpr::one(ring);
    let mut e = [0; 3];
    e[var] = k;
    let y = lin(ring, sign.coeff(), e);
    e[var] = -k;
    let y_inv = lin(ring, sign.coeff(), e);
    let q_inv = lin(ring, Coeff::one(), [-qv, 0, 0]);
    let num = &(&one - &y) * &(&one - &y_inv);
    let den = &(&one - &(&q_inv * &y)) * &(&one - &(&q_inv * &y_inv));
    RationalExpr::new(num, den).expect("nonzero denominator")
}

/// The Silberger form with `c = 1` and parameters `v^a`, `v^b`.
fn silberger(a: i32, b: i32) -> RationalExpr {
    let ring = mu_ring();
    let mut out = RationalExpr::one(&ring);
    if a != 0 {
        out = out.checked_mul(&block(&ring, X, Sign::Plus, 1, a)).expect("same ring");
    }
    if b != 0 {
        out = out.checked_mul(&block(&ring, X, Sign::Minus, 1, b)).expect("same ring");
    }
    out
}

/// The residual `omega(pi) z^2 + chi^2chi'^-1(pi_L) z^f` of the long-I
/// matching equation, in `Q[v, c, z]`.
pub fn matching_residual(case: &PlancherelCase) -> LaurentExpr {
    let ring = raw_ring();
    let f = i32::from(case.field().f);
    &lin(&ring, case.omega().coeff(), [0, 0, 2]) + &lin(&ring, case.chi_unit().coeff(), [0, 0, f])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingVerdict {
    pub solvable: bool,
    /// The residual of the matching equation, zero iff solvable.
    pub residual: String,
}

/// Whether `X = omega(pi) q^-2s` and `X = -chi^2chi'^-1(pi_L) q_L^-s` agree
/// identically in `s`.
pub fn solve_matching(case: &PlancherelCase) -> MatchingVerdict {
    let r = matching_residual(case);
    MatchingVerdict { solvable: r.is_zero(), residual: r.display_q().to_string() }
}

/// Rewrites `e` in `X = sign * z^k`, which needs every power of `z` to be a
/// multiple of `k`.
fn change_variable(e: &LaurentExpr, sub: &Substitution, target: &Ring) -> Result<LaurentExpr> {
    let k = sub.power as i32;
    let mut terms = Vec::new();
    for (exps, c) in e.terms() {
        if exps[X] % k != 0 {
            return Err(PlancherelError::NotSilberger(format!(
                "{} is not a function of z^{k}",
                e.display_q()
            )));
        }
        let m = exps[X] / k;
        let mut c = c.clone();
        if sub.sign == Sign::Minus && m % 2 != 0 {
            c = -c;
        }
        terms.push((vec![exps[V], exps[C], m], c));
    }
    Ok(LaurentExpr::from_terms(target, terms))
}

/// Assembles `mu` for the case and extracts its parameters.
pub fn mu(case: &PlancherelCase) -> Result<MuFunction> {
    let ring = raw_ring();
    let f = i32::from(case.field().f);
    let omega = case.omega().value();
    let chi = case.chi_unit().value();
    let f_block = || block(&ring, X, omega, 2, 2);
    let l_block = || block(&ring, X, chi, f, 2 * f);
    let sub = |sign: Sign, power: u32, text: &str| Substitution { sign, power, text: text.to_string() };
    let (blocks, substitution) = match case.case_id() {
        CaseId::LongI => {
            let v = solve_matching(case);
            if !v.solvable {
                return Err(PlancherelError::Unsolvable(format!(
                    "{} = 0 with f(L/F) = {f}",
                    v.residual
                )));
            }
            (vec![f_block(), l_block()], Some(sub(omega, 2, "X = omega(pi) q^-2s = -chi^2chi'^-1(pi_L) q_L^-s")))
        }
        CaseId::LongII => (vec![l_block()], Some(sub(chi, f as u32, "X = chi^2chi'^-1(pi_L) q_L^-s"))),
        CaseId::LongIII | CaseId::ShortI => (vec![f_block()], Some(sub(omega, 2, "X = omega(pi) q^-2s"))),
        CaseId::LongIV | CaseId::ShortII => (vec![], None),
    };
    let mut raw = RationalExpr::new(LaurentExpr::var(&ring, "c")?, LaurentExpr::one(&ring))?;
    for b in &blocks {
        raw = raw.checked_mul(b)?;
    }
    let target = mu_ring();
    let identity = Substitution { sign: Sign::Plus, power: 1, text: String::new() };
    let s = substitution.as_ref().unwrap_or(&identity);
    let expr = RationalExpr::new(
        change_variable(raw.numerator(), s, &target)?,
        change_variable(raw.denominator(), s, &target)?,
    )?;
    let mut m = MuFunction::from_expr(expr)?;
    let (a, b) = m.q_exponents()?;
    if a > 2 || b > 2 {
        return Err(PlancherelError::NotSilberger(format!("parameters ({}, {})", a, b)));
    }
    m.case = Some(case.case_id());
    m.raw = Some(raw);
    m.substitution = substitution;
    Ok(m)
}

/// `lambda = log_q(q_alpha q_alpha*)`, `lambda* = |log_q(q_alpha / q_alpha*)|`.
pub fn labels(m: &MuFunction) -> Result<WeightFunction> {
    let (a, b) = m.v_exponents();
    let (sum, diff) = (a + b, (a - b).abs());
    if sum % 2 != 0 || diff % 2 != 0 {
        return Err(PlancherelError::NotIntegerPower(format!(
            "{} * {}",
            q_power_string(a),
            q_power_string(b)
        )));
    }
    Ok(WeightFunction::rank_one((sum / 2) as u32, (diff / 2) as u32))
}

/// `W_O` has order 2 iff `mu` vanishes somewhere on the unit circle.
pub fn weyl_from_zeros(m: &MuFunction) -> Result<WeylOrder> {
    let zeros = eval_unit_circle_zeros(m.expr(), "X")?;
    Ok(if zeros.is_empty() { WeylOrder::Trivial } else { WeylOrder::Order2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plancherel::FieldData;

    fn case(c: CaseId) -> PlancherelCase {
        PlancherelCase::representative(c, 2).unwrap()
    }

    #[test]
    fn extracted_parameters() {
        let want = [
            (CaseId::LongI, (1, 2)),
            (CaseId::LongII, (2, 0)),
            (CaseId::LongIII, (1, 0)),
            (CaseId::LongIV, (0, 0)),
            (CaseId::ShortI, (1, 0)),
            (CaseId::ShortII, (0, 0)),
        ];
        for (c, qs) in want {
            assert_eq!(mu(&case(c)).unwrap().q_exponents().unwrap(), qs, "{c}");
        }
    }

    #[test]
    fn long_two_ramified() {
        let c = PlancherelCase::representative(CaseId::LongII, 1).unwrap();
        let m = mu(&c).unwrap();
        assert_eq!(m.q_exponents().unwrap(), (1, 0));
        assert_eq!(labels(&m).unwrap().pair(), (1, 1));
    }

    #[test]
    fn matching() {
        let c = case(CaseId::LongI);
        assert!(solve_matching(&c).solvable);
        assert!(!solve_matching(&c.clone().with_units(Sign::Plus, Sign::Plus)).solvable);
        let ram = c.with_field(FieldData::RAMIFIED).unwrap();
        assert!(!solve_matching(&ram).solvable);
        assert!(matches!(mu(&ram), Err(PlancherelError::Unsolvable(_))));
    }

    #[test]
    fn sign_flipped_long_one() {
        let c = case(CaseId::LongI).with_units(Sign::Minus, Sign::Plus);
        let m = mu(&c).unwrap();
        assert_eq!(labels(&m).unwrap().pair(), (3, 1));
    }

    #[test]
    fn short_one_expression() {
        let m = mu(&case(CaseId::ShortI)).unwrap();
        let want = RationalExpr::parse(&mu_ring(), "c*(1 - X)*(1 - X^-1)/((1 - q^-1*X)*(1 - q^-1*X^-1))").unwrap();
        assert_eq!(m.expr(), &want);
        assert_eq!(m.factored(), "c * (1 - X)(1 - X^-1)/((1 - q^-1*X)(1 - q^-1*X^-1))");
    }

    #[test]
    fn invariant_under_inversion() {
        for c in CaseId::ALL {
            let m = mu(&case(c)).unwrap();
            assert_eq!(m.expr().invert_var(X).unwrap(), *m.expr(), "{c}");
        }
    }

    #[test]
    fn labels_and_zeros() {
        for (c, pair, w) in [
            (CaseId::LongI, (3, 1), WeylOrder::Order2),
            (CaseId::LongII, (2, 2), WeylOrder::Order2),
            (CaseId::LongIII, (1, 1), WeylOrder::Order2),
            (CaseId::LongIV, (0, 0), WeylOrder::Trivial),
            (CaseId::ShortI, (1, 1), WeylOrder::Order2),
            (CaseId::ShortII, (0, 0), WeylOrder::Trivial),
        ] {
            let m = mu(&case(c)).unwrap();
            assert_eq!(labels(&m).unwrap().pair(), pair, "{c}");
            assert_eq!(weyl_from_zeros(&m).unwrap(), w, "{c}");
        }
    }

    #[test]
    fn half_integral_labels_rejected() {
        let e = RationalExpr::parse(&mu_ring(), "c*(1 - X)*(1 - X^-1)/((1 - v^-1*X)*(1 - v^-1*X^-1))").unwrap();
        let m = MuFunction::from_expr(e).unwrap();
        assert_eq!(m.v_exponents(), (1, 0));
        assert!(matches!(labels(&m), Err(PlancherelError::NotIntegerPower(_))));
    }

    #[test]
    fn non_silberger_rejected() {
        for s in ["c*(1 - X)^2/((1 - q^-1*X)*(1 - q^-1*X^-1))", "-c", "c*X"] {
            let e = RationalExpr::parse(&mu_ring(), s).unwrap();
            assert!(MuFunction::from_expr(e).is_err(), "{s}");
        }
    }
}
