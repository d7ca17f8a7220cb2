use crate::exactalg::{AlgError, LaurentExpr};

use super::{AffineHeckePresentation, CommutationRule, HeckeElement, HeckeError, Result};

impl AffineHeckePresentation {
    /// `q^lambda - 1 + X^-1 (q^((lambda+lambda*)/2) - q^((lambda-lambda*)/2))`.
    pub fn bernstein_factor(&self) -> LaurentExpr {
        let (l, ls) = self.labels();
        let (l, ls) = (i64::from(l), i64::from(ls));
        let one = LaurentExpr::one(self.ring());
        let x_inv = self.x_alpha().pow(-1).expect("monomial");
        let odd = &self.v_power(l + ls) - &self.v_power(l - ls);
        &(&self.q_power(l) - &one) + &(&x_inv * &odd)
    }

    /// The degree-zero part `D(g)` in `T_s g = s(g) T_s + D(g)`, namely
    /// `factor * (g - s(g)) / (1 - X^-2)`.
    pub fn commutation_correction(&self, g: &LaurentExpr) -> Result<LaurentExpr> {
        let one = LaurentExpr::one(self.ring());
        let den = &one - &self.x_alpha().pow(-2).expect("monomial");
        let num = &self.bernstein_factor() * &(g - &self.reflect_theta(g));
        let d = num.exact_div(&den).map_err(|e| match e {
            AlgError::NotDivisible(a, b) => HeckeError::NonExactDivision(format!("({a}) / ({b})")),
            other => HeckeError::Alg(other),
        })?;
        Ok(match self.rule() {
            CommutationRule::Standard => d,
            CommutationRule::SignFlipped => -d,
        })
    }

    /// `T_s * T_s = (q^lambda - 1) T_s + q^lambda`.
    fn ts_squared(&self, f: &LaurentExpr, out: &mut HeckeElement) {
        let (l, _) = self.labels();
        let ql = self.q_power(i64::from(l));
        let one = LaurentExpr::one(self.ring());
        out.add_part(vec![0], f * &(&ql - &one));
        out.add_part(vec![], f * &ql);
    }
}

/// Product in the Bernstein presentation, rewritten into the basis
/// `theta_x T_w`.
pub fn multiply(a: &HeckeElement, b: &HeckeElement, p: &AffineHeckePresentation) -> Result<HeckeElement> {
    if a.ring() != p.ring() || b.ring() != p.ring() {
        return Err(HeckeError::PresentationMismatch);
    }
    let mut out = HeckeElement::zero(p);
    for (w, f) in a.parts() {
        p.check_word(w)?;
        for (u, g) in b.parts() {
            p.check_word(u)?;
            if w.is_empty() {
                out.add_part(u.clone(), f * g);
                continue;
            }
            // f T_s g T_u = f s(g) T_s T_u + f D(g) T_u
            let sg = p.reflect_theta(g);
            let d = p.commutation_correction(g)?;
            out.add_part(u.clone(), f * &d);
            let fsg = f * &sg;
            if u.is_empty() {
                out.add_part(vec![0], fsg);
            } else {
                p.ts_squared(&fsg, &mut out);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(p: &AffineHeckePresentation, s: &str) -> HeckeElement {
        HeckeElement::parse(p, s).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let p = AffineHeckePresentation::rank_one(3, 1);
        let ts = el(&p, "T[0]");
        assert_eq!(multiply(&ts, &ts, &p).unwrap(), el(&p, "(q^3 - 1)*T[0] + q^3*T[]"));
        let p0 = AffineHeckePresentation::rank_one(0, 0);
        let ts = el(&p0, "T[0]");
        assert_eq!(multiply(&ts, &ts, &p0).unwrap(), el(&p0, "T[]"));
    }

    #[test]
    fn theta_commutes_with_scalars() {
        let p = AffineHeckePresentation::rank_one(2, 2);
        let a = el(&p, "θ[3]");
        let b = el(&p, "θ[-1]");
        assert_eq!(multiply(&a, &b, &p).unwrap(), el(&p, "θ[2]"));
    }

    #[test]
    fn commutative_presentation() {
        let p = AffineHeckePresentation::commutative(1);
        assert!(HeckeElement::t(&p, &[0]).is_err());
        let a = el(&p, "θ[1]");
        assert_eq!(multiply(&a, &a, &p).unwrap(), el(&p, "θ[2]"));
    }
}
