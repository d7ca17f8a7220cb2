use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactalg::{LaurentExpr, Ring};

use super::{HeckeError, Result};

/// A reduced word in the finite Weyl group; in rank one either `[]` or `[0]`.
pub type Word = Vec<usize>;

/// Labels `lambda(alpha)`, `lambda*(alpha)` per simple root.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightFunction {
    pub lambda: BTreeMap<String, u32>,
    pub lambda_star: BTreeMap<String, u32>,
}

impl WeightFunction {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rank_one(lambda: u32, lambda_star: u32) -> Self {
        WeightFunction {
            lambda: BTreeMap::from([("alpha".to_string(), lambda)]),
            lambda_star: BTreeMap::from([("alpha".to_string(), lambda_star)]),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }

    /// `(lambda, lambda*)` of the single simple root, `(0, 0)` when empty.
    pub fn pair(&self) -> (u32, u32) {
        let l = self.lambda.values().next().copied().unwrap_or(0);
        let ls = self.lambda_star.values().next().copied().unwrap_or(0);
        (l, ls)
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("empty");
        }
        let (l, ls) = self.pair();
        write!(f, "({l},{ls})")
    }
}

/// What is known about the R-group `R(O)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "state", rename_all = "snake_case")]
pub enum RGroup {
    Trivial,
    NonTrivial { order: Option<u32> },
    Unknown,
}

impl fmt::Display for RGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RGroup::Trivial => f.write_str("1"),
            RGroup::NonTrivial { order: Some(n) } => write!(f, "Z/{n}"),
            RGroup::NonTrivial { order: None } => f.write_str("!=1"),
            RGroup::Unknown => f.write_str("*"),
        }
    }
}

/// Sign of the correction term in the Bernstein relation. `SignFlipped`
/// exists only as a negative control for the relation checker.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CommutationRule {
    #[default]
    Standard,
    SignFlipped,
}

/// Presentation data of `H_aff(lattice, W, lambda, lambda*)` together with
/// the R-group and cocycle information attached to a block.
#[derive(Debug, Clone, Serialize)]
pub struct AffineHeckePresentation {
    lattice_rank: usize,
    h: Vec<i64>,
    coroot: Vec<i64>,
    finite_weyl_order: usize,
    weights: WeightFunction,
    r_group: RGroup,
    cocycle_trivial: bool,
    #[serde(skip)]
    rule: CommutationRule,
    #[serde(skip)]
    ring: Ring,
}

fn lattice_ring(rank: usize) -> Ring {
    let names: Vec<String> = std::iter::once("v".to_string())
        .chain((1..=rank).map(|i| format!("t{i}")))
        .collect();
    Ring::new(&names)
        .and_then(|r| r.with_sqrt("v", "q"))
        .expect("lattice ring variables are valid")
}

impl AffineHeckePresentation {
    /// General constructor. `finite_weyl_order` must be 1 or 2; for order 2,
    /// `<h, coroot>` must be 2 and the weights must be rank one, for order 1
    /// the weights must be empty.
    pub fn new(
        h: Vec<i64>,
        coroot: Vec<i64>,
        finite_weyl_order: usize,
        weights: WeightFunction,
        r_group: RGroup,
        cocycle_trivial: bool,
    ) -> Result<Self> {
        let rank = h.len();
        if finite_weyl_order > 2 {
            return Err(HeckeError::UnsupportedRank(finite_weyl_order));
        }
        if finite_weyl_order == 0 {
            return Err(HeckeError::InvalidPresentation("a group has at least one element".into()));
        }
        if rank == 0 || coroot.len() != rank {
            return Err(HeckeError::InvalidPresentation("h and the coroot need the same positive rank".into()));
        }
        if finite_weyl_order == 2 {
            let pair: i64 = h.iter().zip(&coroot).map(|(a, b)| a * b).sum();
            if pair != 2 {
                return Err(HeckeError::InvalidPresentation(format!("<h, coroot> = {pair}, expected 2")));
            }
            if weights.lambda.len() != 1 || weights.lambda_star.len() != 1 {
                return Err(HeckeError::InvalidPresentation("order-2 Weyl group needs one pair of labels".into()));
            }
        } else if !weights.is_empty() {
            return Err(HeckeError::InvalidPresentation("trivial Weyl group carries no labels".into()));
        }
        Ok(AffineHeckePresentation {
            lattice_rank: rank,
            h,
            coroot,
            finite_weyl_order,
            weights,
            r_group,
            cocycle_trivial,
            rule: CommutationRule::Standard,
            ring: lattice_ring(rank),
        })
    }

    /// Lattice `Z`, `h = 1`, coroot `2`, so `s(x) = -x`.
    pub fn rank_one(lambda: u32, lambda_star: u32) -> Self {
        Self::new(vec![1], vec![2], 2, WeightFunction::rank_one(lambda, lambda_star), RGroup::Trivial, true)
            .expect("standard rank-one presentation is valid")
    }

    /// The group algebra of a lattice of the given rank.
    pub fn commutative(rank: usize) -> Self {
        let mut h = vec![0; rank];
        h[0] = 1;
        Self::new(h, vec![0; rank], 1, WeightFunction::empty(), RGroup::Trivial, true)
            .expect("commutative presentation is valid")
    }

    pub fn with_r_group(mut self, r: RGroup) -> Self {
        self.r_group = r;
        self
    }

    pub fn with_cocycle_trivial(mut self, trivial: bool) -> Self {
        self.cocycle_trivial = trivial;
        self
    }

    pub fn with_rule(mut self, rule: CommutationRule) -> Self {
        self.rule = rule;
        self
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    pub fn h(&self) -> &[i64] {
        &self.h
    }

    pub fn coroot(&self) -> &[i64] {
        &self.coroot
    }

    pub fn finite_weyl_order(&self) -> usize {
        self.finite_weyl_order
    }

    /// Reduced words of the finite Weyl group.
    pub fn finite_weyl(&self) -> Vec<Word> {
        if self.finite_weyl_order == 2 {
            vec![vec![], vec![0]]
        } else {
            vec![vec![]]
        }
    }

    pub fn weights(&self) -> &WeightFunction {
        &self.weights
    }

    pub fn labels(&self) -> (u32, u32) {
        self.weights.pair()
    }

    pub fn r_group(&self) -> RGroup {
        self.r_group
    }

    pub fn cocycle_trivial(&self) -> bool {
        self.cocycle_trivial
    }

    pub fn rule(&self) -> CommutationRule {
        self.rule
    }

    /// Coefficient ring `Q[v, t_1, ..., t_r]` with `theta_x = t^x`.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Equality of presentations as read off from the block data: lattice
    /// rank, Weyl group order, labels, R-group and cocycle flag.
    pub fn same_presentation(&self, other: &Self) -> bool {
        self.lattice_rank == other.lattice_rank
            && self.finite_weyl_order == other.finite_weyl_order
            && self.weights.pair() == other.weights.pair()
            && self.r_group == other.r_group
            && self.cocycle_trivial == other.cocycle_trivial
    }

    pub(crate) fn check_word(&self, w: &[usize]) -> Result<()> {
        let ok = w.is_empty() || (self.finite_weyl_order == 2 && w == [0]);
        if ok {
            Ok(())
        } else {
            Err(HeckeError::BadWord(w.to_vec()))
        }
    }

    /// `s(x) = x - <x, coroot> h`.
    pub fn reflect(&self, x: &[i64]) -> Vec<i64> {
        let k: i64 = x.iter().zip(&self.coroot).map(|(a, b)| a * b).sum();
        x.iter().zip(&self.h).map(|(a, b)| a - k * b).collect()
    }

    pub fn theta(&self, x: &[i64]) -> LaurentExpr {
        assert_eq!(x.len(), self.lattice_rank, "lattice vector has the wrong rank");
        let mut e = vec![0i32; self.ring.nvars()];
        for (slot, &xi) in e[1..].iter_mut().zip(x) {
            *slot = i32::try_from(xi).expect("lattice exponent fits in i32");
        }
        LaurentExpr::monomial(&self.ring, crate::exactalg::Coeff::from_integer(1.into()), e)
    }

    /// `X = theta_h`.
    pub fn x_alpha(&self) -> LaurentExpr {
        self.theta(&self.h)
    }

    /// `q^k` as an element of the coefficient ring.
    pub fn q_power(&self, k: i64) -> LaurentExpr {
        self.v_power(2 * k)
    }

    pub fn v_power(&self, k: i64) -> LaurentExpr {
        let mut e = vec![0i32; self.ring.nvars()];
        e[0] = i32::try_from(k).expect("v exponent fits in i32");
        LaurentExpr::monomial(&self.ring, crate::exactalg::Coeff::from_integer(1.into()), e)
    }

    /// Applies `s` to the lattice variables of a coefficient.
    pub fn reflect_theta(&self, g: &LaurentExpr) -> LaurentExpr {
        let terms = g.terms().map(|(e, c)| {
            let x: Vec<i64> = e[1..].iter().map(|&a| i64::from(a)).collect();
            let sx = self.reflect(&x);
            let mut e2 = e.clone();
            for (slot, a) in e2[1..].iter_mut().zip(sx) {
                *slot = a as i32;
            }
            (e2, c.clone())
        });
        LaurentExpr::from_terms(&self.ring, terms.collect::<Vec<_>>())
    }
}

impl fmt::Display for AffineHeckePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "H_aff(rank {}, |W| = {}, labels {}, R = {}, cocycle {})",
            self.lattice_rank,
            self.finite_weyl_order,
            self.weights,
            self.r_group,
            if self.cocycle_trivial { "trivial" } else { "nontrivial" }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_reflection() {
        let p = AffineHeckePresentation::rank_one(3, 1);
        assert_eq!(p.reflect(&[5]), vec![-5]);
        assert_eq!(p.labels(), (3, 1));
    }

    #[test]
    fn rejects_bad_data() {
        let w = WeightFunction::rank_one(1, 1);
        assert_eq!(
            AffineHeckePresentation::new(vec![1], vec![2], 6, w.clone(), RGroup::Trivial, true).unwrap_err(),
            HeckeError::UnsupportedRank(6)
        );
        assert!(AffineHeckePresentation::new(vec![1], vec![1], 2, w.clone(), RGroup::Trivial, true).is_err());
        assert!(AffineHeckePresentation::new(vec![1], vec![2], 1, w, RGroup::Trivial, true).is_err());
    }

    #[test]
    fn equality_ignores_rule() {
        let a = AffineHeckePresentation::rank_one(2, 2);
        let b = a.clone().with_rule(CommutationRule::SignFlipped);
        assert!(a.same_presentation(&b));
        assert!(!a.same_presentation(&a.clone().with_r_group(RGroup::Unknown)));
        assert!(!a.same_presentation(&AffineHeckePresentation::rank_one(3, 1)));
    }

    #[test]
    fn two_dimensional_lattice() {
        // GL2-like: M = Z^2, h = (1, -1), coroot (1, -1)
        let p = AffineHeckePresentation::new(
            vec![1, -1],
            vec![1, -1],
            2,
            WeightFunction::rank_one(1, 1),
            RGroup::Trivial,
            true,
        )
        .unwrap();
        assert_eq!(p.reflect(&[1, 0]), vec![0, 1]);
    }
}
