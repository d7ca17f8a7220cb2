use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exactalg::{Coeff, LaurentExpr};
use crate::rootdata::{AffineWeylElement, RankOneAffine};

use super::{multiply, AffineHeckePresentation, HeckeElement, Result};

/// Parameters of [`verify_relations_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Lattice coordinates range over `-bound..=bound`; affine words over
    /// lengths up to `bound`.
    pub bound: i64,
    pub seed: u64,
    pub triples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { bound: 3, seed: 0, triples: 200 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub cases: usize,
    pub failed: usize,
    /// The first few failures, for diagnostics.
    pub examples: Vec<String>,
}

impl RelationCheck {
    fn new(name: &str) -> Self {
        RelationCheck { name: name.to_string(), cases: 0, failed: 0, examples: Vec::new() }
    }

    fn record(&mut self, ok: Result<bool>, what: impl FnOnce() -> String) {
        self.cases += 1;
        let msg = match ok {
            Ok(true) => return,
            Ok(false) => what(),
            Err(e) => format!("{}: {e}", what()),
        };
        self.failed += 1;
        if self.examples.len() < 5 {
            self.examples.push(msg);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub labels: (u32, u32),
    pub bound: i64,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn check(&self, name: &str) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn lattice_points(rank: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut pts = vec![Vec::new()];
    for _ in 0..rank {
        pts = pts
            .into_iter()
            .flat_map(|p| {
                (-bound..=bound).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    pts
}

fn v_coeff(p: &AffineHeckePresentation, c: i64, k: i64) -> LaurentExpr {
    p.v_power(k).scale(&Coeff::from_integer(c.into()))
}

fn mul(a: &HeckeElement, b: &HeckeElement, p: &AffineHeckePresentation) -> Result<HeckeElement> {
    multiply(a, b, p)
}

fn eq(a: Result<HeckeElement>, b: Result<HeckeElement>) -> Result<bool> {
    Ok(a? == b?)
}

/// `T_s^-1 = q^-lambda T_s + q^-lambda - 1`.
pub(crate) fn ts_inverse(p: &AffineHeckePresentation) -> HeckeElement {
    let (l, _) = p.labels();
    let qinv = p.q_power(-i64::from(l));
    let one = LaurentExpr::one(p.ring());
    let mut e = HeckeElement::from_part(p, vec![0], qinv.clone());
    e.add_part(vec![], &qinv - &one);
    e
}

/// The affine generators `T_0 = T_s` and
/// `T_1 = q^((lambda+lambda*)/2) theta_h T_s^-1`.
pub(crate) fn affine_generators(p: &AffineHeckePresentation) -> Result<[HeckeElement; 2]> {
    let (l, ls) = p.labels();
    let t0 = HeckeElement::t(p, &[0])?;
    let th = HeckeElement::from_part(p, vec![], &p.v_power(i64::from(l + ls)) * &p.x_alpha());
    let t1 = multiply(&th, &ts_inverse(p), p)?;
    Ok([t0, t1])
}

fn word_product(gens: &[HeckeElement; 2], word: &[usize], p: &AffineHeckePresentation, left: bool) -> Result<HeckeElement> {
    let mut acc = HeckeElement::one(p);
    if left {
        for &i in word {
            acc = mul(&acc, &gens[i], p)?;
        }
    } else {
        for &i in word.iter().rev() {
            acc = mul(&gens[i], &acc, p)?;
        }
    }
    Ok(acc)
}

fn random_element(p: &AffineHeckePresentation, rng: &mut ChaCha8Rng, bound: i64) -> Result<HeckeElement> {
    let words = p.finite_weyl();
    let mut e = HeckeElement::zero(p);
    for _ in 0..rng.gen_range(1..=2) {
        let x: Vec<i64> = (0..p.lattice_rank()).map(|_| rng.gen_range(-bound..=bound)).collect();
        let w = &words[rng.gen_range(0..words.len())];
        let mut c = rng.gen_range(1..=3);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        let k = rng.gen_range(-2..=2);
        let f = &v_coeff(p, c, k) * &p.theta(&x);
        e = e.checked_add(&HeckeElement::from_part(p, w.clone(), f))?;
    }
    Ok(e)
}

/// [`verify_relations_with`] using seed 0 and 200 associativity triples.
pub fn verify_relations(p: &AffineHeckePresentation, bound: i64) -> RelationReport {
    verify_relations_with(p, VerifyOptions { bound, ..VerifyOptions::default() })
}

/// Checks the defining relations on all basis elements with lattice
/// coordinates in `-bound..=bound`. Failures are counted, never raised.
pub fn verify_relations_with(p: &AffineHeckePresentation, opts: VerifyOptions) -> RelationReport {
    let bound = opts.bound;
    let pts = lattice_points(p.lattice_rank(), bound);
    let words = p.finite_weyl();
    let has_s = p.finite_weyl_order() == 2;
    let (l, ls) = p.labels();
    let mut checks = Vec::new();

    let mut quad = RelationCheck::new("quadratic");
    let mut braid = RelationCheck::new("braid_length");
    let mut exact = RelationCheck::new("bernstein_exactness");
    let mut central = RelationCheck::new("centrality");
    if has_s {
        let ts = HeckeElement::t(p, &[0]).expect("order-2 group has s");
        let quad_rhs = |t: &HeckeElement, qk: i64| -> Result<HeckeElement> {
            let q = p.q_power(qk);
            let one = LaurentExpr::one(p.ring());
            t.scale(&(&q - &one)).checked_add(&HeckeElement::from_part(p, vec![], q))
        };
        quad.record(eq(mul(&ts, &ts, p), quad_rhs(&ts, i64::from(l))), || "T_s^2".into());
        quad.record(eq(mul(&ts, &ts_inverse(p), p), Ok(HeckeElement::one(p))), || "T_s T_s^-1".into());
        match affine_generators(p) {
            Ok(gens) => {
                quad.record(eq(mul(&gens[1], &gens[1], p), quad_rhs(&gens[1], i64::from(ls))), || {
                    "T_1^2 with q^lambda*".into()
                });
                let elems = RankOneAffine::elements_up_to(bound.max(0) as usize);
                for &a in &elems {
                    for &b in &elems {
                        let ab: AffineWeylElement = a.compose(b);
                        if ab.length() != a.length() + b.length() {
                            continue;
                        }
                        let lhs = word_product(&gens, &a.reduced_word(), p, true)
                            .and_then(|ta| Ok((ta, word_product(&gens, &b.reduced_word(), p, false)?)))
                            .and_then(|(ta, tb)| mul(&ta, &tb, p));
                        let rhs = word_product(&gens, &ab.reduced_word(), p, false);
                        braid.record(eq(lhs, rhs), || format!("T_{a} T_{b} != T_{ab}"));
                    }
                }
            }
            Err(e) => quad.record(Err(e), || "affine generator T_1".into()),
        }
        let one = HeckeElement::one(p);
        braid.record(eq(mul(&one, &ts, p), Ok(ts.clone())), || "T_1 T_s".into());
        braid.record(eq(mul(&ts, &one, p), Ok(ts.clone())), || "T_s T_1".into());

        let den = &LaurentExpr::one(p.ring()) - &p.x_alpha().pow(-2).expect("monomial");
        for x in &pts {
            let sx = p.reflect(x);
            let tx = HeckeElement::theta(p, x);
            let tsx = HeckeElement::theta(p, &sx);
            let lhs = mul(&tx, &ts, p).and_then(|a| a.checked_sub(&mul(&ts, &tsx, p)?));
            let rhs = (|| -> Result<HeckeElement> {
                let num = &p.bernstein_factor() * &(&p.theta(x) - &p.theta(&sx));
                let q = num.exact_div(&den)?;
                Ok(HeckeElement::from_part(p, vec![], q))
            })();
            let rhs = match (p.rule(), rhs) {
                (super::CommutationRule::SignFlipped, Ok(r)) => Ok(r.neg()),
                (_, r) => r,
            };
            exact.record(eq(lhs, rhs), || format!("θ[{x:?}] T_s - T_s θ[{sx:?}]"));
            let z = tx.checked_add(&tsx);
            let comm = z.and_then(|z| eq(mul(&z, &ts, p), mul(&ts, &z, p)));
            central.record(comm, || format!("θ[{x:?}] + θ[{sx:?}] against T_s"));
        }
    }
    checks.push(quad);
    checks.push(braid);

    let mut assoc = RelationCheck::new("associativity");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for k in 0..opts.triples {
        let triple = (|| -> Result<bool> {
            let a = random_element(p, &mut rng, bound)?;
            let b = random_element(p, &mut rng, bound)?;
            let c = random_element(p, &mut rng, bound)?;
            let ab_c = mul(&mul(&a, &b, p)?, &c, p)?;
            let a_bc = mul(&a, &mul(&b, &c, p)?, p)?;
            Ok(ab_c == a_bc)
        })();
        assoc.record(triple, || format!("triple {k}"));
    }
    checks.push(assoc);
    checks.push(exact);
    checks.push(central);

    let mut degen = RelationCheck::new("q_to_1");
    for x in &pts {
        for w in &words {
            for y in &pts {
                for u in &words {
                    let res = (|| -> Result<bool> {
                        let a = HeckeElement::from_part(p, w.clone(), p.theta(x));
                        let b = HeckeElement::from_part(p, u.clone(), p.theta(y));
                        let prod = mul(&a, &b, p)?.specialize_v(1)?;
                        let wy = if w.is_empty() { y.clone() } else { p.reflect(y) };
                        let z: Vec<i64> = x.iter().zip(&wy).map(|(a, b)| a + b).collect();
                        let wu: Vec<usize> = if w.len() + u.len() == 1 { vec![0] } else { vec![] };
                        Ok(prod == HeckeElement::from_part(p, wu, p.theta(&z)))
                    })();
                    degen.record(res, || format!("θ[{x:?}]T{w:?} · θ[{y:?}]T{u:?} at q = 1"));
                }
            }
        }
    }
    checks.push(degen);

    RelationReport { labels: (l, ls), bound, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::CommutationRule;

    #[test]
    fn small_bound_passes() {
        for (l, ls) in [(0, 0), (1, 1), (2, 2), (3, 1)] {
            let p = AffineHeckePresentation::rank_one(l, ls);
            let r = verify_relations_with(&p, VerifyOptions { bound: 2, seed: 1, triples: 20 });
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn sign_flip_is_caught() {
        let p = AffineHeckePresentation::rank_one(3, 1).with_rule(CommutationRule::SignFlipped);
        let r = verify_relations_with(&p, VerifyOptions { bound: 2, seed: 1, triples: 40 });
        assert!(r.check("associativity").unwrap().failed > 0);
    }
}
