use std::collections::BTreeMap;

use g2_hecke::exactalg::LaurentExpr;
use g2_hecke::hecke::*;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Integer Laurent polynomials in `(v, t)`.
type Poly = BTreeMap<(i32, i32), i64>;

fn poly_add(a: &mut Poly, e: (i32, i32), c: i64) {
    let slot = a.entry(e).or_insert(0);
    *slot += c;
    if *slot == 0 {
        a.remove(&e);
    }
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&(v1, t1), &c1) in a {
        for (&(v2, t2), &c2) in b {
            poly_add(&mut out, (v1 + v2, t1 + t2), c1 * c2);
        }
    }
    out
}

fn to_poly(e: &LaurentExpr) -> Poly {
    let mut out = Poly::new();
    for (exps, c) in e.terms() {
        assert!(c.is_integer());
        poly_add(&mut out, (exps[0], exps[1]), c.to_integer().to_i64().unwrap());
    }
    out
}

/// `(theta_x - theta_-x) / (1 - theta_-2)` summed as a geometric series.
fn geometric(x: i32) -> Poly {
    let mut out = Poly::new();
    let (sign, n) = if x >= 0 { (1, x) } else { (-1, -x) };
    for j in 0..n {
        poly_add(&mut out, (0, n - 2 * j), sign);
    }
    out
}

fn bernstein_factor(l: i32, ls: i32) -> Poly {
    let mut f = Poly::new();
    poly_add(&mut f, (2 * l, 0), 1);
    poly_add(&mut f, (0, 0), -1);
    poly_add(&mut f, (l + ls, -1), 1);
    poly_add(&mut f, (l - ls, -1), -1);
    f
}

fn el(p: &AffineHeckePresentation, s: &str) -> HeckeElement {
    HeckeElement::parse(p, s).unwrap()
}

const PAIRS: [(u32, u32); 4] = [(3, 1), (2, 2), (1, 1), (0, 0)];

#[test]
fn quadratic_relation_examples() {
    let p = AffineHeckePresentation::rank_one(3, 1);
    let ts = el(&p, "T[0]");
    assert_eq!(multiply(&ts, &ts, &p).unwrap(), el(&p, "(q^3 - 1)*T[0] + q^3*T[]"));
    let p0 = AffineHeckePresentation::rank_one(0, 0);
    let ts = el(&p0, "T[0]");
    assert_eq!(multiply(&ts, &ts, &p0).unwrap(), el(&p0, "T[]"));
}

#[test]
fn theta_commutation_against_geometric_series() {
    for (l, ls) in PAIRS {
        let p = AffineHeckePresentation::rank_one(l, ls);
        let ts = HeckeElement::t(&p, &[0]).unwrap();
        for x in -6i32..=6 {
            let tx = HeckeElement::theta(&p, &[i64::from(x)]);
            let tsx = HeckeElement::theta(&p, &[i64::from(-x)]);
            let diff = multiply(&tx, &ts, &p).unwrap().checked_sub(&multiply(&ts, &tsx, &p).unwrap()).unwrap();
            let expected = poly_mul(&bernstein_factor(l as i32, ls as i32), &geometric(x));
            let got = diff.part(&[]).map(to_poly).unwrap_or_default();
            assert_eq!(got, expected, "(λ, λ*) = ({l}, {ls}), x = {x}");
            assert!(diff.part(&[0]).is_none());
        }
    }
}

#[test]
fn equal_labels_example() {
    // λ = λ* = 1: θ_x T_s - T_s θ_-x = (q - 1)(1 + X^-1)(θ_x - θ_-x)/(1 - X^-2)
    let p = AffineHeckePresentation::rank_one(1, 1);
    let ts = HeckeElement::t(&p, &[0]).unwrap();
    let lhs = multiply(&HeckeElement::theta(&p, &[1]), &ts, &p)
        .unwrap()
        .checked_sub(&multiply(&ts, &HeckeElement::theta(&p, &[-1]), &p).unwrap())
        .unwrap();
    assert_eq!(lhs, el(&p, "(q - 1)*θ[1]*T[] + (q - 1)*T[]"));
}

/// Group algebra of `Z x| {1, s}`: keys are (word length, t exponent).
fn group_product(a: &BTreeMap<(usize, i32), i64>, b: &BTreeMap<(usize, i32), i64>) -> BTreeMap<(usize, i32), i64> {
    let mut out = BTreeMap::new();
    for (&(w, x), &c) in a {
        for (&(u, y), &d) in b {
            let y = if w == 1 { -y } else { y };
            let key = ((w + u) % 2, x + y);
            *out.entry(key).or_insert(0) += c * d;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn flatten(e: &HeckeElement) -> BTreeMap<(usize, i32), i64> {
    let mut out = BTreeMap::new();
    for (w, f) in e.parts() {
        for (exps, c) in f.terms() {
            assert_eq!(exps[0], 0);
            *out.entry((w.len(), exps[1])).or_insert(0) += c.to_integer().to_i64().unwrap();
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn random_element(p: &AffineHeckePresentation, rng: &mut ChaCha8Rng) -> HeckeElement {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let c = rng.gen_range(-3..=3);
        let k = rng.gen_range(-2..=2);
        let x = rng.gen_range(-3..=3);
        let w = if rng.gen_bool(0.5) { "T[0]" } else { "T[]" };
        terms.push(format!("({c}*v^{k})*θ[{x}]*{w}"));
    }
    el(p, &terms.join(" + "))
}

#[test]
fn v_to_one_gives_group_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (l, ls) in PAIRS {
        let p = AffineHeckePresentation::rank_one(l, ls);
        for _ in 0..40 {
            let a = random_element(&p, &mut rng);
            let b = random_element(&p, &mut rng);
            let prod = multiply(&a, &b, &p).unwrap().specialize_v(1).unwrap();
            let expected = group_product(&flatten(&a.specialize_v(1).unwrap()), &flatten(&b.specialize_v(1).unwrap()));
            assert_eq!(flatten(&prod), expected);
        }
    }
}

#[test]
fn verify_relations_for_allowed_pairs() {
    for (l, ls) in PAIRS {
        let r = verify_relations(&AffineHeckePresentation::rank_one(l, ls), 3);
        assert_eq!(r.failures(), 0, "{:#?}", r.checks);
        assert!(r.checks.iter().all(|c| c.cases > 0 || c.name == "q_to_1"), "{:?}", r.checks);
    }
    let r = verify_relations(&AffineHeckePresentation::commutative(2), 2);
    assert!(r.passed());
}

#[test]
fn sabotaged_rule_is_caught() {
    let p = AffineHeckePresentation::rank_one(3, 1).with_rule(CommutationRule::SignFlipped);
    let r = verify_relations(&p, 2);
    assert!(r.check("associativity").unwrap().failed > 0);
}

#[test]
fn rank_two_finite_part_is_rejected() {
    let err = AffineHeckePresentation::new(vec![1], vec![2], 4, WeightFunction::rank_one(1, 1), RGroup::Trivial, true);
    assert!(matches!(err, Err(HeckeError::UnsupportedRank(4))));
    let bad = AffineHeckePresentation::new(vec![1], vec![1], 2, WeightFunction::rank_one(1, 1), RGroup::Trivial, true);
    assert!(bad.is_err());
}

#[test]
fn lusztig_examples() {
    let allowed = default_allowed();
    for (l, ls) in [(3, 1), (2, 2), (0, 0)] {
        assert!(check_lusztig(&WeightFunction::rank_one(l, ls), &allowed));
    }
    assert!(!check_lusztig(&WeightFunction::rank_one(1, 3), &allowed));
    assert!(check_lusztig(&WeightFunction::empty(), &allowed));
    let file = include_str!("../data/lusztig_allowed.json");
    assert_eq!(parse_allowed(file).unwrap(), allowed);
    assert!(parse_allowed(r#"{"schema_version": 2, "pairs": []}"#).is_err());
}

#[test]
fn presentation_equality() {
    let a = AffineHeckePresentation::rank_one(3, 1);
    assert!(a.same_presentation(&AffineHeckePresentation::rank_one(3, 1)));
    assert!(!a.same_presentation(&AffineHeckePresentation::rank_one(2, 2)));
    assert!(!a.same_presentation(&a.clone().with_r_group(RGroup::Unknown)));
    assert!(!a.same_presentation(&a.clone().with_cocycle_trivial(false)));
}
