use std::collections::BTreeSet;

use g2_hecke::exactalg::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn plain() -> Ring {
    Ring::new(&["v", "X"]).unwrap()
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Direct evaluation from the term list.
fn eval(e: &LaurentExpr, point: &[BigRational]) -> BigRational {
    let mut acc = BigRational::zero();
    for (exps, c) in e.terms() {
        let mut t = c.clone();
        for (x, &k) in point.iter().zip(exps) {
            t *= num_traits::pow::Pow::pow(x, k);
        }
        acc += t;
    }
    acc
}

fn eval_rational(e: &RationalExpr, point: &[BigRational]) -> BigRational {
    eval(e.numerator(), point) / eval(e.denominator(), point)
}

fn points() -> Vec<Vec<BigRational>> {
    vec![
        vec![q(2), q(3)],
        vec![q(-3), BigRational::new(1.into(), 5.into())],
        vec![BigRational::new(7.into(), 2.into()), q(-2)],
    ]
}

fn laurent() -> impl Strategy<Value = LaurentExpr> {
    proptest::collection::vec((-3i32..=3, -3i32..=3, -5i64..=5), 0..5).prop_map(|terms| {
        LaurentExpr::from_terms(&plain(), terms.into_iter().map(|(a, b, c)| (vec![a, b], q(c))))
    })
}

#[test]
fn ring_examples() {
    assert_eq!(Ring::new(&["v", "X"]).unwrap().nvars(), 2);
    assert_eq!(Ring::new(&["v", "v"]), Err(AlgError::DuplicateVariable("v".into())));
    assert_eq!(Ring::new::<&str>(&[]), Err(AlgError::EmptyRing));
}

#[test]
fn arith_examples() {
    let r = Ring::standard(&["X"]);
    let p = |s: &str| RationalExpr::parse(&r, s).unwrap();
    assert_eq!(arith(&p("1 + v"), &p("1 - v"), Op::Mul).unwrap(), p("1 - v^2"));
    assert_eq!(arith(&p("(1 - X)*(1 - X^-1)"), &p("1 - X"), Op::Div).unwrap(), p("1 - X^-1"));
    let e = arith(&p("1 - q*X"), &p("1"), Op::Mul).unwrap();
    assert_eq!(e.to_string(), "-v^2*X + 1");
    assert_eq!(arith(&p("X"), &p("0"), Op::Div), Err(AlgError::DivisionByZero));
    let other = RationalExpr::parse(&plain(), "X").unwrap();
    assert!(matches!(arith(&p("X"), &other, Op::Add), Err(AlgError::RingMismatch { .. })));
}

#[test]
fn unit_circle_zero_examples() {
    let r = Ring::standard(&["X"]);
    let p = |s: &str| RationalExpr::parse(&r, s).unwrap();
    let one = |s: &str| eval_unit_circle_zeros(&p(s), "X").unwrap();
    let silberger_one = "(1 - X)*(1 - X^-1)/((1 - q^-1*X)*(1 - q^-1*X^-1))";
    assert_eq!(one(silberger_one), BTreeSet::from([UnitPoint::Plus]));
    let silberger_two = "(1 - X^2)*(1 - X^-2)/((1 - q^-1*X)*(1 - q^-1*X^-1)*(1 + q^-1*X)*(1 + q^-1*X^-1))";
    assert_eq!(one(silberger_two), BTreeSet::from([UnitPoint::Plus, UnitPoint::Minus]));
    assert!(one("5").is_empty());
    // a zero cancelled by the denominator does not count
    assert!(one("(1 - X)/(1 - X)").is_empty());
    assert!(matches!(eval_unit_circle_zeros(&p("1 + X + X^2"), "X"), Err(AlgError::UnrecognizedShape(_))));
}

#[test]
fn q_is_eliminated() {
    let r = Ring::standard(&["X"]);
    let a = LaurentExpr::parse(&r, "q^2*X - q^-1").unwrap();
    let b = LaurentExpr::parse(&r, "v^4*X - v^-2").unwrap();
    assert_eq!(a, b);
    assert_eq!(a.display_q().to_string(), "q^2*X - q^-1");
}

proptest! {
    #[test]
    fn ring_axioms_match_evaluation(a in laurent(), b in laurent(), c in laurent()) {
        let ab_c = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
        let a_bc = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&ab_c, &a_bc);
        let dist = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
        let expanded = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&dist, &expanded);
        for pt in points() {
            prop_assert_eq!(eval(&ab_c, &pt), eval(&a, &pt) * eval(&b, &pt) * eval(&c, &pt));
            prop_assert_eq!(eval(&dist, &pt), eval(&a, &pt) * (eval(&b, &pt) + eval(&c, &pt)));
        }
    }

    #[test]
    fn canonicalization_is_idempotent(a in laurent()) {
        let c = a.canonicalize();
        prop_assert_eq!(c.canonicalize(), c);
    }

    #[test]
    fn division_then_multiplication(f in laurent(), g in laurent()) {
        prop_assume!(!g.is_zero());
        let fr = RationalExpr::from(f.clone());
        let gr = RationalExpr::from(g.clone());
        let quotient = arith(&fr, &gr, Op::Div).unwrap();
        prop_assert_eq!(arith(&quotient, &gr, Op::Mul).unwrap(), fr);
        for pt in points() {
            let gv = eval(&g, &pt);
            if !gv.is_zero() && !eval(quotient.denominator(), &pt).is_zero() {
                prop_assert_eq!(eval_rational(&quotient, &pt), eval(&f, &pt) / gv);
            }
        }
    }

    #[test]
    fn print_parse_round_trip(a in laurent(), b in laurent()) {
        prop_assert_eq!(LaurentExpr::parse(&plain(), &a.to_string()).unwrap(), a.clone());
        prop_assume!(!b.is_zero());
        let r = a.checked_div(&b).unwrap();
        prop_assert_eq!(RationalExpr::parse(&plain(), &r.to_string()).unwrap(), r);
    }

    #[test]
    fn reduced_denominator_is_normalized(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        let r = a.checked_div(&b).unwrap();
        let (_, lead) = r.denominator().leading_term().unwrap();
        prop_assert!(*lead > BigRational::zero());
        if r.is_zero() {
            prop_assert!(r.denominator().is_one());
        }
        let _ = BigRational::one();
    }
}
