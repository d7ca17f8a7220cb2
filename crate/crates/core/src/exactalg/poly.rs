//! Multivariate polynomial kernels on raw term maps.
//!
//! All functions here assume non-negative exponents of a fixed length; the
//! Laurent layer shifts by monomials before calling in. Leading terms are
//! taken in lexicographic order, which is the `BTreeMap` key order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type Terms = BTreeMap<Vec<i32>, BigRational>;

pub(crate) fn add_term(t: &mut Terms, e: Vec<i32>, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&e) {
        Some(x) => {
            *x += c;
            if x.is_zero() {
                t.remove(&e);
            }
        }
        None => {
            t.insert(e, c);
        }
    }
}

pub(crate) fn add(a: &Terms, b: &Terms) -> Terms {
    let mut out = a.clone();
    for (e, c) in b {
        add_term(&mut out, e.clone(), c.clone());
    }
    out
}

pub(crate) fn sub(a: &Terms, b: &Terms) -> Terms {
    let mut out = a.clone();
    for (e, c) in b {
        add_term(&mut out, e.clone(), -c.clone());
    }
    out
}

pub(crate) fn mul(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_term(&mut out, e, ca * cb);
        }
    }
    out
}

pub(crate) fn scale(a: &Terms, c: &BigRational) -> Terms {
    if c.is_zero() {
        return Terms::new();
    }
    a.iter().map(|(e, x)| (e.clone(), x * c)).collect()
}

pub(crate) fn shift(a: &Terms, by: &[i32]) -> Terms {
    a.iter()
        .map(|(e, c)| (e.iter().zip(by).map(|(x, y)| x + y).collect(), c.clone()))
        .collect()
}

/// Componentwise minimum exponent; zeros for the empty map.
pub(crate) fn min_exponents(a: &Terms, n: usize) -> Vec<i32> {
    let mut it = a.keys();
    let Some(first) = it.next() else {
        return vec![0; n];
    };
    let mut m = first.clone();
    for e in it {
        for (mi, ei) in m.iter_mut().zip(e) {
            *mi = (*mi).min(*ei);
        }
    }
    m
}

pub(crate) fn lead(a: &Terms) -> Option<(&Vec<i32>, &BigRational)> {
    a.last_key_value()
}

pub(crate) fn monic(a: &Terms) -> Terms {
    match lead(a) {
        Some((_, c)) => {
            let inv = c.recip();
            scale(a, &inv)
        }
        None => Terms::new(),
    }
}

/// Exact division `a / b` of polynomials; `None` when `b` does not divide `a`.
pub(crate) fn divide_exact(a: &Terms, b: &Terms) -> Option<Terms> {
    let (lb_e, lb_c) = lead(b)?;
    let lb_e = lb_e.clone();
    let lb_c = lb_c.clone();
    let mut r = a.clone();
    let mut q = Terms::new();
    while let Some((le, lc)) = lead(&r) {
        let e: Vec<i32> = le.iter().zip(&lb_e).map(|(x, y)| x - y).collect();
        if e.iter().any(|&x| x < 0) {
            return None;
        }
        let c = lc / &lb_c;
        let mut t = Terms::new();
        t.insert(e.clone(), c.clone());
        r = sub(&r, &mul(&t, b));
        add_term(&mut q, e, c);
    }
    Some(q)
}

fn degree_in(a: &Terms, k: usize) -> Option<i32> {
    a.keys().map(|e| e[k]).max()
}

/// Splits `a` by powers of variable `k`; entry `i` holds the coefficient of
/// `x_k^i` with slot `k` zeroed.
fn to_univariate(a: &Terms, k: usize) -> Vec<Terms> {
    let d = degree_in(a, k).unwrap_or(0).max(0) as usize;
    let mut out = vec![Terms::new(); d + 1];
    for (e, c) in a {
        let mut e2 = e.clone();
        let i = e2[k] as usize;
        e2[k] = 0;
        out[i].insert(e2, c.clone());
    }
    out
}

fn from_univariate(coeffs: &[Terms], k: usize) -> Terms {
    let mut out = Terms::new();
    for (i, c) in coeffs.iter().enumerate() {
        for (e, x) in c {
            let mut e2 = e.clone();
            e2[k] += i as i32;
            out.insert(e2, x.clone());
        }
    }
    out
}

fn trim(v: &mut Vec<Terms>) {
    while v.len() > 1 && v.last().is_some_and(|t| t.is_empty()) {
        v.pop();
    }
}

/// Pseudo-remainder of `f` by `g` as polynomials in `x_k`.
fn prem(f: &Terms, g: &Terms, k: usize) -> Terms {
    let gu = to_univariate(g, k);
    let dg = gu.len() - 1;
    let lc = gu[dg].clone();
    let mut r = to_univariate(f, k);
    trim(&mut r);
    while r.len() > dg && !(r.len() == 1 && r[0].is_empty()) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let mut next: Vec<Terms> = r.iter().map(|c| mul(c, &lc)).collect();
        for (i, gc) in gu.iter().enumerate() {
            let idx = i + dr - dg;
            next[idx] = sub(&next[idx], &mul(&lr, gc));
        }
        next.pop();
        if next.is_empty() {
            next.push(Terms::new());
        }
        trim(&mut next);
        r = next;
    }
    from_univariate(&r, k)
}

fn first_var(a: &Terms, b: &Terms, n: usize) -> Option<usize> {
    (0..n).find(|&k| a.keys().chain(b.keys()).any(|e| e[k] > 0))
}

fn content(a: &Terms, k: usize, n: usize) -> Terms {
    let mut g = Terms::new();
    for c in to_univariate(a, k) {
        if c.is_empty() {
            continue;
        }
        g = gcd(&g, &c, n);
        if g.len() == 1 && g.keys().next().is_some_and(|e| e.iter().all(|&x| x == 0)) {
            break;
        }
    }
    g
}

/// `a` scaled to integer coefficients with no common factor.
fn integer_primitive(a: &Terms) -> Terms {
    let den = a.values().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let num = a.values().fold(BigInt::zero(), |g, c| g.gcd(&(c.numer() * (&den / c.denom()))));
    if num.is_zero() {
        return a.clone();
    }
    scale(a, &BigRational::new(den, num))
}

fn one(n: usize) -> Terms {
    let mut t = Terms::new();
    t.insert(vec![0; n], BigRational::one());
    t
}

/// Monic greatest common divisor of two polynomials over Q.
///
/// Recursive primitive remainder sequence: contents are taken with respect to
/// the first variable that occurs in either argument, and the gcd of the
/// primitive parts is found by pseudo-division in that variable.
pub(crate) fn gcd(a: &Terms, b: &Terms, n: usize) -> Terms {
    if a.is_empty() {
        return monic(b);
    }
    if b.is_empty() {
        return monic(a);
    }
    let Some(k) = first_var(a, b, n) else {
        return one(n);
    };
    let ca = content(a, k, n);
    let cb = content(b, k, n);
    let c = gcd(&ca, &cb, n);
    let pa = divide_exact(a, &ca).expect("content divides");
    let pb = divide_exact(b, &cb).expect("content divides");
    let (pa, pb) = (integer_primitive(&pa), integer_primitive(&pb));
    let (mut f, mut g) = if degree_in(&pa, k) >= degree_in(&pb, k) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    let h = loop {
        if degree_in(&g, k).unwrap_or(0) == 0 {
            // g is free of x_k and primitive, hence a constant
            break one(n);
        }
        let r = prem(&f, &g, k);
        if r.is_empty() {
            break g;
        }
        if degree_in(&r, k).unwrap_or(0) == 0 {
            break one(n);
        }
        let cr = content(&r, k, n);
        let pr = integer_primitive(&divide_exact(&r, &cr).expect("content divides"));
        f = g;
        g = pr;
    };
    let hc = content(&h, k, n);
    let hp = divide_exact(&h, &hc).expect("content divides");
    monic(&mul(&c, &hp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn t(terms: &[(&[i32], i64)]) -> Terms {
        let mut out = Terms::new();
        for (e, c) in terms {
            add_term(&mut out, e.to_vec(), BigRational::from_integer(BigInt::from(*c)));
        }
        out
    }

    #[test]
    fn exact_division() {
        // (x^2 - 1) / (x - 1) = x + 1
        let a = t(&[(&[2], 1), (&[0], -1)]);
        let b = t(&[(&[1], 1), (&[0], -1)]);
        assert_eq!(divide_exact(&a, &b).unwrap(), t(&[(&[1], 1), (&[0], 1)]));
        assert!(divide_exact(&b, &a).is_none());
    }

    #[test]
    fn univariate_gcd() {
        // gcd((x-1)(x+2), (x-1)(x-3)) = x - 1
        let a = t(&[(&[2], 1), (&[1], 1), (&[0], -2)]);
        let b = t(&[(&[2], 1), (&[1], -4), (&[0], 3)]);
        assert_eq!(gcd(&a, &b, 1), t(&[(&[1], 1), (&[0], -1)]));
    }

    #[test]
    fn bivariate_gcd() {
        // a = (x - y)(x + 1), b = (x - y)(y + 2)
        let xy = t(&[(&[1, 0], 1), (&[0, 1], -1)]);
        let a = mul(&xy, &t(&[(&[1, 0], 1), (&[0, 0], 1)]));
        let b = mul(&xy, &t(&[(&[0, 1], 1), (&[0, 0], 2)]));
        assert_eq!(gcd(&a, &b, 2), xy);
    }

    #[test]
    fn coprime_gives_one() {
        let a = t(&[(&[1, 0], 1), (&[0, 0], 1)]);
        let b = t(&[(&[0, 1], 1), (&[0, 0], 1)]);
        assert_eq!(gcd(&a, &b, 2), one(2));
    }
}
