use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::{BasedRootDatum, Result, RootDataError};

/// Cartan–Killing type of an irreducible component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E(n) => write!(f, "E{n}"),
            CartanType::F4 => f.write_str("F4"),
            CartanType::G2 => f.write_str("G2"),
        }
    }
}

impl CartanType {
    pub fn bad_primes(self) -> BTreeSet<u32> {
        match self {
            CartanType::A(_) => BTreeSet::new(),
            CartanType::B(_) | CartanType::C(_) | CartanType::D(_) => BTreeSet::from([2]),
            CartanType::G2 | CartanType::F4 | CartanType::E(6) | CartanType::E(7) => {
                BTreeSet::from([2, 3])
            }
            CartanType::E(_) => BTreeSet::from([2, 3, 5]),
        }
    }
}

fn unclassified<T>(msg: impl Into<String>) -> Result<T> {
    Err(RootDataError::Unclassified(msg.into()))
}

fn classify_component(a: &[Vec<i64>], nodes: &[usize]) -> Result<CartanType> {
    let n = nodes.len();
    if n == 1 {
        return Ok(CartanType::A(1));
    }
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    let mut edges = 0;
    for (x, &i) in nodes.iter().enumerate() {
        for (y, &j) in nodes.iter().enumerate().skip(x + 1) {
            let w = a[i][j] * a[j][i];
            if w == 0 {
                continue;
            }
            if !(1..=3).contains(&w) || a[i][j] > 0 || a[j][i] > 0 {
                return unclassified(format!("edge weight {w} between simple roots {i} and {j}"));
            }
            adj[x].push((y, w));
            adj[y].push((x, w));
            edges += 1;
        }
    }
    if edges != n - 1 {
        return unclassified("Dynkin diagram has a cycle");
    }
    let heavy: Vec<(usize, usize, i64)> = (0..n)
        .flat_map(|x| adj[x].iter().filter(move |(y, w)| *w > 1 && x < *y).map(move |&(y, w)| (x, y, w)))
        .collect();
    let degree = |x: usize| adj[x].len();
    let path = (0..n).all(|x| degree(x) <= 2);
    match heavy.as_slice() {
        [] if path => Ok(CartanType::A(n)),
        [] => {
            let branch: Vec<usize> = (0..n).filter(|&x| degree(x) == 3).collect();
            if branch.len() != 1 || (0..n).any(|x| degree(x) > 3) {
                return unclassified("diagram with more than one branch point");
            }
            let b = branch[0];
            let mut arms: Vec<usize> = adj[b]
                .iter()
                .map(|&(start, _)| {
                    let (mut prev, mut cur, mut len) = (b, start, 1);
                    while let Some(&(next, _)) = adj[cur].iter().find(|(y, _)| *y != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Ok(CartanType::D(k + 3)),
                [1, 2, 2] => Ok(CartanType::E(6)),
                [1, 2, 3] => Ok(CartanType::E(7)),
                [1, 2, 4] => Ok(CartanType::E(8)),
                _ => unclassified(format!("branched diagram with arms {arms:?}")),
            }
        }
        [(_, _, 3)] if n == 2 => Ok(CartanType::G2),
        [(x, y, 2)] if path => {
            if n == 2 {
                return Ok(CartanType::B(2));
            }
            let (i, j) = (nodes[*x], nodes[*y]);
            let end = if degree(*x) == 1 {
                Some((i, j))
            } else if degree(*y) == 1 {
                Some((j, i))
            } else {
                None
            };
            match end {
                // a[o][e] = -2 means the end node e is the short one
                Some((e, o)) if a[o][e] == -2 => Ok(CartanType::B(n)),
                Some(_) => Ok(CartanType::C(n)),
                None if n == 4 => Ok(CartanType::F4),
                None => unclassified("double bond in the interior of a long chain"),
            }
        }
        _ => unclassified("unsupported multiple bonds"),
    }
}

/// Types of the irreducible components, sorted.
pub fn classify(d: &BasedRootDatum) -> Result<Vec<CartanType>> {
    let a = d.cartan_matrix();
    let n = a.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut nodes = vec![start];
        comp[start] = start;
        let mut k = 0;
        while k < nodes.len() {
            let i = nodes[k];
            for j in 0..n {
                if j != i && comp[j] == usize::MAX && (a[i][j] != 0 || a[j][i] != 0) {
                    comp[j] = start;
                    nodes.push(j);
                }
            }
            k += 1;
        }
        nodes.sort_unstable();
        out.push(classify_component(&a, &nodes)?);
    }
    out.sort();
    Ok(out)
}

/// Primes bad for the root system: 2 unless every component is of type A, 3
/// for components of type G2, F4 or E, and 5 for E8.
pub fn bad_primes(d: &BasedRootDatum) -> Result<BTreeSet<u32>> {
    Ok(classify(d)?.into_iter().flat_map(CartanType::bad_primes).collect())
}
