use serde::Serialize;

use super::datum::{dot, Vector};
use super::{generate_weyl, BasedRootDatum, Result, RootDataError, DEFAULT_GROWTH_BOUND};

/// Simple-root coordinates of the positive roots of G2 in the basis
/// `{alpha, beta}`, `alpha` short.
const G2_POSITIVE: [[i64; 2]; 6] = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]];

/// Gram matrix of `(.|.)` on `{alpha, beta}`.
const G2_FORM: [[i64; 2]; 2] = [[2, -3], [-3, 6]];

/// G2 with `X` the root lattice on the basis `{alpha, beta}` and `Y` the
/// dual basis. Roots are listed positive first, in the order
/// `alpha, beta, alpha+beta, 2alpha+beta, 3alpha+beta, 3alpha+2beta`.
pub fn g2_datum() -> BasedRootDatum {
    let mut roots: Vec<Vector> = G2_POSITIVE.iter().map(|r| r.to_vec()).collect();
    roots.extend(G2_POSITIVE.iter().map(|r| vec![-r[0], -r[1]]));
    let inner = |a: &[i64], b: &[i64]| -> i64 {
        (0..2).map(|i| (0..2).map(|j| a[i] * G2_FORM[i][j] * b[j]).sum::<i64>()).sum()
    };
    let coroots = roots
        .iter()
        .map(|r| {
            let rr = inner(r, r);
            (0..2)
                .map(|i| {
                    let mut e = [0; 2];
                    e[i] = 1;
                    2 * inner(&e, r) / rr
                })
                .collect()
        })
        .collect();
    BasedRootDatum::new("G2", vec!["alpha".into(), "beta".into()], roots, coroots, vec![0, 1])
        .and_then(|d| d.with_form(G2_FORM.iter().map(|r| r.to_vec()).collect()))
        .expect("G2 datum is valid")
}

/// A coordinate chart `t -> (c_1(t), c_2(t))` on a rank-two torus, given by
/// two characters `c_i`, together with recorded values of some cocharacters
/// in that chart: `lambda(a) = chart^-1(a^k_1, a^k_2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvalChart {
    pub name: String,
    pub components: Vec<(String, Vector)>,
    pub recorded: Vec<(String, Vector, Vector)>,
}

impl EvalChart {
    /// The exponents `<c_i, lambda>` for each recorded cocharacter.
    pub fn computed(&self) -> Vec<(String, Vector)> {
        self.recorded
            .iter()
            .map(|(name, v, _)| (name.clone(), self.components.iter().map(|(_, c)| dot(c, v)).collect()))
            .collect()
    }

    pub fn consistent(&self) -> bool {
        self.recorded.iter().zip(self.computed()).all(|((_, _, want), (_, got))| *want == got)
    }
}

/// The charts `eta_alpha` and `eta_beta` on `T` and `eta_{beta^vee}` on the
/// dual torus, with the coroot (resp. root) values recorded for G2.
pub fn g2_eval_charts() -> Vec<EvalChart> {
    let s = |x: &str| x.to_string();
    vec![
        EvalChart {
            name: s("eta_alpha"),
            components: vec![(s("2alpha+beta"), vec![2, 1]), (s("alpha+beta"), vec![1, 1])],
            recorded: vec![
                (s("alpha^vee"), vec![2, -3], vec![1, -1]),
                (s("beta^vee"), vec![-1, 2], vec![0, 1]),
            ],
        },
        EvalChart {
            name: s("eta_beta"),
            components: vec![(s("alpha+beta"), vec![1, 1]), (s("alpha"), vec![1, 0])],
            recorded: vec![(s("beta^vee"), vec![-1, 2], vec![1, -1])],
        },
        EvalChart {
            name: s("eta_beta^vee"),
            // alpha^vee + 2beta^vee and alpha^vee + beta^vee in Y
            components: vec![(s("alpha^vee+2beta^vee"), vec![0, 1]), (s("alpha^vee+beta^vee"), vec![1, -1])],
            recorded: vec![
                (s("alpha"), vec![1, 0], vec![0, 1]),
                (s("beta"), vec![0, 1], vec![1, -1]),
            ],
        },
    ]
}

/// The Levi subgroup generated by one simple root of a rank-two datum and
/// its relative Weyl group `N_W(M)/W_M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalLevi {
    pub levi_root: usize,
    pub long: bool,
    /// Positive root orthogonal to the Levi root; its reflection generates
    /// the relative Weyl group when that has order 2.
    pub orthogonal_root: Option<usize>,
    pub relative_weyl_order: usize,
}

pub fn maximal_levi(d: &BasedRootDatum, simple_index: usize) -> Result<MaximalLevi> {
    let &levi_root = d
        .simple()
        .get(simple_index)
        .ok_or_else(|| RootDataError::NoSuchRoot(format!("simple root {simple_index}")))?;
    let gamma = &d.roots()[levi_root];
    let neg: Vector = gamma.iter().map(|x| -x).collect();
    let w = generate_weyl(d, DEFAULT_GROWTH_BOUND)?;
    let stab = w
        .elements()
        .iter()
        .filter(|e| {
            let img = e.act(gamma);
            img == *gamma || img == neg
        })
        .count();
    let orth: Vec<usize> = d
        .positive_roots()
        .into_iter()
        .filter(|&i| dot(&d.roots()[i], &d.coroots()[levi_root]) == 0)
        .collect();
    let norm = |i: usize| d.inner(&d.roots()[i], &d.roots()[i]);
    let long = match norm(levi_root) {
        Some(n) => (0..d.roots().len()).all(|i| norm(i).is_some_and(|m| m <= n)),
        None => false,
    };
    Ok(MaximalLevi {
        levi_root,
        long,
        orthogonal_root: match orth.as_slice() {
            [i] => Some(*i),
            _ => None,
        },
        relative_weyl_order: stab / 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_coroots() {
        let d = g2_datum();
        assert_eq!(d.simple_coroot(0), &vec![2, -3]);
        assert_eq!(d.simple_coroot(1), &vec![-1, 2]);
    }

    #[test]
    fn charts_consistent() {
        for c in g2_eval_charts() {
            assert!(c.consistent(), "{}", c.name);
        }
    }

    #[test]
    fn levis() {
        let d = g2_datum();
        let short = maximal_levi(&d, 0).unwrap();
        let long = maximal_levi(&d, 1).unwrap();
        assert!(!short.long && long.long);
        assert_eq!(d.simple_coordinates(short.orthogonal_root.unwrap()), &vec![3, 2]);
        assert_eq!(d.simple_coordinates(long.orthogonal_root.unwrap()), &vec![2, 1]);
        assert_eq!((short.relative_weyl_order, long.relative_weyl_order), (2, 2));
    }
}
