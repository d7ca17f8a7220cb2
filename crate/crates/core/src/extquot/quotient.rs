use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{FiniteOrbitModel, Result};

/// A point of the extended quotient: an orbit, named by its least point,
/// and an irreducible of the stabilizer algebra. For a stabilizer of order
/// 2, label 0 is the trivial character and 1 the sign character (after
/// untwisting by a coboundary).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExtQuotPoint {
    pub representative: Vec<u32>,
    pub irrep: usize,
}

/// `(X // Gamma)_natural`, sorted by representative then label.
pub fn extended_quotient(m: &FiniteOrbitModel) -> Result<Vec<ExtQuotPoint>> {
    let mut out = Vec::new();
    for orbit in m.orbits() {
        let x = orbit[0];
        let stab = m.stabilizer(x)?;
        for irrep in 0..stab.len() {
            out.push(ExtQuotPoint { representative: m.points()[x].clone(), irrep });
        }
    }
    out.sort();
    Ok(out)
}

/// `2k + m` for `k` fixed points and `m` free orbits of an order-2 group;
/// `|X|` for trivial `Gamma`.
pub fn closed_form_count(m: &FiniteOrbitModel) -> usize {
    if m.gamma_order() == 1 {
        return m.len();
    }
    let fixed = (0..m.len()).filter(|&x| m.act(1, x) == x).count();
    2 * fixed + (m.len() - fixed) / 2
}

/// Number of simple modules of `C(X) x| Gamma`, computed as the dimension
/// of its center. Cocycle tables are ignored; the count is meant for
/// models whose cocycles are trivial.
pub fn crossed_product_irr_count(m: &FiniteOrbitModel) -> usize {
    let n = m.len();
    let g = m.gamma_order();
    let dim = n * g;
    let basis = |x: usize, a: usize| x * g + a;
    // (e_x a)(e_y b) = [x = a.y] e_x (ab); group law is XOR on indices
    let product = |x: usize, a: usize, y: usize, b: usize| -> Option<usize> {
        (m.act(a, y) == x).then(|| basis(x, a ^ b))
    };
    // z = sum c_(x,a) e_x a commutes with every basis element e_y b
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for y in 0..n {
        for b in 0..g {
            let mut eqs = vec![vec![BigRational::zero(); dim]; dim];
            for x in 0..n {
                for a in 0..g {
                    let var = basis(x, a);
                    if let Some(k) = product(x, a, y, b) {
                        eqs[k][var] += BigRational::one();
                    }
                    if let Some(k) = product(y, b, x, a) {
                        eqs[k][var] -= BigRational::one();
                    }
                }
            }
            rows.extend(eqs.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
        }
    }
    dim - rank(rows, dim)
}

fn rank(mut rows: Vec<Vec<BigRational>>, ncols: usize) -> usize {
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for c in col..ncols {
            rows[r][c] = &rows[r][c] * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for c in col..ncols {
                    let d = &f * &rows[r][c];
                    rows[i][c] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_point_model() {
        let m = FiniteOrbitModel::cyclic(3, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let eq = extended_quotient(&m).unwrap();
        assert_eq!(eq.len(), 3);
        assert_eq!(eq.iter().filter(|p| p.representative == [0]).count(), 2);
        assert_eq!(crossed_product_irr_count(&m), 3);
        assert_eq!(closed_form_count(&m), 3);
    }

    #[test]
    fn trivial_and_free() {
        let m = FiniteOrbitModel::cyclic(5, vec![(0..5).collect()]).unwrap();
        assert_eq!(extended_quotient(&m).unwrap().len(), 5);
        assert_eq!(crossed_product_irr_count(&m), 5);
        let free = FiniteOrbitModel::cyclic(2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(extended_quotient(&free).unwrap().len(), 1);
        assert_eq!(crossed_product_irr_count(&free), 1);
    }
}
