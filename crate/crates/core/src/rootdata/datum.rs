use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{Result, RootDataError};

pub type Vector = Vec<i64>;

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(RootDataError::Invalid(msg.into()))
}

/// Solves `a * x = b` over the rationals for square `a`; `None` if singular.
pub(crate) fn solve(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let r = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| row.iter().map(|&x| r(x)).chain([r(bi)]).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=n {
                    let t = &m[col][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

#[derive(Debug, Deserialize)]
struct RawDatum {
    name: String,
    basis: Vec<String>,
    roots: Vec<Vector>,
    coroots: Vec<Vector>,
    simple: Vec<usize>,
    #[serde(default)]
    form: Option<Vec<Vector>>,
}

impl TryFrom<RawDatum> for BasedRootDatum {
    type Error = RootDataError;

    fn try_from(raw: RawDatum) -> Result<Self> {
        let d = BasedRootDatum::new(&raw.name, raw.basis, raw.roots, raw.coroots, raw.simple)?;
        match raw.form {
            Some(f) => d.with_form(f),
            None => Ok(d),
        }
    }
}

/// `(X, R, Y, R^vee)` with a choice of simple roots.
///
/// `coroots[i]` is the coroot of `roots[i]`. Positive roots are the
/// nonnegative integer combinations of the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDatum")]
pub struct BasedRootDatum {
    name: String,
    basis: Vec<String>,
    roots: Vec<Vector>,
    coroots: Vec<Vector>,
    simple: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    form: Option<Vec<Vector>>,
    #[serde(skip)]
    coords: Vec<Vector>,
}

impl BasedRootDatum {
    pub fn new(
        name: &str,
        basis: Vec<String>,
        roots: Vec<Vector>,
        coroots: Vec<Vector>,
        simple: Vec<usize>,
    ) -> Result<Self> {
        let n = basis.len();
        if roots.len() != coroots.len() {
            return invalid("roots and coroots differ in number");
        }
        if roots.iter().chain(&coroots).any(|v| v.len() != n) {
            return invalid("vector length differs from lattice rank");
        }
        let mut index = HashMap::new();
        for (i, r) in roots.iter().enumerate() {
            if index.insert(r.clone(), i).is_some() {
                return invalid(format!("root {r:?} listed twice"));
            }
        }
        for (i, (r, c)) in roots.iter().zip(&coroots).enumerate() {
            if dot(r, c) != 2 {
                return invalid(format!("<root {i}, coroot {i}> = {} instead of 2", dot(r, c)));
            }
            let neg: Vector = r.iter().map(|x| -x).collect();
            match index.get(&neg) {
                Some(&j) if coroots[j].iter().zip(c).all(|(a, b)| *a == -b) => {}
                _ => return invalid(format!("-{r:?} missing or with wrong coroot")),
            }
        }
        if simple.iter().any(|&s| s >= roots.len()) {
            return invalid("simple root index out of range");
        }
        for &s in &simple {
            for (r, c) in roots.iter().zip(&coroots) {
                let k = dot(r, &coroots[s]);
                let img: Vector = r.iter().zip(&roots[s]).map(|(x, a)| x - k * a).collect();
                let Some(&j) = index.get(&img) else {
                    return invalid(format!("simple reflection {s} does not permute the roots"));
                };
                let kc = dot(&roots[s], c);
                let cimg: Vector = c.iter().zip(&coroots[s]).map(|(y, a)| y - kc * a).collect();
                if cimg != coroots[j] {
                    return invalid(format!("simple reflection {s} does not permute the coroots"));
                }
            }
        }
        let cartan: Vec<Vector> = simple
            .iter()
            .map(|&j| simple.iter().map(|&i| dot(&roots[i], &coroots[j])).collect())
            .collect();
        let mut coords = Vec::with_capacity(roots.len());
        for r in &roots {
            let b: Vector = simple.iter().map(|&j| dot(r, &coroots[j])).collect();
            let c = if simple.is_empty() { Some(Vec::new()) } else { solve(&cartan, &b) };
            let Some(c) = c else {
                return invalid("simple roots are linearly dependent");
            };
            if c.iter().any(|x| !x.is_integer()) {
                return invalid(format!("root {r:?} is not an integer combination of simple roots"));
            }
            let c: Vector = c.iter().map(|x| x.to_integer().to_i64().expect("small")).collect();
            let mut back = vec![0; n];
            for (ci, &s) in c.iter().zip(&simple) {
                for (b, a) in back.iter_mut().zip(&roots[s]) {
                    *b += ci * a;
                }
            }
            if &back != r {
                return invalid(format!("root {r:?} is not in the span of the simple roots"));
            }
            if c.iter().any(|&x| x > 0) && c.iter().any(|&x| x < 0) {
                return invalid(format!("root {r:?} is neither positive nor negative"));
            }
            coords.push(c);
        }
        Ok(BasedRootDatum { name: name.to_string(), basis, roots, coroots, simple, form: None, coords })
    }

    /// Builds the datum whose `X` is the root lattice, from a Cartan matrix
    /// `a[i][j] = <alpha_i, alpha_j^vee>`, closing the simple roots under
    /// simple reflections.
    pub fn from_cartan(name: &str, a: &[Vector], bound: usize) -> Result<Self> {
        let n = a.len();
        if a.iter().any(|row| row.len() != n) {
            return invalid("Cartan matrix must be square");
        }
        let mut roots: Vec<Vector> = Vec::new();
        let mut coroots: Vec<Vector> = Vec::new();
        let mut seen = HashMap::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            let c: Vector = (0..n).map(|k| a[k][i]).collect();
            seen.insert(e.clone(), roots.len());
            roots.push(e);
            coroots.push(c);
        }
        let simple_c: Vec<Vector> = coroots.clone();
        let mut k = 0;
        while k < roots.len() {
            for i in 0..n {
                let r = roots[k].clone();
                let c = coroots[k].clone();
                let m = dot(&r, &simple_c[i]);
                let mut img = r.clone();
                img[i] -= m;
                if !seen.contains_key(&img) {
                    // alpha_i is the i-th basis vector, so <alpha_i, c> = c[i]
                    let mc = c[i];
                    let cimg: Vector = c.iter().zip(&simple_c[i]).map(|(y, s)| y - mc * s).collect();
                    seen.insert(img.clone(), roots.len());
                    roots.push(img);
                    coroots.push(cimg);
                    if roots.len() > bound {
                        return Err(RootDataError::NotFinite(bound));
                    }
                }
            }
            k += 1;
        }
        let basis = (1..=n).map(|i| format!("a{i}")).collect();
        Self::new(name, basis, roots, coroots, (0..n).collect())
    }

    /// Attaches a Gram matrix `(x|y)` on `X`, checking that it induces the
    /// coroots: `<x, gamma^vee> = 2(x|gamma)/(gamma|gamma)`.
    pub fn with_form(mut self, form: Vec<Vector>) -> Result<Self> {
        let n = self.rank();
        if form.len() != n || form.iter().any(|r| r.len() != n) {
            return invalid("form has the wrong shape");
        }
        for i in 0..n {
            for j in 0..n {
                if form[i][j] != form[j][i] {
                    return invalid("form is not symmetric");
                }
            }
        }
        self.form = Some(form);
        for (r, c) in self.roots.iter().zip(&self.coroots) {
            let rr = self.inner(r, r).expect("form set");
            if rr <= 0 {
                return invalid("form is not positive on roots");
            }
            for i in 0..n {
                let mut e = vec![0; n];
                e[i] = 1;
                if 2 * self.inner(&e, r).expect("form set") != c[i] * rr {
                    return invalid(format!("form does not induce the coroot of {r:?}"));
                }
            }
        }
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple.len()
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vector] {
        &self.coroots
    }

    pub fn simple(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_root(&self, i: usize) -> &Vector {
        &self.roots[self.simple[i]]
    }

    pub fn simple_coroot(&self, i: usize) -> &Vector {
        &self.coroots[self.simple[i]]
    }

    /// Coefficients of `roots[i]` in the simple roots.
    pub fn simple_coordinates(&self, i: usize) -> &Vector {
        &self.coords[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.coords[i].iter().any(|&x| x > 0)
    }

    /// Indices of positive roots, ordered by height and then by coordinates.
    pub fn positive_roots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.roots.len()).filter(|&i| self.is_positive(i)).collect();
        p.sort_by_key(|&i| (self.height(i), self.coords[i].clone()));
        p
    }

    pub fn height(&self, i: usize) -> i64 {
        self.coords[i].iter().sum()
    }

    pub fn root_index(&self, r: &[i64]) -> Option<usize> {
        self.roots.iter().position(|x| x == r)
    }

    /// Root with the given simple-root coordinates.
    pub fn root_by_coordinates(&self, c: &[i64]) -> Result<usize> {
        self.coords
            .iter()
            .position(|x| x == c)
            .ok_or_else(|| RootDataError::NoSuchRoot(format!("{c:?}")))
    }

    pub fn coroot_of(&self, r: &[i64]) -> Option<&Vector> {
        self.root_index(r).map(|i| &self.coroots[i])
    }

    /// `<x, y>` for `x` in `X`, `y` in `Y`.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        dot(x, y)
    }

    /// `(a|b)` when a form is attached.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Option<i64> {
        let f = self.form.as_ref()?;
        let mut s = 0;
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                s += ai * f[i][j] * bj;
            }
        }
        Some(s)
    }

    pub fn form(&self) -> Option<&[Vector]> {
        self.form.as_deref()
    }

    /// `a[i][j] = <alpha_i, alpha_j^vee>` over the simple roots.
    pub fn cartan_matrix(&self) -> Vec<Vector> {
        self.simple
            .iter()
            .map(|&i| self.simple.iter().map(|&j| dot(&self.roots[i], &self.coroots[j])).collect())
            .collect()
    }

    /// `s_gamma(x) = x - <x, gamma^vee> gamma` for `gamma = roots[i]`.
    pub fn reflect(&self, i: usize, x: &[i64]) -> Vector {
        let k = dot(x, &self.coroots[i]);
        x.iter().zip(&self.roots[i]).map(|(a, r)| a - k * r).collect()
    }

    /// The dual reflection on `Y`.
    pub fn reflect_coweight(&self, i: usize, y: &[i64]) -> Vector {
        let k = dot(&self.roots[i], y);
        y.iter().zip(&self.coroots[i]).map(|(a, c)| a - k * c).collect()
    }

    /// Matrix of `s_gamma` on `X` (columns are images of basis vectors).
    pub fn reflection_matrix(&self, i: usize) -> Vec<Vector> {
        let n = self.rank();
        let mut m = vec![vec![0; n]; n];
        for col in 0..n {
            let mut e = vec![0; n];
            e[col] = 1;
            for (row, v) in self.reflect(i, &e).into_iter().enumerate() {
                m[row][col] = v;
            }
        }
        m
    }

    /// Dual datum `(Y, R^vee, X, R)` with the simple coroots as base.
    pub fn dual(&self) -> Result<Self> {
        let basis = self.basis.iter().map(|b| format!("{b}^vee")).collect();
        Self::new(
            &format!("{}^vee", self.name),
            basis,
            self.coroots.clone(),
            self.roots.clone(),
            self.simple.clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> BasedRootDatum {
        BasedRootDatum::from_cartan("A1", &[vec![2]], 100).unwrap()
    }

    #[test]
    fn a1_has_two_roots() {
        let d = a1();
        assert_eq!(d.roots().len(), 2);
        assert_eq!(d.positive_roots().len(), 1);
    }

    #[test]
    fn rejects_bad_pairing() {
        let r = BasedRootDatum::new("bad", vec!["e".into()], vec![vec![1], vec![-1]], vec![vec![1], vec![-1]], vec![0]);
        assert!(matches!(r, Err(RootDataError::Invalid(_))));
    }

    #[test]
    fn rejects_missing_negative() {
        let r = BasedRootDatum::new("bad", vec!["e".into()], vec![vec![1]], vec![vec![2]], vec![0]);
        assert!(r.is_err());
    }

    #[test]
    fn gl2_style_datum() {
        // X = Z^2, alpha = e1 - e2, alpha^vee = e1* - e2*
        let d = BasedRootDatum::new(
            "GL2",
            vec!["e1".into(), "e2".into()],
            vec![vec![1, -1], vec![-1, 1]],
            vec![vec![1, -1], vec![-1, 1]],
            vec![0],
        )
        .unwrap();
        assert_eq!(d.reflect(0, &[1, 0]), vec![0, 1]);
        assert_eq!(d.semisimple_rank(), 1);
    }

    #[test]
    fn a2_closure() {
        let d = BasedRootDatum::from_cartan("A2", &[vec![2, -1], vec![-1, 2]], 100).unwrap();
        assert_eq!(d.roots().len(), 6);
    }
}
