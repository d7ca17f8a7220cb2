use std::collections::HashMap;

use serde::Serialize;

use super::datum::{dot, Vector};
use super::{BasedRootDatum, Result, RootDataError};

pub const DEFAULT_GROWTH_BOUND: usize = 100_000;

pub type Matrix = Vec<Vector>;

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn apply(m: &Matrix, x: &[i64]) -> Vector {
    m.iter().map(|row| dot(row, x)).collect()
}

/// An element of the finite Weyl group: a reduced word in the simple
/// reflections (indices into the simple system) and its matrix on `X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub matrix: Matrix,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn act(&self, x: &[i64]) -> Vector {
        apply(&self.matrix, x)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity(self.matrix.len())
    }
}

/// The full finite Weyl group, in breadth-first (length) order.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<Matrix, usize>,
    simple: Vec<Matrix>,
}

impl WeylGroup {
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn find(&self, m: &Matrix) -> Option<&WeylElement> {
        self.index.get(m).map(|&i| &self.elements[i])
    }

    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("group has the identity")
    }

    /// `s_i * w`.
    pub fn left_mul_simple(&self, i: usize, w: &WeylElement) -> &WeylElement {
        self.find(&mat_mul(&self.simple[i], &w.matrix)).expect("group is closed")
    }

    pub fn multiply(&self, a: &WeylElement, b: &WeylElement) -> &WeylElement {
        self.find(&mat_mul(&a.matrix, &b.matrix)).expect("group is closed")
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, d: &BasedRootDatum, w: &WeylElement) -> usize {
        d.positive_roots()
            .into_iter()
            .filter(|&i| {
                let img = w.act(&d.roots()[i]);
                let j = d.root_index(&img).expect("Weyl group permutes roots");
                !d.is_positive(j)
            })
            .count()
    }
}

/// Generates the Weyl group by breadth-first closure over right
/// multiplication by simple reflections, so that the first word reaching an
/// element is reduced. Errors if more than `bound` elements appear.
pub fn generate_weyl(d: &BasedRootDatum, bound: usize) -> Result<WeylGroup> {
    let n = d.rank();
    let simple: Vec<Matrix> = d.simple().iter().map(|&i| d.reflection_matrix(i)).collect();
    let id = identity(n);
    let mut elements = vec![WeylElement { word: Vec::new(), matrix: id.clone() }];
    let mut index = HashMap::from([(id, 0)]);
    let mut k = 0;
    while k < elements.len() {
        for (i, s) in simple.iter().enumerate() {
            let m = mat_mul(&elements[k].matrix, s);
            if index.contains_key(&m) {
                continue;
            }
            if elements.len() >= bound {
                return Err(RootDataError::NotFinite(bound));
            }
            let mut word = elements[k].word.clone();
            word.push(i);
            index.insert(m.clone(), elements.len());
            elements.push(WeylElement { word, matrix: m });
        }
        k += 1;
    }
    Ok(WeylGroup { elements, index, simple })
}
