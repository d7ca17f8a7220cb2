use std::fmt;

use serde::Serialize;

/// Element `x -> eps*x + n` of the rank-one affine Weyl group
/// `{1, s} ⋉ Z`, with the translation measured in units of the coroot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AffineWeylElement {
    pub eps: i8,
    pub n: i64,
}

impl AffineWeylElement {
    pub const IDENTITY: Self = AffineWeylElement { eps: 1, n: 0 };
    /// The finite reflection `x -> -x`.
    pub const S0: Self = AffineWeylElement { eps: -1, n: 0 };
    /// The affine reflection `x -> 1 - x`.
    pub const S1: Self = AffineWeylElement { eps: -1, n: 1 };

    pub fn compose(self, other: Self) -> Self {
        AffineWeylElement { eps: self.eps * other.eps, n: i64::from(self.eps) * other.n + self.n }
    }

    pub fn inverse(self) -> Self {
        // x = eps*y + n  =>  y = eps*x - eps*n
        AffineWeylElement { eps: self.eps, n: -i64::from(self.eps) * self.n }
    }

    pub fn apply(self, x: i64) -> i64 {
        i64::from(self.eps) * x + self.n
    }

    pub fn length(self) -> usize {
        if self.eps == 1 {
            2 * self.n.unsigned_abs() as usize
        } else {
            (2 * self.n - 1).unsigned_abs() as usize
        }
    }

    /// The unique reduced word in `{0, 1}` (indices of `S0`, `S1`).
    pub fn reduced_word(self) -> Vec<usize> {
        let len = self.length();
        if len == 0 {
            return Vec::new();
        }
        for first in [0usize, 1] {
            let word: Vec<usize> = (0..len).map(|k| (first + k) % 2).collect();
            if RankOneAffine::evaluate(&word) == self {
                return word;
            }
        }
        unreachable!("every element has an alternating reduced word")
    }
}

impl fmt::Display for AffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.reduced_word().iter().map(|i| format!("s{i}")).collect();
        if w.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&w.join("·"))
        }
    }
}

/// Weight function on the rank-one affine Weyl group: `L(s0) = lambda`,
/// `L(s1) = lambda_star`, extended additively along reduced words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankOneAffine {
    pub lambda: u32,
    pub lambda_star: u32,
}

impl RankOneAffine {
    pub fn evaluate(word: &[usize]) -> AffineWeylElement {
        word.iter().fold(AffineWeylElement::IDENTITY, |acc, &i| {
            acc.compose(if i == 0 { AffineWeylElement::S0 } else { AffineWeylElement::S1 })
        })
    }

    pub fn weight(&self, w: AffineWeylElement) -> u64 {
        w.reduced_word()
            .iter()
            .map(|&i| u64::from(if i == 0 { self.lambda } else { self.lambda_star }))
            .sum()
    }

    /// All elements of length at most `max_len`.
    pub fn elements_up_to(max_len: usize) -> Vec<AffineWeylElement> {
        let mut out = vec![AffineWeylElement::IDENTITY];
        for len in 1..=max_len {
            for first in [0usize, 1] {
                let word: Vec<usize> = (0..len).map(|k| (first + k) % 2).collect();
                out.push(Self::evaluate(&word));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_involutions() {
        for s in [AffineWeylElement::S0, AffineWeylElement::S1] {
            assert_eq!(s.compose(s), AffineWeylElement::IDENTITY);
            assert_eq!(s.length(), 1);
        }
    }

    #[test]
    fn length_matches_word_length() {
        for w in RankOneAffine::elements_up_to(9) {
            assert_eq!(w.reduced_word().len(), w.length());
            assert_eq!(RankOneAffine::evaluate(&w.reduced_word()), w);
            assert_eq!(w.compose(w.inverse()), AffineWeylElement::IDENTITY);
        }
    }

    #[test]
    fn weight_is_additive_on_reduced_products() {
        let l = RankOneAffine { lambda: 3, lambda_star: 1 };
        let all = RankOneAffine::elements_up_to(6);
        for &a in &all {
            for &b in &all {
                let ab = a.compose(b);
                if ab.length() == a.length() + b.length() {
                    assert_eq!(l.weight(ab), l.weight(a) + l.weight(b));
                }
            }
        }
    }
}
