use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blocks::{BlockClassification, RState};
use crate::plancherel::WeylOrder;

use super::{ExtQuotError, FiniteOrbitModel, Result};

pub const DEFAULT_TORSION: u32 = 6;

/// All involutions of `{0, ..., n-1}`, the identity included.
pub fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn go(perm: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
        let n = perm.len();
        if i == n {
            out.push(perm.clone());
            return;
        }
        if perm[i] != usize::MAX {
            return go(perm, i + 1, out);
        }
        perm[i] = i;
        go(perm, i + 1, out);
        for j in i + 1..n {
            if perm[j] == usize::MAX {
                perm[i] = j;
                perm[j] = i;
                go(perm, i + 1, out);
                perm[j] = usize::MAX;
            }
        }
        perm[i] = usize::MAX;
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; n], 0, &mut out);
    out
}

/// Every model on `Z/n` for `1 <= n <= max_points` with trivial `Gamma` or
/// `Z/2` acting by an arbitrary involution, cocycles trivial.
pub fn sweep_models(max_points: usize) -> Vec<FiniteOrbitModel> {
    let mut out = Vec::new();
    for n in 1..=max_points {
        let id: Vec<usize> = (0..n).collect();
        out.push(FiniteOrbitModel::cyclic(n as u32, vec![id.clone()]).expect("valid model"));
        for s in involutions(n) {
            out.push(FiniteOrbitModel::cyclic(n as u32, vec![id.clone(), s]).expect("valid model"));
        }
    }
    out
}

/// A group-side model, a Galois-side model and a point map between them.
#[derive(Debug, Clone)]
pub struct PairedModel {
    pub label: String,
    pub torsion: u32,
    pub group: FiniteOrbitModel,
    pub galois: FiniteOrbitModel,
    pub map: Vec<usize>,
}

fn inversion(moduli: &[u32], shift: &[i64]) -> FiniteOrbitModel {
    FiniteOrbitModel::affine(moduli, Some((-1, shift))).expect("x -> -x + b is an involution")
}

/// Models at torsion levels `levels`, five per level and one more on
/// `Z/n x Z/2` for even `n`: identity maps, offset maps `x -> x + c` with
/// the Galois action conjugated to match, offset maps spoiled by a random
/// transposition, and maps against a Galois action with a different
/// shift. Equivariance is not asserted here; it is for the checker to
/// decide.
pub fn paired_corpus(seed: u64, levels: std::ops::RangeInclusive<u32>) -> Vec<PairedModel> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in levels {
        let mut shapes = vec![vec![n]];
        if n % 2 == 0 {
            shapes.push(vec![n, 2]);
        }
        for moduli in shapes {
            let r = moduli.len();
            let zero = vec![0i64; r];
            let trivial = FiniteOrbitModel::affine(&moduli, None).expect("valid model");
            let inv = inversion(&moduli, &zero);
            let id: Vec<usize> = (0..inv.len()).collect();
            let name = format!("{moduli:?}");
            if r > 1 {
                let c: Vec<i64> = moduli.iter().map(|&m| rng.gen_range(0..i64::from(m))).collect();
                let galois = inversion(&moduli, &c.iter().map(|x| 2 * x).collect::<Vec<_>>());
                let map = (0..inv.len()).map(|x| galois.translate(x, &c)).collect();
                out.push(PairedModel { label: format!("{name} offset {c:?}"), torsion: n, group: inv, galois, map });
                continue;
            }
            out.push(PairedModel {
                label: format!("{name} trivial Gamma, identity"),
                torsion: n,
                group: trivial.clone(),
                galois: trivial,
                map: id.clone(),
            });
            out.push(PairedModel {
                label: format!("{name} inversion, identity"),
                torsion: n,
                group: inv.clone(),
                galois: inv.clone(),
                map: id.clone(),
            });
            let c = rng.gen_range(1..i64::from(n.max(2)));
            let galois = inversion(&moduli, &[2 * c]);
            let offset: Vec<usize> = (0..inv.len()).map(|x| inv.translate(x, &[c])).collect();
            out.push(PairedModel {
                label: format!("{name} offset {c}"),
                torsion: n,
                group: inv.clone(),
                galois: galois.clone(),
                map: offset.clone(),
            });
            let mut bad = offset;
            let picks: Vec<usize> = (0..bad.len()).collect::<Vec<_>>().choose_multiple(&mut rng, 2).copied().collect();
            bad.swap(picks[0], picks[1]);
            out.push(PairedModel {
                label: format!("{name} offset {c} with points {:?} swapped", picks),
                torsion: n,
                group: inv.clone(),
                galois,
                map: bad,
            });
            let other = inversion(&moduli, &[1]);
            out.push(PairedModel {
                label: format!("{name} inversion vs shifted inversion, identity"),
                torsion: n,
                group: inv,
                galois: other,
                map: id,
            });
        }
    }
    out
}

/// The `n`-torsion model of the orbit of a block, with `Gamma = W(M, O)`
/// acting by inversion when that group is nontrivial.
pub fn model_for_block(w: WeylOrder, r: RState, n: u32) -> Result<FiniteOrbitModel> {
    if n == 0 {
        return Err(ExtQuotError::InvalidModel("torsion level must be at least 1".into()));
    }
    match (w, r) {
        (_, RState::Unknown) => Err(ExtQuotError::UnknownRGroup),
        (WeylOrder::Trivial, RState::Trivial) => FiniteOrbitModel::affine(&[n], None),
        _ => FiniteOrbitModel::affine(&[n], Some((-1, &[0]))),
    }
}

/// The `G`- and `G^0`-side models of a classified block.
pub fn block_models(c: &BlockClassification, n: u32) -> Result<(FiniteOrbitModel, FiniteOrbitModel)> {
    Ok((model_for_block(c.w_o, c.r_o, n)?, model_for_block(c.w_o0, c.r_o0, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| involutions(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 10, 26, 76, 232, 764]);
    }

    #[test]
    fn corpus_size() {
        let c = paired_corpus(0, 2..=12);
        assert!(c.len() >= 50, "{}", c.len());
        assert!(c.iter().all(|p| (2..=12).contains(&p.torsion)));
    }
}
