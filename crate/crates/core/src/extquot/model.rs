use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{ExtQuotError, Result};

/// A 2-cocycle on a stabilizer `Gamma_x`, indexed by the positions of the
/// stabilizer elements in increasing order of their index in `Gamma`.
pub type Cocycle = Vec<Vec<BigRational>>;

/// A finite torsor `X` under `prod Z/n_i` with an action of a group
/// `Gamma` of order at most 2 and optional 2-cocycles on stabilizers.
///
/// Points carry coordinates in `prod Z/n_i`; the translation by `t` sends
/// the point with coordinates `c` to the point with coordinates `c + t`.
/// `Gamma` is given by permutation tables on point indices, element 0
/// being the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteOrbitModel {
    moduli: Vec<u32>,
    points: Vec<Vec<u32>>,
    gamma: Vec<Vec<usize>>,
    cocycles: BTreeMap<usize, Cocycle>,
    index: HashMap<Vec<u32>, usize>,
}

fn invalid(msg: impl Into<String>) -> ExtQuotError {
    ExtQuotError::InvalidModel(msg.into())
}

impl FiniteOrbitModel {
    pub fn new(moduli: Vec<u32>, points: Vec<Vec<u32>>, gamma: Vec<Vec<usize>>) -> Result<Self> {
        if moduli.contains(&0) {
            return Err(invalid("moduli must be positive"));
        }
        let order: usize = moduli.iter().map(|&n| n as usize).product();
        if points.len() != order {
            return Err(invalid(format!("{} points for a translation group of order {order}", points.len())));
        }
        let mut index = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            if p.len() != moduli.len() || p.iter().zip(&moduli).any(|(c, n)| c >= n) {
                return Err(invalid(format!("point {i} has coordinates {p:?} outside {moduli:?}")));
            }
            if index.insert(p.clone(), i).is_some() {
                return Err(invalid(format!("duplicate point {p:?}")));
            }
        }
        let n = points.len();
        if gamma.is_empty() || gamma.len() > 2 {
            return Err(invalid(format!("Gamma of order {} (need 1 or 2)", gamma.len())));
        }
        for (g, perm) in gamma.iter().enumerate() {
            let mut seen = vec![false; n];
            if perm.len() != n || perm.iter().any(|&j| j >= n || std::mem::replace(&mut seen[j], true)) {
                return Err(invalid(format!("Gamma element {g} is not a permutation of the points")));
            }
        }
        if gamma[0].iter().enumerate().any(|(i, &j)| i != j) {
            return Err(invalid("Gamma element 0 must be the identity"));
        }
        if let Some(s) = gamma.get(1) {
            if s.iter().enumerate().any(|(i, &j)| s[j] != i) {
                return Err(invalid("the nontrivial element of Gamma must square to the identity"));
            }
        }
        Ok(FiniteOrbitModel { moduli, points, gamma, cocycles: BTreeMap::new(), index })
    }

    /// `Z/n` with points `0..n` in order.
    pub fn cyclic(n: u32, gamma: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(vec![n], (0..n).map(|i| vec![i]).collect(), gamma)
    }

    /// The standard enumeration of `prod Z/n_i` (last coordinate fastest).
    pub fn grid_points(moduli: &[u32]) -> Vec<Vec<u32>> {
        let mut pts = vec![Vec::new()];
        for &n in moduli {
            pts = pts
                .into_iter()
                .flat_map(|p: Vec<u32>| {
                    (0..n).map(move |k| {
                        let mut q = p.clone();
                        q.push(k);
                        q
                    })
                })
                .collect();
        }
        pts
    }

    /// Standard points with `Gamma` acting by `x -> a*x + b` coordinatewise,
    /// `a` in `{1, -1}`; `None` gives trivial `Gamma`.
    pub fn affine(moduli: &[u32], involution: Option<(i64, &[i64])>) -> Result<Self> {
        let points = Self::grid_points(moduli);
        let mut gamma = vec![(0..points.len()).collect::<Vec<_>>()];
        if let Some((a, b)) = involution {
            let model = Self::new(moduli.to_vec(), points.clone(), gamma.clone())?;
            let perm = points
                .iter()
                .map(|p| {
                    let img: Vec<i64> = p.iter().zip(b).map(|(&c, &bi)| a * i64::from(c) + bi).collect();
                    model.point_index_wrapped(&img)
                })
                .collect();
            gamma.push(perm);
        }
        Self::new(moduli.to_vec(), points, gamma)
    }

    /// Attaches a cocycle to the stabilizer of point `x`. The table must
    /// satisfy the 2-cocycle identity with nonzero entries. Every such class
    /// on a group of order at most 2 is trivial over `C^x`.
    pub fn with_cocycle(mut self, x: usize, table: Cocycle) -> Result<Self> {
        let stab = self.stabilizer(x)?;
        let k = stab.len();
        if table.len() != k || table.iter().any(|r| r.len() != k) {
            return Err(ExtQuotError::Cocycle(format!("point {x}: table must be {k}x{k}")));
        }
        if table.iter().flatten().any(Zero::is_zero) {
            return Err(ExtQuotError::Cocycle(format!("point {x}: zero entry")));
        }
        // positions in the stabilizer multiply like indices in Gamma (XOR)
        let mul = |a: usize, b: usize| a ^ b;
        for g in 0..k {
            for h in 0..k {
                for l in 0..k {
                    let lhs = &table[g][h] * &table[mul(g, h)][l];
                    let rhs = &table[g][mul(h, l)] * &table[h][l];
                    if lhs != rhs {
                        return Err(ExtQuotError::Cocycle(format!(
                            "point {x}: cocycle identity fails at ({g}, {h}, {l})"
                        )));
                    }
                }
            }
        }
        self.cocycles.insert(x, table);
        Ok(self)
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn gamma(&self) -> &[Vec<usize>] {
        &self.gamma
    }

    pub fn gamma_order(&self) -> usize {
        self.gamma.len()
    }

    pub fn cocycles(&self) -> &BTreeMap<usize, Cocycle> {
        &self.cocycles
    }

    pub fn cocycle(&self, x: usize) -> Option<&Cocycle> {
        self.cocycles.get(&x)
    }

    /// True when every attached table is identically 1.
    pub fn has_trivial_cocycles(&self) -> bool {
        self.cocycles.values().flatten().flatten().all(One::is_one)
    }

    pub fn point_index(&self, coords: &[u32]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    fn point_index_wrapped(&self, coords: &[i64]) -> usize {
        let c: Vec<u32> = coords
            .iter()
            .zip(&self.moduli)
            .map(|(&x, &n)| x.rem_euclid(i64::from(n)) as u32)
            .collect();
        self.index[&c]
    }

    /// The point `x + t`.
    pub fn translate(&self, x: usize, t: &[i64]) -> usize {
        let c: Vec<i64> = self.points[x].iter().zip(t).map(|(&a, &b)| i64::from(a) + b).collect();
        self.point_index_wrapped(&c)
    }

    /// Unit translations generating `prod Z/n_i`.
    pub fn generators(&self) -> Vec<Vec<i64>> {
        (0..self.moduli.len())
            .map(|i| {
                let mut t = vec![0; self.moduli.len()];
                t[i] = 1;
                t
            })
            .collect()
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.gamma[g][x]
    }

    /// Indices of the elements of `Gamma` fixing `x`, increasing.
    pub fn stabilizer(&self, x: usize) -> Result<Vec<usize>> {
        if x >= self.len() {
            return Err(invalid(format!("no point {x}")));
        }
        Ok((0..self.gamma.len()).filter(|&g| self.gamma[g][x] == x).collect())
    }

    /// `Gamma`-orbits as sorted index lists, ordered by their least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.points[a].cmp(&self.points[b]));
        let mut out = Vec::new();
        for x in order {
            if seen[x] {
                continue;
            }
            let mut orbit: Vec<usize> = self.gamma.iter().map(|g| g[x]).collect();
            orbit.sort_by(|&a, &b| self.points[a].cmp(&self.points[b]));
            orbit.dedup();
            for &y in &orbit {
                seen[y] = true;
            }
            out.push(orbit);
        }
        out
    }

    /// The same model with points listed in another order: point `i` of the
    /// result is point `perm[i]` of `self`.
    pub fn reindexed(&self, perm: &[usize]) -> Result<Self> {
        let mut inv = vec![usize::MAX; self.len()];
        for (i, &p) in perm.iter().enumerate() {
            if p >= self.len() {
                return Err(invalid("reindexing is not a permutation"));
            }
            inv[p] = i;
        }
        if inv.contains(&usize::MAX) || perm.len() != self.len() {
            return Err(invalid("reindexing is not a permutation"));
        }
        let points = perm.iter().map(|&p| self.points[p].clone()).collect();
        let gamma = self.gamma.iter().map(|g| perm.iter().map(|&p| inv[g[p]]).collect()).collect();
        let mut out = Self::new(self.moduli.clone(), points, gamma)?;
        for (&x, t) in &self.cocycles {
            out = out.with_cocycle(inv[x], t.clone())?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> RawModel {
        RawModel {
            moduli: self.moduli.clone(),
            points: self.points.clone(),
            gamma: self.gamma.clone(),
            cocycles: self
                .cocycles
                .iter()
                .map(|(&x, t)| (x, t.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()))
                .collect(),
        }
    }
}

/// JSON form of a model; cocycle entries are rationals written as strings
/// such as `"-3/2"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawModel {
    pub moduli: Vec<u32>,
    pub points: Vec<Vec<u32>>,
    pub gamma: Vec<Vec<usize>>,
    #[serde(default)]
    pub cocycles: BTreeMap<usize, Vec<Vec<String>>>,
}

impl TryFrom<RawModel> for FiniteOrbitModel {
    type Error = ExtQuotError;

    fn try_from(raw: RawModel) -> Result<Self> {
        let mut m = FiniteOrbitModel::new(raw.moduli, raw.points, raw.gamma)?;
        for (x, table) in raw.cocycles {
            let t = table
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|s| s.trim().parse::<BigRational>().map_err(|e| ExtQuotError::Cocycle(format!("{s:?}: {e}"))))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            m = m.with_cocycle(x, t)?;
        }
        Ok(m)
    }
}

impl Serialize for FiniteOrbitModel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteOrbitModel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawModel::deserialize(d)?;
        FiniteOrbitModel::try_from(raw).map_err(serde::de::Error::custom)
    }
}
