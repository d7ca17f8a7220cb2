use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use super::{extended_quotient, Cocycle, ExtQuotError, ExtQuotPoint, FiniteOrbitModel, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    NotBijective,
    ModuliMismatch,
    GammaOrderMismatch,
    Translation,
    Gamma,
}

/// The first pair at which a point map fails to be equivariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.kind, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    pub holds: bool,
    pub violation: Option<Violation>,
}

fn violation(kind: ViolationKind, detail: String) -> PropertyVerdict {
    PropertyVerdict { holds: false, violation: Some(Violation { kind, detail }) }
}

/// Whether `map` (a point index of `a` to a point index of `b`) is a
/// bijection intertwining the translation actions, identified through the
/// coordinates, and the `Gamma` actions, identified through their indices.
pub fn check_property(a: &FiniteOrbitModel, b: &FiniteOrbitModel, map: &[usize]) -> PropertyVerdict {
    if a.moduli() != b.moduli() {
        return violation(
            ViolationKind::ModuliMismatch,
            format!("{:?} vs {:?}", a.moduli(), b.moduli()),
        );
    }
    if a.gamma_order() != b.gamma_order() {
        return violation(
            ViolationKind::GammaOrderMismatch,
            format!("{} vs {}", a.gamma_order(), b.gamma_order()),
        );
    }
    let mut seen = vec![false; b.len()];
    if map.len() != a.len() || map.iter().any(|&y| y >= b.len() || std::mem::replace(&mut seen[y], true)) {
        return violation(ViolationKind::NotBijective, format!("{map:?}"));
    }
    for x in 0..a.len() {
        for t in a.generators() {
            let lhs = map[a.translate(x, &t)];
            let rhs = b.translate(map[x], &t);
            if lhs != rhs {
                return violation(
                    ViolationKind::Translation,
                    format!(
                        "x = {:?}, t = {t:?}: L(x + t) = {:?} but L(x) + t = {:?}",
                        a.points()[x],
                        b.points()[lhs],
                        b.points()[rhs]
                    ),
                );
            }
        }
        for g in 1..a.gamma_order() {
            let lhs = map[a.act(g, x)];
            let rhs = b.act(g, map[x]);
            if lhs != rhs {
                return violation(
                    ViolationKind::Gamma,
                    format!(
                        "x = {:?}, gamma = {g}: L(gamma x) = {:?} but gamma L(x) = {:?}",
                        a.points()[x],
                        b.points()[lhs],
                        b.points()[rhs]
                    ),
                );
            }
        }
    }
    PropertyVerdict { holds: true, violation: None }
}

/// An explicit bijection between extended quotients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientBijection {
    pub pairs: Vec<(ExtQuotPoint, ExtQuotPoint)>,
}

impl QuotientBijection {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn image(&self, p: &ExtQuotPoint) -> Option<&ExtQuotPoint> {
        self.pairs.iter().find(|(a, _)| a == p).map(|(_, b)| b)
    }
}

fn orbit_rep(m: &FiniteOrbitModel, x: usize) -> Vec<u32> {
    (0..m.gamma_order())
        .map(|g| m.points()[m.act(g, x)].clone())
        .min()
        .expect("Gamma is nonempty")
}

/// Transports the extended quotient of `a` along an equivariant `map`:
/// representatives go through `map`, stabilizer characters are matched
/// by index. Verified to be a bijection onto the extended quotient of `b`.
fn transport(a: &FiniteOrbitModel, b: &FiniteOrbitModel, map: &[usize]) -> Result<QuotientBijection> {
    let verdict = check_property(a, b, map);
    if let Some(v) = verdict.violation {
        return Err(ExtQuotError::Property(v));
    }
    let src = extended_quotient(a)?;
    let dst: BTreeSet<ExtQuotPoint> = extended_quotient(b)?.into_iter().collect();
    let mut pairs = Vec::new();
    for p in &src {
        let x = a
            .point_index(&p.representative)
            .expect("representatives are points of the model");
        let y = map[x];
        let (sa, sb) = (a.stabilizer(x)?, b.stabilizer(y)?);
        if sa != sb {
            return Err(ExtQuotError::StabilizerMismatch(format!(
                "{:?} has stabilizer {sa:?}, its image {:?} has {sb:?}",
                a.points()[x],
                b.points()[y]
            )));
        }
        let q = ExtQuotPoint { representative: orbit_rep(b, y), irrep: p.irrep };
        pairs.push((p.clone(), q));
    }
    let image: BTreeSet<ExtQuotPoint> = pairs.iter().map(|(_, q)| q.clone()).collect();
    if image.len() != pairs.len() || image != dst {
        return Err(ExtQuotError::NotBijective(format!(
            "{} points map onto {} of {}",
            pairs.len(),
            image.len(),
            dst.len()
        )));
    }
    Ok(QuotientBijection { pairs })
}

/// The group/Galois matching of extended quotients induced by `map`.
///
/// Refused unless `map` has the equivariance property and the cocycle
/// tables agree at matched points. The comparison of nontrivial tables is
/// by equality, which is stricter than equality of classes.
pub fn matching_bijection(
    group: &FiniteOrbitModel,
    galois: &FiniteOrbitModel,
    map: &[usize],
) -> Result<QuotientBijection> {
    let verdict = check_property(group, galois, map);
    if let Some(v) = verdict.violation {
        return Err(ExtQuotError::Property(v));
    }
    for x in 0..group.len() {
        if group.cocycle(x) != galois.cocycle(map[x]) {
            return Err(ExtQuotError::CocycleMismatch(format!(
                "at {:?} and {:?}",
                group.points()[x],
                galois.points()[map[x]]
            )));
        }
    }
    transport(group, galois, map)
}

/// Result of transferring a block of `G` to `G^0` along a point map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub bijection: QuotientBijection,
    /// Cocycle tables carried to the `G^0` points, keyed by point index.
    #[serde(skip)]
    pub cocycles: BTreeMap<usize, Cocycle>,
}

/// The bijection of extended quotients induced by an equivariant bijection
/// `f` from the `G`-side orbit to the `G^0`-side orbit, with the `G`-side
/// cocycles transported along `f`.
pub fn depth_zero_transfer(g: &FiniteOrbitModel, g0: &FiniteOrbitModel, f: &[usize]) -> Result<Transfer> {
    let bijection = transport(g, g0, f)?;
    let cocycles = g.cocycles().iter().map(|(&x, t)| (f[x], t.clone())).collect();
    Ok(Transfer { bijection, cocycles })
}
