use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactalg::UnitConstant;
use crate::hecke::{AffineHeckePresentation, RGroup};
use crate::plancherel::{self, CaseId, CharData, FieldData, PlancherelCase, RootKind, WeylOrder};

use super::{BlockDescriptor, BlockError, DepthClass, G0Kind, LOverF, Phi0, Result};

/// What is known about an R-group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RState {
    Trivial,
    Nontrivial,
    Unknown,
}

impl RState {
    /// As an R-group of a maximal Levi, which has order at most 2.
    pub fn to_group(self) -> RGroup {
        match self {
            RState::Trivial => RGroup::Trivial,
            RState::Nontrivial => RGroup::NonTrivial { order: Some(2) },
            RState::Unknown => RGroup::Unknown,
        }
    }

    pub fn table_text(self) -> &'static str {
        match self {
            RState::Trivial => "=1",
            RState::Nontrivial => "!=1",
            RState::Unknown => "*",
        }
    }
}

impl fmt::Display for RState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RState::Trivial => "trivial",
            RState::Nontrivial => "nontrivial",
            RState::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Allow rows whose transfer to `G^0` relies on `p` being good for G2,
    /// i.e. `p` not in `{2, 3}`. No prime arithmetic is done either way.
    pub assume_p_good: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { assume_p_good: true }
    }
}

#[derive(Debug, Clone)]
pub struct BlockClassification {
    pub w_o: WeylOrder,
    pub r_o: RState,
    pub w_o0: WeylOrder,
    pub r_o0: RState,
    /// `#X_nr(M, sigma) = 2 / e(L|F)`.
    pub xnr_order: u8,
    pub h_g: AffineHeckePresentation,
    pub h_g0: AffineHeckePresentation,
    /// The `mu`-function case driving the `G` side, if any.
    pub plancherel_case: Option<CaseId>,
}

impl BlockClassification {
    /// When `W_O` has order 2 the R-group is trivial, on both sides.
    pub fn check_invariants(&self) -> bool {
        let side = |w: WeylOrder, r: RState| w == WeylOrder::Trivial || r == RState::Trivial;
        side(self.w_o, self.r_o) && side(self.w_o0, self.r_o0) && matches!(self.xnr_order, 1 | 2)
    }
}

/// `H(G, rho)` and `H(G^0, rho^0)` have equal presentations.
pub fn check_weyl_iso(c: &BlockClassification) -> bool {
    c.h_g.same_presentation(&c.h_g0)
}

/// `R(O)` and `R(O^0)` are in the same state and `W_O = W_O^0`.
pub fn check_ro_reduction(c: &BlockClassification) -> bool {
    c.r_o == c.r_o0 && c.w_o == c.w_o0
}

fn presentation(w: WeylOrder, labels: (u32, u32), r: RState) -> AffineHeckePresentation {
    match w {
        WeylOrder::Order2 => AffineHeckePresentation::rank_one(labels.0, labels.1),
        WeylOrder::Trivial => AffineHeckePresentation::commutative(1).with_r_group(r.to_group()),
    }
}

fn chars(omega_ramified: bool, sigma_from_tau: bool, chi2chiprime_ramified: bool) -> CharData {
    CharData { omega_ramified, chi2chiprime_ramified, sigma_from_tau, chi_cubic: sigma_from_tau }
}

/// The `mu`-function case of the row matching `d`, `None` for rows with
/// `G^0 = M^0`, or `NoRow`.
pub fn plancherel_case_for(d: &BlockDescriptor) -> Result<Option<PlancherelCase>> {
    d.validate()?;
    let no_row = || BlockError::NoRow(format!("{d:?}"));
    let long = d.root_kind == RootKind::Long;
    let field = match d.l_over_f {
        LOverF::Unramified => FieldData::UNRAMIFIED,
        LOverF::Ramified => FieldData::RAMIFIED,
    };
    let data = match d.depth_class {
        DepthClass::DepthZero => {
            let omega = d.omega_ramified.ok_or_else(no_row)?;
            if long {
                let cubic = d.chi_cubic.ok_or_else(no_row)?;
                Some(chars(omega, cubic, d.chi2chiprime_ramified.unwrap_or(false)))
            } else {
                Some(chars(omega, false, false))
            }
        }
        DepthClass::EssentiallyDepthZero => {
            if long && d.omega_ramified != Some(true) {
                return Err(no_row());
            }
            None
        }
        DepthClass::PositiveDepth => {
            let phi0 = d.phi0_restriction.ok_or_else(no_row)?;
            let phi1 = d.phi1_trivial.ok_or_else(no_row)?;
            use G0Kind::*;
            use LOverF::*;
            match (d.g0_kind, phi0, phi1, d.l_over_f, long) {
                (UPiPrime, Phi0::Sign, false, Ramified, _) => Some(chars(true, false, false)),
                (UPiPrime, Phi0::Trivial, true, Ramified, false) => Some(chars(false, false, false)),
                (UEpsilon, Phi0::Trivial, true, Unramified, _) => Some(chars(false, false, false)),
                (Torus, Phi0::OtherNontrivial, true, Ramified, _) => None,
                (Torus, Phi0::Nontrivial, true, Unramified, _) => None,
                (Chain, Phi0::Both, false, _, _) => None,
                _ => return Err(no_row()),
            }
        }
    };
    let Some(data) = data else { return Ok(None) };
    let case_id = plancherel::expected_case(d.root_kind, &data);
    // omega(pi) + chi^2chi'^-1(pi_L) = 0 holds in the long-I rows.
    let omega = UnitConstant::trivial("omega(pi)");
    let chi = UnitConstant::sign("chi^2chi'^-1(pi_L)");
    Ok(Some(PlancherelCase::new(case_id, data, field, omega, chi)?))
}

pub fn classify(d: &BlockDescriptor) -> Result<BlockClassification> {
    classify_with(d, ClassifyOptions::default())
}

pub fn classify_with(d: &BlockDescriptor, opts: ClassifyOptions) -> Result<BlockClassification> {
    let case = plancherel_case_for(d)?;
    if !opts.assume_p_good && d.g0_kind != G0Kind::G {
        return Err(BlockError::PrimeAssumption(format!(
            "{} relies on p not in {{2, 3}}",
            d.g0_kind.sequence()
        )));
    }

    // G side: from the zeros of mu, or trivial when G^0 = M^0.
    let (w_o, labels) = match &case {
        Some(c) => {
            let m = plancherel::mu(c)?;
            (plancherel::weyl_from_zeros(&m)?, plancherel::labels(&m)?.pair())
        }
        None => (WeylOrder::Trivial, (0, 0)),
    };

    // G^0 side.
    let (w_o0, r_o0, labels0) = match d.g0_kind {
        G0Kind::G => (w_o, None, labels),
        G0Kind::M0EqualsM | G0Kind::Torus | G0Kind::Chain => (WeylOrder::Trivial, Some(RState::Trivial), (0, 0)),
        G0Kind::UEpsilon => match w_o {
            WeylOrder::Order2 => (WeylOrder::Order2, Some(RState::Trivial), (1, 1)),
            WeylOrder::Trivial => (WeylOrder::Trivial, Some(RState::Trivial), (0, 0)),
        },
        G0Kind::UPiPrime => {
            if d.phi0_restriction == Some(Phi0::Trivial) {
                (WeylOrder::Order2, Some(RState::Trivial), (1, 1))
            } else {
                (WeylOrder::Trivial, Some(RState::Nontrivial), (0, 0))
            }
        }
    };

    let r_o = match (w_o, r_o0) {
        (WeylOrder::Order2, _) => RState::Trivial,
        (WeylOrder::Trivial, Some(r)) => r,
        (WeylOrder::Trivial, None) => RState::Unknown,
    };
    let r_o0 = r_o0.unwrap_or(r_o);

    let h_g = presentation(w_o, labels, r_o);
    let h_g0 = presentation(w_o0, labels0, r_o0);
    let out = BlockClassification {
        w_o,
        r_o,
        w_o0,
        r_o0,
        xnr_order: 2 / d.l_over_f.ramification_index(),
        h_g,
        h_g0,
        plancherel_case: case.map(|c| c.case_id()),
    };
    debug_assert!(out.check_invariants());
    Ok(out)
}
