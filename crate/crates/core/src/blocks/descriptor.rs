use std::fmt;

use serde::{Deserialize, Serialize};

use crate::plancherel::RootKind;

use super::{BlockError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DepthClass {
    /// `r = 0`.
    DepthZero,
    /// Depth-zero up to a character twist, `r != 0`.
    EssentiallyDepthZero,
    PositiveDepth,
}

/// The group `G^0` of the twisted Levi sequence, i.e. the shape of `G`-vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum G0Kind {
    /// `G^0 = G`.
    #[serde(rename = "G")]
    G,
    /// `G^0 = M^0 = M`, the `r != 0` case.
    #[serde(rename = "M0=M")]
    M0EqualsM,
    #[serde(rename = "U_eps(1,1)")]
    UEpsilon,
    #[serde(rename = "U_pi'(1,1)")]
    UPiPrime,
    /// `G^0 = M^0` a torus, sequence `(M^0, G)`.
    #[serde(rename = "T")]
    Torus,
    /// The sequence `(M^0, M, G)`.
    #[serde(rename = "(M0,M,G)")]
    Chain,
}

impl G0Kind {
    pub const ALL: [G0Kind; 6] =
        [G0Kind::G, G0Kind::M0EqualsM, G0Kind::UEpsilon, G0Kind::UPiPrime, G0Kind::Torus, G0Kind::Chain];

    /// The twisted Levi sequence as printed in the tables.
    pub fn sequence(self) -> &'static str {
        match self {
            G0Kind::G => "(G)",
            G0Kind::M0EqualsM | G0Kind::Torus => "(M0,G)",
            G0Kind::UEpsilon => "(U_eps(1,1),G)",
            G0Kind::UPiPrime => "(U_pi'(1,1),G)",
            G0Kind::Chain => "(M0,M,G)",
        }
    }
}

/// Restriction of `phi_0` to `Z_M^0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Phi0 {
    Trivial,
    /// The ramified sign character.
    Sign,
    /// Nontrivial and not the sign character.
    OtherNontrivial,
    /// Nontrivial, no further distinction.
    Nontrivial,
    /// The row covers trivial and nontrivial restrictions alike.
    Both,
}

impl Phi0 {
    pub const ALL: [Phi0; 5] = [Phi0::Trivial, Phi0::Sign, Phi0::OtherNontrivial, Phi0::Nontrivial, Phi0::Both];

    pub fn table_text(self) -> &'static str {
        match self {
            Phi0::Trivial => "=1",
            Phi0::Sign => "=sign",
            Phi0::OtherNontrivial => "!=1,!=sign",
            Phi0::Nontrivial => "!=1",
            Phi0::Both => "both",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LOverF {
    Ramified,
    Unramified,
}

impl LOverF {
    pub fn ramification_index(self) -> u8 {
        match self {
            LOverF::Ramified => 2,
            LOverF::Unramified => 1,
        }
    }
}

impl fmt::Display for LOverF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LOverF::Ramified => "ramified",
            LOverF::Unramified => "unramified",
        })
    }
}

/// Data singling out a Bernstein block of G2 with a maximal Levi subgroup.
///
/// Optional fields are present exactly where they apply: `omega_ramified`
/// outside positive depth, `chi_cubic` for long roots at `r = 0`,
/// `chi2chiprime_ramified` when additionally `chi` is cubic, and the
/// `phi` fields in positive depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BlockDescriptor {
    pub root_kind: RootKind,
    pub depth_class: DepthClass,
    pub g0_kind: G0Kind,
    pub omega_ramified: Option<bool>,
    pub chi_cubic: Option<bool>,
    pub chi2chiprime_ramified: Option<bool>,
    pub phi0_restriction: Option<Phi0>,
    pub phi1_trivial: Option<bool>,
    pub l_over_f: LOverF,
}

impl BlockDescriptor {
    pub fn depth_zero(root_kind: RootKind, omega_ramified: bool) -> Self {
        BlockDescriptor {
            root_kind,
            depth_class: DepthClass::DepthZero,
            g0_kind: G0Kind::G,
            omega_ramified: Some(omega_ramified),
            chi_cubic: None,
            chi2chiprime_ramified: None,
            phi0_restriction: None,
            phi1_trivial: None,
            l_over_f: LOverF::Unramified,
        }
    }

    pub fn long_depth_zero(omega_ramified: bool, chi_cubic: bool, chi2chiprime_ramified: Option<bool>) -> Self {
        BlockDescriptor {
            chi_cubic: Some(chi_cubic),
            chi2chiprime_ramified,
            ..Self::depth_zero(RootKind::Long, omega_ramified)
        }
    }

    pub fn essentially_depth_zero(root_kind: RootKind, omega_ramified: bool) -> Self {
        BlockDescriptor {
            depth_class: DepthClass::EssentiallyDepthZero,
            g0_kind: G0Kind::M0EqualsM,
            ..Self::depth_zero(root_kind, omega_ramified)
        }
    }

    pub fn positive(root_kind: RootKind, g0_kind: G0Kind, phi0: Phi0, phi1_trivial: bool, l_over_f: LOverF) -> Self {
        BlockDescriptor {
            root_kind,
            depth_class: DepthClass::PositiveDepth,
            g0_kind,
            omega_ramified: None,
            chi_cubic: None,
            chi2chiprime_ramified: None,
            phi0_restriction: Some(phi0),
            phi1_trivial: Some(phi1_trivial),
            l_over_f,
        }
    }

    /// `f(L/F)`.
    pub fn residue_degree(&self) -> u8 {
        2 / self.l_over_f.ramification_index()
    }

    /// Checks that the optional fields match the depth class and that
    /// `G^0` and `L/F` are compatible.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(BlockError::Invalid(msg.to_string()));
        let long = self.root_kind == RootKind::Long;
        match self.depth_class {
            DepthClass::DepthZero | DepthClass::EssentiallyDepthZero => {
                let want = if self.depth_class == DepthClass::DepthZero { G0Kind::G } else { G0Kind::M0EqualsM };
                if self.g0_kind != want {
                    return bad("G^0 must be G for r = 0 and M for r != 0");
                }
                if self.l_over_f != LOverF::Unramified {
                    return bad("depth-zero cuspidals of GL2 have L/F unramified");
                }
                if self.omega_ramified.is_none() {
                    return bad("omega_ramified is required outside positive depth");
                }
                if self.phi0_restriction.is_some() || self.phi1_trivial.is_some() {
                    return bad("phi fields apply only in positive depth");
                }
                let chi_applies = long && self.depth_class == DepthClass::DepthZero;
                if chi_applies != self.chi_cubic.is_some() {
                    return bad("chi_cubic applies exactly to long roots with r = 0");
                }
                if self.chi2chiprime_ramified.is_some() != (self.chi_cubic == Some(true)) {
                    return bad("chi2chiprime_ramified applies exactly when chi is cubic");
                }
            }
            DepthClass::PositiveDepth => {
                if matches!(self.g0_kind, G0Kind::G | G0Kind::M0EqualsM) {
                    return bad("positive depth needs a proper twisted Levi sequence");
                }
                if self.omega_ramified.is_some() || self.chi_cubic.is_some() || self.chi2chiprime_ramified.is_some() {
                    return bad("character fields do not apply in positive depth");
                }
                if self.phi0_restriction.is_none() || self.phi1_trivial.is_none() {
                    return bad("phi0_restriction and phi1_trivial are required in positive depth");
                }
                match (self.g0_kind, self.l_over_f) {
                    (G0Kind::UEpsilon, LOverF::Ramified) => return bad("U_eps(1,1) comes with L/F unramified"),
                    (G0Kind::UPiPrime, LOverF::Unramified) => return bad("U_pi'(1,1) comes with L/F ramified"),
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// `T_{gamma,eps}` or `T_{gamma,pi'}` in positive depth.
    pub fn torus_name(&self) -> Option<String> {
        if self.depth_class != DepthClass::PositiveDepth {
            return None;
        }
        let gamma = match self.root_kind {
            RootKind::Long => "beta",
            RootKind::Short => "alpha",
        };
        let t = match self.l_over_f {
            LOverF::Ramified => "pi'",
            LOverF::Unramified => "eps",
        };
        Some(format!("T_{{{gamma},{t}}}"))
    }
}
