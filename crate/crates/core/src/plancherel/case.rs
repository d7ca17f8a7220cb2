use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exactalg::{Sign, UnitConstant};

use super::{PlancherelError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootKind {
    Long,
    Short,
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootKind::Long => "long",
            RootKind::Short => "short",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseId {
    #[serde(rename = "long-I")]
    LongI,
    #[serde(rename = "long-II")]
    LongII,
    #[serde(rename = "long-III")]
    LongIII,
    #[serde(rename = "long-IV")]
    LongIV,
    #[serde(rename = "short-I")]
    ShortI,
    #[serde(rename = "short-II")]
    ShortII,
}

impl CaseId {
    pub const ALL: [CaseId; 6] =
        [CaseId::LongI, CaseId::LongII, CaseId::LongIII, CaseId::LongIV, CaseId::ShortI, CaseId::ShortII];

    pub fn root_kind(self) -> RootKind {
        match self {
            CaseId::ShortI | CaseId::ShortII => RootKind::Short,
            _ => RootKind::Long,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseId::LongI => "long-I",
            CaseId::LongII => "long-II",
            CaseId::LongIII => "long-III",
            CaseId::LongIV => "long-IV",
            CaseId::ShortI => "short-I",
            CaseId::ShortII => "short-II",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseId {
    type Err = PlancherelError;

    fn from_str(s: &str) -> Result<Self> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| PlancherelError::UnknownCase(s.to_string()))
    }
}

/// Ramification data of the cuspidal `sigma = chi (x) tau` of the Levi.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharData {
    pub omega_ramified: bool,
    pub chi2chiprime_ramified: bool,
    /// `sigma` is of the form `sigma(tau)`.
    pub sigma_from_tau: bool,
    pub chi_cubic: bool,
}

/// Residue degree and ramification index of `L/F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldData {
    pub f: u8,
    pub e: u8,
}

impl FieldData {
    pub const UNRAMIFIED: FieldData = FieldData { f: 2, e: 1 };
    pub const RAMIFIED: FieldData = FieldData { f: 1, e: 2 };
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlancherelCase {
    root_kind: RootKind,
    case_id: CaseId,
    chars: CharData,
    field: FieldData,
    omega: UnitConstant,
    chi_unit: UnitConstant,
}

/// The case determined by the character data alone.
pub fn expected_case(root_kind: RootKind, chars: &CharData) -> CaseId {
    match root_kind {
        RootKind::Short if chars.omega_ramified => CaseId::ShortII,
        RootKind::Short => CaseId::ShortI,
        RootKind::Long => {
            let tau_block = chars.sigma_from_tau && !chars.chi2chiprime_ramified;
            match (chars.omega_ramified, tau_block) {
                (false, true) => CaseId::LongI,
                (true, true) => CaseId::LongII,
                (false, false) => CaseId::LongIII,
                (true, false) => CaseId::LongIV,
            }
        }
    }
}

impl PlancherelCase {
    /// `omega` is `omega(pi_F)` and `chi_unit` is `chi^2 chi'^-1 (pi_L)`;
    /// both are read only where the corresponding character is unramified.
    pub fn new(
        case_id: CaseId,
        chars: CharData,
        field: FieldData,
        omega: UnitConstant,
        chi_unit: UnitConstant,
    ) -> Result<Self> {
        let root_kind = case_id.root_kind();
        if !matches!((field.f, field.e), (1, 2) | (2, 1)) {
            return Err(PlancherelError::Inconsistent(format!(
                "f(L/F) = {}, e(L/F) = {}; a quadratic L needs f*e = 2",
                field.f, field.e
            )));
        }
        let want = expected_case(root_kind, &chars);
        if want != case_id {
            return Err(PlancherelError::Inconsistent(format!("character data give {want}, not {case_id}")));
        }
        Ok(PlancherelCase { root_kind, case_id, chars, field, omega, chi_unit })
    }

    /// A consistent sample of the case with the given residue degree. For
    /// long-I the units are chosen opposite so that the matching equation
    /// is solvable when `f = 2`.
    pub fn representative(case_id: CaseId, f: u8) -> Result<Self> {
        let field = match f {
            2 => FieldData::UNRAMIFIED,
            1 => FieldData::RAMIFIED,
            _ => return Err(PlancherelError::Inconsistent(format!("f(L/F) = {f}"))),
        };
        let tau = matches!(case_id, CaseId::LongI | CaseId::LongII);
        let chars = CharData {
            omega_ramified: matches!(case_id, CaseId::LongII | CaseId::LongIV | CaseId::ShortII),
            chi2chiprime_ramified: false,
            sigma_from_tau: tau,
            chi_cubic: tau,
        };
        Self::new(case_id, chars, field, omega_unit(Sign::Plus), chi_unit(Sign::Minus))
    }

    pub fn with_units(mut self, omega: Sign, chi: Sign) -> Self {
        self.omega = omega_unit(omega);
        self.chi_unit = chi_unit(chi);
        self
    }

    pub fn with_field(self, field: FieldData) -> Result<Self> {
        Self::new(self.case_id, self.chars, field, self.omega, self.chi_unit)
    }

    pub fn root_kind(&self) -> RootKind {
        self.root_kind
    }

    pub fn case_id(&self) -> CaseId {
        self.case_id
    }

    pub fn chars(&self) -> &CharData {
        &self.chars
    }

    pub fn field(&self) -> FieldData {
        self.field
    }

    pub fn omega(&self) -> &UnitConstant {
        &self.omega
    }

    pub fn chi_unit(&self) -> &UnitConstant {
        &self.chi_unit
    }
}

fn omega_unit(s: Sign) -> UnitConstant {
    match s {
        Sign::Plus => UnitConstant::trivial("omega(pi)"),
        Sign::Minus => UnitConstant::sign("omega(pi)"),
    }
}

fn chi_unit(s: Sign) -> UnitConstant {
    match s {
        Sign::Plus => UnitConstant::trivial("chi^2chi'^-1(pi_L)"),
        Sign::Minus => UnitConstant::sign("chi^2chi'^-1(pi_L)"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_names_round_trip() {
        for c in CaseId::ALL {
            assert_eq!(c.name().parse::<CaseId>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{c}\""));
        }
        assert!("long-V".parse::<CaseId>().is_err());
    }

    #[test]
    fn inconsistent_data_rejected() {
        let chars = CharData { omega_ramified: true, chi2chiprime_ramified: false, sigma_from_tau: true, chi_cubic: true };
        let u = UnitConstant::trivial("u");
        assert!(PlancherelCase::new(CaseId::LongI, chars, FieldData::UNRAMIFIED, u.clone(), u.clone()).is_err());
        assert!(PlancherelCase::new(CaseId::LongII, chars, FieldData::UNRAMIFIED, u.clone(), u.clone()).is_ok());
        let bad = FieldData { f: 2, e: 2 };
        assert!(PlancherelCase::new(CaseId::LongII, chars, bad, u.clone(), u).is_err());
    }

    #[test]
    fn representatives_are_consistent() {
        for c in CaseId::ALL {
            for f in [1, 2] {
                assert_eq!(PlancherelCase::representative(c, f).unwrap().case_id(), c);
            }
        }
    }
}
