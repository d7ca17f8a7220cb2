use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::hecke::{AffineHeckePresentation, RGroup};
use crate::plancherel::{q_power_string, CaseId, RootKind, WeylOrder};

use super::{classify, BlockClassification, BlockDescriptor, BlockError, DepthClass, G0Kind, LOverF, Phi0, RState, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    LongDepthZero,
    LongPositive,
    ShortDepthZero,
    ShortPositive,
}

impl Family {
    pub const ALL: [Family; 4] =
        [Family::LongDepthZero, Family::LongPositive, Family::ShortDepthZero, Family::ShortPositive];

    pub fn name(self) -> &'static str {
        match self {
            Family::LongDepthZero => "long-depth-zero",
            Family::LongPositive => "long-positive",
            Family::ShortDepthZero => "short-depth-zero",
            Family::ShortPositive => "short-positive",
        }
    }

    pub fn root_kind(self) -> RootKind {
        match self {
            Family::LongDepthZero | Family::LongPositive => RootKind::Long,
            _ => RootKind::Short,
        }
    }

    pub fn positive(self) -> bool {
        matches!(self, Family::LongPositive | Family::ShortPositive)
    }

    /// The checked-in expected table.
    pub fn golden_json(self) -> &'static str {
        match self {
            Family::LongDepthZero => include_str!("../../data/tables/long-depth-zero.json"),
            Family::LongPositive => include_str!("../../data/tables/long-positive.json"),
            Family::ShortDepthZero => include_str!("../../data/tables/short-depth-zero.json"),
            Family::ShortPositive => include_str!("../../data/tables/short-positive.json"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = BlockError;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| BlockError::Invalid(format!("unknown family {s:?}")))
    }
}

/// The family a descriptor belongs to.
pub fn family_of(d: &BlockDescriptor) -> Family {
    match (d.root_kind, d.depth_class == DepthClass::PositiveDepth) {
        (RootKind::Long, false) => Family::LongDepthZero,
        (RootKind::Long, true) => Family::LongPositive,
        (RootKind::Short, false) => Family::ShortDepthZero,
        (RootKind::Short, true) => Family::ShortPositive,
    }
}

/// The descriptors of a family in table order.
pub fn canonical_descriptors(family: Family) -> Vec<BlockDescriptor> {
    use G0Kind::*;
    use LOverF::*;
    let kind = family.root_kind();
    let pos = |g, p, f1, l| BlockDescriptor::positive(kind, g, p, f1, l);
    match family {
        Family::LongDepthZero => vec![
            BlockDescriptor::long_depth_zero(false, true, Some(false)),
            BlockDescriptor::long_depth_zero(true, true, Some(false)),
            BlockDescriptor::long_depth_zero(false, true, Some(true)),
            BlockDescriptor::long_depth_zero(true, true, Some(true)),
            BlockDescriptor::long_depth_zero(false, false, None),
            BlockDescriptor::long_depth_zero(true, false, None),
            BlockDescriptor::essentially_depth_zero(kind, true),
        ],
        Family::ShortDepthZero => vec![
            BlockDescriptor::depth_zero(kind, false),
            BlockDescriptor::depth_zero(kind, true),
            BlockDescriptor::essentially_depth_zero(kind, false),
            BlockDescriptor::essentially_depth_zero(kind, true),
        ],
        Family::LongPositive => vec![
            pos(UPiPrime, Phi0::Sign, false, Ramified),
            pos(Torus, Phi0::OtherNontrivial, true, Ramified),
            pos(Chain, Phi0::Both, false, Ramified),
            pos(UEpsilon, Phi0::Trivial, true, Unramified),
            pos(Torus, Phi0::Nontrivial, true, Unramified),
            pos(Chain, Phi0::Both, false, Unramified),
        ],
        Family::ShortPositive => vec![
            pos(UPiPrime, Phi0::Trivial, true, Ramified),
            pos(UPiPrime, Phi0::Sign, false, Ramified),
            pos(Torus, Phi0::OtherNontrivial, true, Ramified),
            pos(Chain, Phi0::Both, false, Ramified),
            pos(UEpsilon, Phi0::Trivial, true, Unramified),
            pos(Torus, Phi0::Nontrivial, true, Unramified),
            pos(Chain, Phi0::Both, false, Unramified),
        ],
    }
}

/// Shape and parameters of a Hecke algebra as printed in the tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeSummary {
    /// `non-commutative`, `commutative` (`C[O]`) or `crossed-product`
    /// (`C[R(O)] x C[O]`).
    pub kind: String,
    /// `q^lambda, q^lambda*` for non-commutative algebras.
    pub parameters: Vec<String>,
}

impl HeckeSummary {
    pub fn of(p: &AffineHeckePresentation) -> Self {
        if p.finite_weyl_order() == 2 {
            let (l, ls) = p.labels();
            HeckeSummary {
                kind: "non-commutative".into(),
                parameters: vec![q_power_string(2 * l as i32), q_power_string(2 * ls as i32)],
            }
        } else if p.r_group() == RGroup::Trivial {
            HeckeSummary { kind: "commutative".into(), parameters: vec![] }
        } else {
            HeckeSummary { kind: "crossed-product".into(), parameters: vec![] }
        }
    }

    pub fn table_text(&self) -> String {
        match self.kind.as_str() {
            "non-commutative" => format!("non-comm, {}", self.parameters.join(", ")),
            "commutative" => "C[O]".into(),
            _ => "C[R(O)] x C[O]".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub row: usize,
    pub descriptor: BlockDescriptor,
    pub r_o: RState,
    pub r_o0: RState,
    pub xnr_order: u8,
    pub w_o: WeylOrder,
    pub w_o0: WeylOrder,
    pub h_g: HeckeSummary,
    pub h_g0: HeckeSummary,
    pub labels: (u32, u32),
    pub labels0: (u32, u32),
    pub plancherel_case: Option<CaseId>,
}

impl TableRow {
    pub fn new(row: usize, descriptor: BlockDescriptor, c: &BlockClassification) -> Self {
        TableRow {
            row,
            descriptor,
            r_o: c.r_o,
            r_o0: c.r_o0,
            xnr_order: c.xnr_order,
            w_o: c.w_o,
            w_o0: c.w_o0,
            h_g: HeckeSummary::of(&c.h_g),
            h_g0: HeckeSummary::of(&c.h_g0),
            labels: c.h_g.labels(),
            labels0: c.h_g0.labels(),
            plancherel_case: c.plancherel_case,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub schema_version: u32,
    pub family: Family,
    pub rows: Vec<TableRow>,
}

/// Classifies the canonical descriptors of a family, in table order.
pub fn emit_classified(family: Family) -> Result<Vec<(BlockDescriptor, BlockClassification)>> {
    canonical_descriptors(family)
        .into_iter()
        .map(|d| Ok((d, classify(&d)?)))
        .collect()
}

pub fn emit_table(family: Family) -> Result<Vec<TableRow>> {
    Ok(emit_classified(family)?
        .iter()
        .enumerate()
        .map(|(i, (d, c))| TableRow::new(i + 1, *d, c))
        .collect())
}

pub fn table_document(family: Family) -> Result<TableDocument> {
    Ok(TableDocument { schema_version: SCHEMA_VERSION, family, rows: emit_table(family)? })
}

/// Differences between the regenerated table and the checked-in one, one
/// message per differing row or field; empty when they agree.
pub fn diff_against_golden(family: Family) -> Result<Vec<String>> {
    let golden: Value =
        serde_json::from_str(family.golden_json()).map_err(|e| BlockError::Golden(format!("{family}: {e}")))?;
    let ours = serde_json::to_value(table_document(family)?).map_err(|e| BlockError::Golden(e.to_string()))?;
    let mut diffs = Vec::new();
    for key in ["schema_version", "family"] {
        if golden.get(key) != ours.get(key) {
            diffs.push(format!("{family}: {key} differs"));
        }
    }
    let empty = Vec::new();
    let g_rows = golden.get("rows").and_then(Value::as_array).unwrap_or(&empty);
    let o_rows = ours.get("rows").and_then(Value::as_array).unwrap_or(&empty);
    if g_rows.len() != o_rows.len() {
        diffs.push(format!("{family}: {} rows expected, {} produced", g_rows.len(), o_rows.len()));
    }
    for (i, (g, o)) in g_rows.iter().zip(o_rows).enumerate() {
        let (Some(g), Some(o)) = (g.as_object(), o.as_object()) else {
            diffs.push(format!("{family} row {}: not an object", i + 1));
            continue;
        };
        for k in g.keys().chain(o.keys().filter(|k| !g.contains_key(*k))) {
            if g.get(k) != o.get(k) {
                diffs.push(format!(
                    "{family} row {}: {k}: expected {}, got {}",
                    i + 1,
                    g.get(k).map_or("nothing".into(), Value::to_string),
                    o.get(k).map_or("nothing".into(), Value::to_string)
                ));
            }
        }
    }
    Ok(diffs)
}

fn w_text(w: WeylOrder) -> &'static str {
    match w {
        WeylOrder::Trivial => "=1",
        WeylOrder::Order2 => "!=1",
    }
}

fn yes_no(b: Option<bool>, yes: &str, no: &str) -> String {
    match b {
        Some(true) => yes.into(),
        Some(false) => no.into(),
        None => "N/A".into(),
    }
}

/// Aligned plain-text rendering with the columns of the printed tables.
pub fn render_text(family: Family, rows: &[TableRow]) -> String {
    let mut header: Vec<&str> = Vec::new();
    if family.positive() {
        header.extend(["M0", "phi0|Z_M^0", "phi1", "G-vector"]);
    } else {
        header.extend(["r", "omega_sigma"]);
        if family == Family::LongDepthZero {
            header.push("chi^2chi'^-1");
        }
    }
    header.extend(["R(O)", "R(O0)", "L/F", "#X_nr", "W_O", "W_O0", "H(G,rho)", "H(G0,rho0)"]);

    let mut cells: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for r in rows {
        let d = &r.descriptor;
        let mut line = Vec::new();
        if family.positive() {
            line.push(d.torus_name().unwrap_or_default());
            line.push(d.phi0_restriction.map_or("N/A", Phi0::table_text).to_string());
            line.push(yes_no(d.phi1_trivial, "=1", "!=1"));
            line.push(d.g0_kind.sequence().to_string());
        } else {
            let r0 = d.depth_class == DepthClass::DepthZero;
            line.push(if r0 { "0" } else { "!=0" }.to_string());
            line.push(yes_no(d.omega_ramified, "!=1", "=1"));
            if family == Family::LongDepthZero {
                line.push(match (d.chi_cubic, d.chi2chiprime_ramified) {
                    (Some(true), ram) => format!("{}, chi cubic", yes_no(ram, "ramified", "unramified")),
                    (Some(false), _) => "chi not cubic".into(),
                    _ => "N/A".into(),
                });
            }
        }
        line.push(r.r_o.table_text().to_string());
        line.push(r.r_o0.table_text().to_string());
        line.push(d.l_over_f.to_string());
        line.push(r.xnr_order.to_string());
        line.push(w_text(r.w_o).to_string());
        line.push(w_text(r.w_o0).to_string());
        line.push(r.h_g.table_text());
        line.push(r.h_g0.table_text());
        cells.push(line);
    }

    let ncol = cells[0].len();
    let widths: Vec<usize> =
        (0..ncol).map(|j| cells.iter().map(|row| row[j].chars().count()).max().unwrap_or(0)).collect();
    let mut out = format!("{family}\n");
    for (i, row) in cells.iter().enumerate() {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(line.join(" | ").trim_end());
        out.push('\n');
        if i == 0 {
            let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
            out.push_str(&rule.join("-+-"));
            out.push('\n');
        }
    }
    out
}
