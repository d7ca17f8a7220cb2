use std::collections::BTreeSet;

use serde::Deserialize;

use super::{HeckeError, Result, WeightFunction};

pub type AllowedSet = BTreeSet<(u32, u32)>;

const DEFAULT_ALLOWED: &str = include_str!("../../data/lusztig_allowed.json");

#[derive(Deserialize)]
struct AllowedFile {
    schema_version: u32,
    pairs: Vec<(u32, u32)>,
}

/// Parses an allowed-set file: `{"schema_version": 1, "pairs": [[l, l*], ...]}`.
pub fn parse_allowed(json: &str) -> Result<AllowedSet> {
    let f: AllowedFile = serde_json::from_str(json).map_err(|e| HeckeError::AllowedSet(e.to_string()))?;
    if f.schema_version != 1 {
        return Err(HeckeError::AllowedSet(format!("unsupported schema_version {}", f.schema_version)));
    }
    Ok(f.pairs.into_iter().collect())
}

/// The shipped set `{(0,0), (1,1), (2,2), (3,1)}`.
pub fn default_allowed() -> AllowedSet {
    parse_allowed(DEFAULT_ALLOWED).expect("bundled allowed set is valid")
}

/// Whether the labels of a rank-one weight function lie in `allowed`. The
/// empty weight function counts as `(0, 0)`.
pub fn check_lusztig(w: &WeightFunction, allowed: &AllowedSet) -> bool {
    allowed.contains(&w.pair())
}
