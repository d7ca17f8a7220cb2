use std::path::{Path, PathBuf};

use g2_hecke::blocks::Family;
use g2_hecke::exactalg::Sign;
use g2_hecke::extquot::DEFAULT_TORSION;
use g2_hecke::plancherel::CaseId;
use serde::Deserialize;

use crate::{CliError, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    #[default]
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Rootdata,
    Tables,
    Theorems,
    Relations,
    Extquot,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Rootdata, Suite::Tables, Suite::Theorems, Suite::Relations, Suite::Extquot];
}

/// Where the point models of `extquot` come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelSource {
    File(PathBuf),
    Block { family: Family, row: usize },
    Sweep { max_points: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Tables { family: Option<Family> },
    Check { suites: Vec<Suite> },
    Hecke { labels: (u32, u32), multiply: Option<(String, String)> },
    Extquot { source: ModelSource },
    Mu { case: CaseId, residue_degree: u8, omega: Sign, chi: Sign },
}

/// A fully resolved run: command line over config file over defaults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub allowed_lusztig_path: Option<PathBuf>,
    pub torsion_level: u32,
    pub seed: u64,
    pub bound: i64,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            format: Format::Text,
            allowed_lusztig_path: None,
            torsion_level: DEFAULT_TORSION,
            seed: 0,
            bound: DEFAULT_BOUND,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.torsion_level == 0 {
            return Err(CliError::Usage("torsion_level must be at least 1".into()));
        }
        if !(0..=MAX_BOUND).contains(&self.bound) {
            return Err(CliError::Usage(format!("bound must lie in 0..={MAX_BOUND}")));
        }
        match &self.command {
            Command::Mu { residue_degree, .. } if !matches!(residue_degree, 1 | 2) => {
                Err(CliError::Usage(format!("residue degree f(L/F) must be 1 or 2, got {residue_degree}")))
            }
            Command::Extquot { source: ModelSource::Sweep { max_points } } if *max_points > MAX_SWEEP => {
                Err(CliError::Usage(format!("sweep size must be at most {MAX_SWEEP}")))
            }
            Command::Check { suites } if suites.is_empty() => Err(CliError::Usage("no check suite selected".into())),
            _ => Ok(()),
        }
    }
}

pub const DEFAULT_BOUND: i64 = 3;
pub const MAX_BOUND: i64 = 8;
pub const MAX_SWEEP: usize = 10;

/// Settings accepted in a TOML config file; every key is optional.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub format: Option<Format>,
    pub allowed_lusztig_path: Option<PathBuf>,
    pub torsion_level: Option<u32>,
    pub seed: Option<u64>,
    pub bound: Option<i64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        let mut cfg: FileConfig =
            toml::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        // relative paths in a config file are relative to the file
        if let (Some(p), Some(dir)) = (&cfg.allowed_lusztig_path, path.parent()) {
            if p.is_relative() {
                cfg.allowed_lusztig_path = Some(dir.join(p));
            }
        }
        Ok(cfg)
    }
}
