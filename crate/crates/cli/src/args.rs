use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use g2_hecke::blocks::Family;
use g2_hecke::exactalg::Sign;
use g2_hecke::plancherel::CaseId;

use crate::config::{Command, FileConfig, Format, ModelSource, RunConfig, Suite, DEFAULT_BOUND};
use crate::{CliError, Result};

/// Hecke algebras of Bernstein blocks for G2 attached to its maximal Levi
/// subgroups.
#[derive(Debug, Parser)]
#[command(name = "g2hecke", version)]
pub struct Cli {
    /// TOML file with defaults for format, allowed_lusztig_path,
    /// torsion_level, seed and bound.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Regenerate the block tables.
    Tables {
        /// One of long-depth-zero, long-positive, short-depth-zero,
        /// short-positive; all four when omitted.
        #[arg(long)]
        family: Option<Family>,
    },
    /// Run the consistency suite; exits 1 on any failure.
    Check(CheckArgs),
    /// Check the relations of a rank-one affine Hecke algebra, or multiply
    /// two of its elements.
    Hecke(HeckeArgs),
    /// Extended quotients of finite orbit models.
    Extquot(ExtquotArgs),
    /// The Plancherel mu-function of a case.
    Mu(MuArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Run every suite (the default).
    #[arg(long)]
    pub all: bool,
    /// Run only these suites.
    #[arg(long = "suite", value_enum)]
    pub suites: Vec<Suite>,
    #[arg(long)]
    pub allowed_lusztig: Option<PathBuf>,
    #[arg(long)]
    pub torsion_level: Option<u32>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub bound: Option<i64>,
}

#[derive(Debug, Args)]
pub struct HeckeArgs {
    #[arg(long)]
    pub lambda: u32,
    #[arg(long)]
    pub lambda_star: u32,
    #[arg(long)]
    pub bound: Option<i64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Two elements such as `θ[1]*T[0]` and `(q - 1)*T[]`.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    pub multiply: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct ExtquotArgs {
    /// JSON model file.
    #[arg(long, conflicts_with_all = ["family", "sweep"])]
    pub model: Option<PathBuf>,
    /// Model the block in this table row.
    #[arg(long, requires = "row", conflicts_with = "sweep")]
    pub family: Option<Family>,
    #[arg(long, requires = "family")]
    pub row: Option<usize>,
    /// Compare the counting oracles on all models with at most this many
    /// points.
    #[arg(long)]
    pub sweep: Option<usize>,
    #[arg(long)]
    pub torsion_level: Option<u32>,
}

#[derive(Debug, Args)]
pub struct MuArgs {
    #[arg(long)]
    pub case: CaseId,
    /// Residue degree f(L/F).
    #[arg(long, default_value_t = 2)]
    pub f: u8,
    /// Value of omega at a uniformizer.
    #[arg(long, value_parser = parse_sign, default_value = "+")]
    pub omega: Sign,
    /// Value of chi^2 chi'^-1 at a uniformizer of L.
    #[arg(long, value_parser = parse_sign, default_value = "-")]
    pub chi: Sign,
}

fn parse_sign(s: &str) -> std::result::Result<Sign, String> {
    match s {
        "+" | "+1" | "1" | "plus" => Ok(Sign::Plus),
        "-" | "-1" | "minus" => Ok(Sign::Minus),
        _ => Err(format!("expected + or -, got {s:?}")),
    }
}

impl Cli {
    /// Resolves the command line against the config file, if any.
    pub fn into_config(self) -> Result<RunConfig> {
        let file = match &self.config {
            Some(p) => FileConfig::load(p)?,
            None => FileConfig::default(),
        };
        let (command, torsion, seed, bound, allowed) = match self.command {
            Sub::Tables { family } => (Command::Tables { family }, None, None, None, None),
            Sub::Check(a) => {
                let suites = if a.all || a.suites.is_empty() { Suite::ALL.to_vec() } else { a.suites };
                (Command::Check { suites }, a.torsion_level, a.seed, a.bound, a.allowed_lusztig)
            }
            Sub::Hecke(a) => {
                let multiply = a.multiply.map(|v| (v[0].clone(), v[1].clone()));
                (Command::Hecke { labels: (a.lambda, a.lambda_star), multiply }, None, a.seed, a.bound, None)
            }
            Sub::Extquot(a) => {
                let source = match (a.model, a.family, a.row, a.sweep) {
                    (Some(p), None, None, None) => ModelSource::File(p),
                    (None, Some(family), Some(row), None) => ModelSource::Block { family, row },
                    (None, None, None, Some(max_points)) => ModelSource::Sweep { max_points },
                    _ => return Err(CliError::Usage("extquot needs one of --model, --family/--row, --sweep".into())),
                };
                (Command::Extquot { source }, a.torsion_level, None, None, None)
            }
            Sub::Mu(a) => {
                (Command::Mu { case: a.case, residue_degree: a.f, omega: a.omega, chi: a.chi }, None, None, None, None)
            }
        };
        let mut cfg = RunConfig::new(command);
        cfg.format = self.format.or(file.format).unwrap_or_default();
        cfg.allowed_lusztig_path = allowed.or(file.allowed_lusztig_path);
        if let Some(t) = torsion.or(file.torsion_level) {
            cfg.torsion_level = t;
        }
        cfg.seed = seed.or(file.seed).unwrap_or(0);
        cfg.bound = bound.or(file.bound).unwrap_or(DEFAULT_BOUND);
        cfg.validate()?;
        Ok(cfg)
    }
}
