//! Library side of the `g2hecke` command: configuration, the check suite
//! and the report renderers. `main.rs` only parses arguments and prints.

pub mod args;
pub mod check;
pub mod config;

use std::fmt::Write as _;

use g2_hecke::blocks::{self, Family, TableDocument};
use g2_hecke::extquot::{self, FiniteOrbitModel};
use g2_hecke::hecke::{self, AffineHeckePresentation, HeckeElement, VerifyOptions};
use g2_hecke::plancherel::{self, PlancherelCase};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

pub use args::Cli;
pub use check::{run_checks, CheckLine, CheckParams, CheckReport};
pub use config::{Command, FileConfig, Format, ModelSource, RunConfig, Suite};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("config: {0}")]
    Config(String),
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        EXIT_USAGE
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

/// Output of a successful run. `code` is nonzero only when a check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub code: u8,
    pub stdout: String,
}

fn ok(stdout: String) -> Result<RunOutput> {
    Ok(RunOutput { code: EXIT_OK, stdout })
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

pub fn run(cfg: &RunConfig) -> Result<RunOutput> {
    cfg.validate()?;
    match &cfg.command {
        Command::Tables { family } => tables(*family, cfg.format),
        Command::Check { suites } => check(cfg, suites),
        Command::Hecke { labels, multiply } => hecke_cmd(cfg, *labels, multiply.as_ref()),
        Command::Extquot { source } => extquot_cmd(cfg, source),
        Command::Mu { case, residue_degree, omega, chi } => mu_cmd(cfg.format, *case, *residue_degree, *omega, *chi),
    }
}

fn tables(family: Option<Family>, format: Format) -> Result<RunOutput> {
    let families = family.map_or_else(|| Family::ALL.to_vec(), |f| vec![f]);
    let docs: Vec<TableDocument> =
        families.iter().map(|&f| blocks::table_document(f)).collect::<std::result::Result<_, _>>().map_err(input)?;
    match format {
        Format::Json if docs.len() == 1 => ok(to_json(&docs[0])),
        Format::Json => ok(to_json(&json!({ "schema_version": blocks::SCHEMA_VERSION, "tables": docs }))),
        Format::Text => {
            let mut out = String::new();
            for (i, d) in docs.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                let _ = writeln!(out, "{}", d.family);
                out.push_str(&blocks::render_text(d.family, &d.rows));
            }
            ok(out)
        }
    }
}

fn check(cfg: &RunConfig, suites: &[Suite]) -> Result<RunOutput> {
    let allowed = match &cfg.allowed_lusztig_path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
            hecke::parse_allowed(&text).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?
        }
        None => hecke::default_allowed(),
    };
    let report = run_checks(&CheckParams {
        suites,
        allowed: &allowed,
        seed: cfg.seed,
        bound: cfg.bound,
        torsion_level: cfg.torsion_level,
    });
    let stdout = match cfg.format {
        Format::Json => to_json(&report),
        Format::Text => report.render_text(),
    };
    Ok(RunOutput { code: if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED }, stdout })
}

fn hecke_cmd(cfg: &RunConfig, (l, ls): (u32, u32), multiply: Option<&(String, String)>) -> Result<RunOutput> {
    let p = AffineHeckePresentation::rank_one(l, ls);
    if let Some((a, b)) = multiply {
        let a = HeckeElement::parse(&p, a).map_err(input)?;
        let b = HeckeElement::parse(&p, b).map_err(input)?;
        let prod = hecke::multiply(&a, &b, &p).map_err(input)?;
        return match cfg.format {
            Format::Json => ok(to_json(&json!({
                "schema_version": blocks::SCHEMA_VERSION,
                "labels": [l, ls],
                "left": a.to_string(),
                "right": b.to_string(),
                "product": prod.to_string(),
            }))),
            Format::Text => ok(format!("{prod}\n")),
        };
    }
    let r = hecke::verify_relations_with(&p, VerifyOptions { bound: cfg.bound, seed: cfg.seed, ..VerifyOptions::default() });
    let stdout = match cfg.format {
        Format::Json => to_json(&json!({ "schema_version": blocks::SCHEMA_VERSION, "report": r, "failures": r.failures() })),
        Format::Text => {
            let mut out = format!("{p}\n");
            for c in &r.checks {
                let _ = writeln!(out, "{:<20} {:>6} cases {:>4} failed", c.name, c.cases, c.failed);
                for e in &c.examples {
                    let _ = writeln!(out, "    {e}");
                }
            }
            let _ = writeln!(out, "{} failures", r.failures());
            out
        }
    };
    Ok(RunOutput { code: if r.passed() { EXIT_OK } else { EXIT_CHECK_FAILED }, stdout })
}

#[derive(Serialize)]
struct ModelSummary {
    points: usize,
    gamma_order: usize,
    extended_quotient: Vec<extquot::ExtQuotPoint>,
    crossed_product_irr_count: usize,
}

fn summarize(m: &FiniteOrbitModel) -> Result<ModelSummary> {
    Ok(ModelSummary {
        points: m.len(),
        gamma_order: m.gamma_order(),
        extended_quotient: extquot::extended_quotient(m).map_err(input)?,
        crossed_product_irr_count: extquot::crossed_product_irr_count(m),
    })
}

fn summary_text(name: &str, s: &ModelSummary) -> String {
    let pts: Vec<String> = s.extended_quotient.iter().map(|p| format!("({:?}, {})", p.representative, p.irrep)).collect();
    format!(
        "{name}: {} points, |Gamma| = {}, {} extended-quotient points, crossed product has {} simple modules\n  {}\n",
        s.points,
        s.gamma_order,
        s.extended_quotient.len(),
        s.crossed_product_irr_count,
        pts.join(" ")
    )
}

fn extquot_cmd(cfg: &RunConfig, source: &ModelSource) -> Result<RunOutput> {
    match source {
        ModelSource::File(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let m: FiniteOrbitModel =
                serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let s = summarize(&m)?;
            match cfg.format {
                Format::Json => ok(to_json(&json!({ "schema_version": blocks::SCHEMA_VERSION, "model": s }))),
                Format::Text => ok(summary_text("model", &s)),
            }
        }
        ModelSource::Block { family, row } => {
            let rows = blocks::emit_classified(*family).map_err(input)?;
            let (d, c) = rows
                .get(row.wrapping_sub(1))
                .ok_or_else(|| CliError::Usage(format!("{family} has rows 1..={}", rows.len())))?;
            let (g, g0) = extquot::block_models(c, cfg.torsion_level).map_err(input)?;
            let id: Vec<usize> = (0..g.len()).collect();
            let t = extquot::depth_zero_transfer(&g, &g0, &id).map_err(input)?;
            let (sg, sg0) = (summarize(&g)?, summarize(&g0)?);
            match cfg.format {
                Format::Json => ok(to_json(&json!({
                    "schema_version": blocks::SCHEMA_VERSION,
                    "family": family,
                    "row": row,
                    "descriptor": d,
                    "torsion_level": cfg.torsion_level,
                    "g": sg,
                    "g0": sg0,
                    "transfer": t,
                }))),
                Format::Text => ok(format!(
                    "{family} row {row}, torsion {}\n{}{}transfer: {} pairs\n",
                    cfg.torsion_level,
                    summary_text("G", &sg),
                    summary_text("G0", &sg0),
                    t.bijection.len()
                )),
            }
        }
        ModelSource::Sweep { max_points } => {
            let models = extquot::sweep_models(*max_points);
            let mut mismatches = 0;
            for m in &models {
                let n = extquot::extended_quotient(m).map_err(input)?.len();
                if n != extquot::crossed_product_irr_count(m) || n != extquot::closed_form_count(m) {
                    mismatches += 1;
                }
            }
            let stdout = match cfg.format {
                Format::Json => to_json(&json!({
                    "schema_version": blocks::SCHEMA_VERSION,
                    "max_points": max_points,
                    "models": models.len(),
                    "mismatches": mismatches,
                })),
                Format::Text => format!("{} models with at most {max_points} points, {mismatches} mismatches\n", models.len()),
            };
            Ok(RunOutput { code: if mismatches == 0 { EXIT_OK } else { EXIT_CHECK_FAILED }, stdout })
        }
    }
}

fn mu_cmd(
    format: Format,
    case: plancherel::CaseId,
    f: u8,
    omega: g2_hecke::exactalg::Sign,
    chi: g2_hecke::exactalg::Sign,
) -> Result<RunOutput> {
    let pc = PlancherelCase::representative(case, f).map_err(input)?.with_units(omega, chi);
    let m = plancherel::mu(&pc).map_err(input)?;
    let (a, b) = m.v_exponents();
    let labels = plancherel::labels(&m).map_err(input)?;
    let w = plancherel::weyl_from_zeros(&m).map_err(input)?;
    let q_alpha = plancherel::q_power_string(a);
    let q_alpha_star = plancherel::q_power_string(b);
    match format {
        Format::Json => ok(to_json(&json!({
            "schema_version": blocks::SCHEMA_VERSION,
            "case": case,
            "f": f,
            "mu": m.factored(),
            "substitution": m.substitution().map(|s| s.text.clone()),
            "q_alpha": q_alpha,
            "q_alpha_star": q_alpha_star,
            "labels": labels.pair(),
            "w_o": w,
        }))),
        Format::Text => {
            let mut out = format!("case: {case} (f(L/F) = {f})\nmu = {}\n", m.factored());
            if let Some(s) = m.substitution() {
                let _ = writeln!(out, "substitution: {}", s.text);
            }
            let (l, ls) = labels.pair();
            let _ = writeln!(out, "(q_alpha, q_alpha*) = ({q_alpha}, {q_alpha_star})");
            let _ = writeln!(out, "labels: ({l}, {ls})");
            let _ = writeln!(out, "W_O: {w}");
            ok(out)
        }
    }
}
