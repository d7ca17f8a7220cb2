use std::collections::BTreeSet;

use g2_hecke::blocks::{self, check_ro_reduction, check_weyl_iso, emit_classified, Family};
use g2_hecke::extquot::{self, block_models, check_property, closed_form_count, crossed_product_irr_count};
use g2_hecke::hecke::{check_lusztig, verify_relations_with, AffineHeckePresentation, AllowedSet, VerifyOptions};
use g2_hecke::plancherel::{self, WeylOrder};
use g2_hecke::rootdata::{bad_primes, g2_datum, generate_weyl, DEFAULT_GROWTH_BOUND};
use serde::Serialize;

use crate::config::Suite;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub seed: u64,
    pub bound: i64,
    pub torsion_level: u32,
    pub checks: Vec<CheckLine>,
    pub failures: usize,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            out.push_str(&format!("{mark} {}/{}: {}\n", c.suite, c.name, c.detail));
        }
        out.push_str(&format!("{} checks, {} failures\n", self.checks.len(), self.failures));
        out
    }
}

pub struct CheckParams<'a> {
    pub suites: &'a [Suite],
    pub allowed: &'a AllowedSet,
    pub seed: u64,
    pub bound: i64,
    pub torsion_level: u32,
}

struct Lines {
    suite: &'static str,
    out: Vec<CheckLine>,
}

impl Lines {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.out.push(CheckLine { suite: self.suite.into(), name: name.into(), passed, detail: detail.into() });
    }
}

pub fn run_checks(p: &CheckParams<'_>) -> CheckReport {
    let mut checks = Vec::new();
    for &suite in Suite::ALL.iter().filter(|s| p.suites.contains(s)) {
        let mut lines = Lines { suite: suite_name(suite), out: Vec::new() };
        match suite {
            Suite::Rootdata => rootdata(&mut lines),
            Suite::Tables => tables(&mut lines),
            Suite::Theorems => theorems(&mut lines, p.allowed),
            Suite::Relations => relations(&mut lines, p.bound, p.seed),
            Suite::Extquot => extquot_suite(&mut lines, p.seed, p.torsion_level),
        }
        checks.extend(lines.out);
    }
    let failures = checks.iter().filter(|c| !c.passed).count();
    CheckReport {
        schema_version: blocks::SCHEMA_VERSION,
        seed: p.seed,
        bound: p.bound,
        torsion_level: p.torsion_level,
        checks,
        failures,
    }
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Rootdata => "rootdata",
        Suite::Tables => "tables",
        Suite::Theorems => "theorems",
        Suite::Relations => "relations",
        Suite::Extquot => "extquot",
    }
}

fn rootdata(l: &mut Lines) {
    let d = g2_datum();
    let pos = d.positive_roots().len();
    l.push("g2 positive roots", pos == 6, format!("{pos}"));
    let (a, b) = (d.simple_root(0).clone(), d.simple_root(1).clone());
    let pairs = (d.inner(&a, &a), d.inner(&b, &b), d.inner(&a, &b));
    l.push("g2 pairings", pairs == (Some(2), Some(6), Some(-3)), format!("{pairs:?}"));
    match generate_weyl(&d, DEFAULT_GROWTH_BOUND) {
        Ok(w) => l.push("g2 weyl order", w.order() == 12, format!("{}", w.order())),
        Err(e) => l.push("g2 weyl order", false, e.to_string()),
    }
    match bad_primes(&d) {
        Ok(bp) => l.push("g2 bad primes", bp == BTreeSet::from([2, 3]), format!("{bp:?}")),
        Err(e) => l.push("g2 bad primes", false, e.to_string()),
    }
}

fn tables(l: &mut Lines) {
    for family in Family::ALL {
        match blocks::diff_against_golden(family) {
            Ok(diffs) if diffs.is_empty() => {
                let n = blocks::canonical_descriptors(family).len();
                l.push(family.name(), true, format!("{n} rows match the golden table"));
            }
            Ok(diffs) => l.push(family.name(), false, diffs.join("; ")),
            Err(e) => l.push(family.name(), false, e.to_string()),
        }
    }
}

fn theorems(l: &mut Lines, allowed: &AllowedSet) {
    for family in Family::ALL {
        let rows = match emit_classified(family) {
            Ok(r) => r,
            Err(e) => {
                l.push(family.name(), false, e.to_string());
                continue;
            }
        };
        let n = rows.len();
        let mut failed = Vec::new();
        for (i, (_, c)) in rows.iter().enumerate() {
            let row = i + 1;
            if !check_weyl_iso(c) {
                failed.push(format!("row {row}: presentations differ"));
            }
            if !check_ro_reduction(c) {
                failed.push(format!("row {row}: R(O) does not reduce"));
            }
            if !c.check_invariants() {
                failed.push(format!("row {row}: W_O and R(O) both nontrivial"));
            }
            for h in [&c.h_g, &c.h_g0] {
                if h.finite_weyl_order() == 2 && !check_lusztig(h.weights(), allowed) {
                    failed.push(format!("row {row}: labels {:?} not allowed", h.labels()));
                }
            }
            if let Some(case) = c.plancherel_case {
                let agree = blocks::plancherel_case_for(&rows[i].0)
                    .ok()
                    .flatten()
                    .and_then(|pc| plancherel::mu(&pc).ok())
                    .and_then(|m| Some((plancherel::labels(&m).ok()?, plancherel::weyl_from_zeros(&m).ok()?)));
                match agree {
                    Some((w, order)) if order == c.w_o && (order == WeylOrder::Trivial || w.pair() == c.h_g.labels()) => {}
                    _ => failed.push(format!("row {row}: labels disagree with mu for {case}")),
                }
            }
        }
        let detail = if failed.is_empty() {
            format!("{n} rows: weyl iso, R reduction, Lusztig labels, mu labels")
        } else {
            failed.join("; ")
        };
        l.push(family.name(), failed.is_empty(), detail);
    }
}

fn relations(l: &mut Lines, bound: i64, seed: u64) {
    let mut seen: BTreeSet<(usize, u32, u32)> = BTreeSet::new();
    let mut presentations: Vec<AffineHeckePresentation> = Vec::new();
    for family in Family::ALL {
        for (_, c) in emit_classified(family).unwrap_or_default() {
            for h in [c.h_g, c.h_g0] {
                let (a, b) = h.labels();
                if seen.insert((h.finite_weyl_order(), a, b)) {
                    presentations.push(h);
                }
            }
        }
    }
    for h in presentations {
        let r = verify_relations_with(&h, VerifyOptions { bound, seed, ..VerifyOptions::default() });
        let cases: usize = r.checks.iter().map(|c| c.cases).sum();
        let name = if h.finite_weyl_order() == 2 {
            format!("labels {:?}", h.labels())
        } else {
            "commutative".to_string()
        };
        let detail = if r.passed() {
            format!("{cases} relation instances, bound {bound}")
        } else {
            r.checks
                .iter()
                .filter(|c| c.failed > 0)
                .map(|c| format!("{}: {} of {} fail ({})", c.name, c.failed, c.cases, c.examples.join(", ")))
                .collect::<Vec<_>>()
                .join("; ")
        };
        l.push(name, r.passed(), detail);
    }
}

fn extquot_suite(l: &mut Lines, seed: u64, torsion: u32) {
    let models = extquot::sweep_models(8);
    let mut bad = Vec::new();
    for (i, m) in models.iter().enumerate() {
        let n = extquot::extended_quotient(m).map(|q| q.len());
        let cp = crossed_product_irr_count(m);
        let cf = closed_form_count(m);
        if n.as_ref().ok() != Some(&cp) || cp != cf {
            bad.push(format!("model {i}: {n:?} vs {cp} vs {cf}"));
        }
    }
    l.push(
        "oracle sweep |X| <= 8",
        bad.is_empty(),
        if bad.is_empty() { format!("{} models", models.len()) } else { bad.join("; ") },
    );

    let corpus = extquot::paired_corpus(seed, 2..=12);
    let mut bad = Vec::new();
    let (mut accepted, mut rejected, mut transfers) = (0, 0, 0);
    for p in &corpus {
        let holds = check_property(&p.group, &p.galois, &p.map).holds;
        match (extquot::matching_bijection(&p.group, &p.galois, &p.map), holds) {
            (Ok(_), true) => accepted += 1,
            (Err(_), false) => rejected += 1,
            (r, _) => bad.push(format!("{}: property {holds}, matching {}", p.label, r.is_ok())),
        }
        if let Ok(t) = extquot::depth_zero_transfer(&p.group, &p.galois, &p.map) {
            transfers += 1;
            let target = extquot::extended_quotient(&p.galois).map(|q| q.len()).unwrap_or(usize::MAX);
            if t.bijection.len() != target {
                bad.push(format!("{}: transfer changes cardinality", p.label));
            }
        }
    }
    l.push(
        "matching iff property",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} pairs: {accepted} matched, {rejected} rejected, {transfers} transfers", corpus.len())
        } else {
            bad.join("; ")
        },
    );

    let mut bad = Vec::new();
    let (mut modeled, mut skipped) = (0, 0);
    for family in Family::ALL {
        for (i, (_, c)) in emit_classified(family).unwrap_or_default().iter().enumerate() {
            match block_models(c, torsion) {
                Ok((g, g0)) => {
                    modeled += 1;
                    let id: Vec<usize> = (0..g.len()).collect();
                    match extquot::depth_zero_transfer(&g, &g0, &id) {
                        Ok(t) if t.bijection.len() == crossed_product_irr_count(&g0) => {}
                        Ok(_) => bad.push(format!("{family} row {}: cardinality", i + 1)),
                        Err(e) => bad.push(format!("{family} row {}: {e}", i + 1)),
                    }
                }
                Err(extquot::ExtQuotError::UnknownRGroup) => skipped += 1,
                Err(e) => bad.push(format!("{family} row {}: {e}", i + 1)),
            }
        }
    }
    l.push(
        format!("block transfer at torsion {torsion}"),
        bad.is_empty(),
        if bad.is_empty() {
            format!("{modeled} rows transferred, {skipped} rows with unknown R(O) skipped")
        } else {
            bad.join("; ")
        },
    );
}
