use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn g2hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2hecke")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn tables_long_depth_zero_json() {
    let o = g2hecke(&["tables", "--family", "long-depth-zero", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["rows"].as_array().unwrap().len(), 7);
}

#[test]
fn all_tables_json() {
    let o = g2hecke(&["tables", "--format", "json"]);
    let v = json(&o);
    let sizes: Vec<usize> = v["tables"].as_array().unwrap().iter().map(|t| t["rows"].as_array().unwrap().len()).collect();
    assert_eq!(sizes, [7, 6, 4, 7]);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["tables", "--format", "json"][..],
        &["check", "--suite", "extquot", "--format", "json"],
        &["mu", "--case", "long-I", "--format", "json"],
    ] {
        assert_eq!(g2hecke(args).stdout, g2hecke(args).stdout, "{args:?}");
    }
}

#[test]
fn check_all_passes() {
    let o = g2hecke(&["check", "--all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failures"));
}

#[test]
fn check_fails_with_restricted_allowed_set() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("allowed.json");
    std::fs::write(&p, r#"{"schema_version": 1, "pairs": [[0, 0], [1, 1]]}"#).unwrap();
    let o = g2hecke(&["check", "--suite", "theorems", "--allowed-lusztig", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn mu_long_iv() {
    let o = g2hecke(&["mu", "--case", "long-IV"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("mu = c\n"), "{s}");
    assert!(s.contains("W_O: trivial"), "{s}");
}

#[test]
fn mu_json_labels() {
    let v = json(&g2hecke(&["mu", "--case", "long-II", "--format", "json"]));
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["labels"], serde_json::json!([2, 2]));
    assert_eq!(v["w_o"], "order-2");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["tables", "--family", "medium"][..],
        &["mu", "--case", "long-IX"],
        &["mu", "--case", "long-I", "--f", "3"],
        &["check", "--bound", "99"],
        &["extquot"],
        &["extquot", "--family", "long-positive", "--row", "40"],
        &["nonsense"],
    ] {
        assert_eq!(g2hecke(args).status.code(), Some(2), "{args:?}");
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn config_file_sets_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "g2.toml", "format = \"json\"\nseed = 7\nbound = 2\ntorsion_level = 4\n");
    let v = json(&g2hecke(&["--config", &cfg, "check", "--suite", "rootdata"]));
    assert_eq!((v["seed"].as_u64(), v["bound"].as_i64(), v["torsion_level"].as_u64()), (Some(7), Some(2), Some(4)));
    // the command line wins
    let v = json(&g2hecke(&["--config", &cfg, "check", "--suite", "rootdata", "--seed", "9"]));
    assert_eq!(v["seed"], 9);
}

#[test]
fn config_relative_allowed_path() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "allowed.json", r#"{"schema_version": 1, "pairs": [[0, 0]]}"#);
    let cfg = write(dir.path(), "g2.toml", "allowed_lusztig_path = \"allowed.json\"\n");
    let o = g2hecke(&["--config", &cfg, "check", "--suite", "theorems"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bad_config_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "g2.toml", "colour = \"blue\"\n");
    assert_eq!(g2hecke(&["--config", &cfg, "tables"]).status.code(), Some(2));
    let missing = dir.path().join("none.toml");
    assert_eq!(g2hecke(&["--config", missing.to_str().unwrap(), "tables"]).status.code(), Some(2));
}

#[test]
fn hecke_verify_and_multiply() {
    let o = g2hecke(&["hecke", "--lambda", "3", "--lambda-star", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("0 failures\n"));
    let o = g2hecke(&["hecke", "--lambda", "1", "--lambda-star", "1", "--multiply", "T[0]", "T[0]"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!stdout(&o).trim().is_empty());
}

#[test]
fn extquot_sources() {
    let o = g2hecke(&["extquot", "--sweep", "5", "--format", "json"]);
    assert_eq!(json(&o)["mismatches"], 0);

    let v = json(&g2hecke(&["extquot", "--family", "long-depth-zero", "--row", "1", "--torsion-level", "4", "--format", "json"]));
    assert_eq!(v["g"]["points"], 4);
    assert_eq!(v["transfer"]["bijection"]["pairs"].as_array().unwrap().len(), v["g0"]["crossed_product_irr_count"].as_u64().unwrap() as usize);

    let dir = tempfile::tempdir().unwrap();
    let model = g2_hecke::extquot::FiniteOrbitModel::cyclic(3, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
    let path = write(dir.path(), "m.json", &serde_json::to_string(&model).unwrap());
    let v = json(&g2hecke(&["extquot", "--model", &path, "--format", "json"]));
    // {0} is fixed, {1, 2} is a free orbit
    assert_eq!(v["model"]["crossed_product_irr_count"], 3);

    let bad = write(dir.path(), "bad.json", "{\"moduli\": [3]}");
    assert_eq!(g2hecke(&["extquot", "--model", &bad]).status.code(), Some(2));
}
