use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn weightcalc(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weightcalc"))
        .args(args)
        .env("WEIGHTCALC_OUT", out)
        .output()
        .expect("binary runs")
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn gindex_of_qgevrey_is_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = weightcalc(dir.path(), &["gindex", "--seq", "qgevrey:2", "--P", "4096"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["result"]["g"], 2);
    assert_eq!(v["result"]["classification"], "exact");
    assert!(dir.path().join("gindex.json").exists());
}

#[test]
fn check_mg_on_factorial_has_witness() {
    let dir = tempfile::tempdir().unwrap();
    let o = weightcalc(dir.path(), &["check", "mg", "--seq", "gevrey:1", "--P", "1024"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["holds"], true);
    assert!(v["witnesses"]["C"].as_f64().unwrap() >= 1.0);
}

#[test]
fn seq_csv_export_from_quotient_file() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("fact.json");
    std::fs::write(&spec, r#"{"kind": "quotients", "params": {"mu": [1, 2, 3, 4, 5, 6, 7, 8]}}"#).unwrap();
    let o = weightcalc(dir.path(), &["seq", "--spec", spec.to_str().unwrap(), "--export", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("seq.csv")).unwrap();
    assert_eq!(csv, String::from_utf8(o.stdout).unwrap());
    let row: Vec<&str> = csv.lines().nth(5).unwrap().split(',').collect();
    assert_eq!(row[0], "4");
    assert!((row[1].parse::<f64>().unwrap() - 24f64.ln()).abs() < 1e-12);
}

#[test]
fn malformed_spec_names_the_field_and_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("bad.json");
    std::fs::write(&spec, r#"{"kind": "gevrey", "params": {"q": 2}}"#).unwrap();
    let o = weightcalc(dir.path(), &["seq", "--spec", spec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("params.s"));

    std::fs::write(&spec, "{\n\"kind\": \"gevrey\",\n]").unwrap();
    let o = weightcalc(dir.path(), &["seq", "--spec", spec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn usage_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(weightcalc(dir.path(), &["frobnicate"]).status.code(), Some(1));
    assert_eq!(weightcalc(dir.path(), &["verify", "no-such-id", "--inputs", "gevrey:1"]).status.code(), Some(1));
    assert_eq!(weightcalc(dir.path(), &["check", "weaksep", "--seq", "gevrey:1"]).status.code(), Some(1));
    assert_eq!(weightcalc(dir.path(), &["--help"]).status.code(), Some(0));
}

#[test]
fn validity_overflow_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = weightcalc(dir.path(), &["matrix", "--omega", "gevrey:1", "--P", "16", "--ell", "64"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("x_max = 16"));
}

#[test]
fn verify_all_is_consistent_and_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "all", "--family", "qgevrey:2", "--P", "256", "--seed", "5"];
    let a = weightcalc(dir.path(), &args);
    let b = weightcalc(dir.path(), &args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    assert_ne!(v["status"], "violation-found");
    assert_eq!(v["seed"], 5);
    assert!(v["reports"].as_array().unwrap().len() >= 14);
}

#[test]
fn verify_single_theorem_and_random_root_chain() {
    let dir = tempfile::tempdir().unwrap();
    let o = weightcalc(
        dir.path(),
        &["verify", "doubling-power-transfer", "--inputs", "gevrey:2", "gevrey:1", "--ell", "2", "--P", "256"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["status"], "consistent");

    let o = weightcalc(dir.path(), &["verify", "root-chain", "--seed", "9", "--count", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["seed"], 9);
    assert_eq!(v["status"], "consistent");
    assert!(dir.path().join("verify-root-chain.json").exists());
}

#[test]
fn plot_data_exports() {
    let dir = tempfile::tempdir().unwrap();
    let o = weightcalc(dir.path(), &["omega", "--seq", "gevrey:1", "--P", "64", "--export", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("u,slope,value\n"));
    let o = weightcalc(dir.path(), &["conjugate", "--seq", "gevrey:1", "--P", "64", "--export", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let o = weightcalc(dir.path(), &["matrix", "--omega", "gevrey:1", "--P", "64", "--ell", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    for f in ["matrix_ell_1.csv", "matrix_ell_2.csv", "matrix.json"] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    let row2 = std::fs::read_to_string(dir.path().join("matrix_ell_2.csv")).unwrap();
    assert!(row2.starts_with("p,logM,logmu\n"));
}

#[test]
fn report_summarizes_a_sequence() {
    let dir = tempfile::tempdir().unwrap();
    let o = weightcalc(dir.path(), &["report", "--seq", "gevrey:1", "--P", "256"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["growth_index"]["g"], 1);
    assert_eq!(v["mg"]["holds"], true);
    assert_ne!(v["status"], "violation-found");
}
