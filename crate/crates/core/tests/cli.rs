//! The `pcf` binary end to end.

use std::process::{Command, Output};

fn pcf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcf"))
        .args(args)
        .env_remove("PCF_PRECISION_BITS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field(out: &str, name: &str) -> f64 {
    let line = out
        .lines()
        .find(|l| l.split('=').next().unwrap().trim() == name)
        .unwrap();
    line.split('=').nth(1).unwrap().trim().parse().unwrap()
}

#[test]
fn eval_matches_reference_series() {
    let o = pcf(&["eval", "--a", "-12.5", "--z", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("region = ELEM_23"));
    let r = pcf::refseries::uv_series(-12.5, 0.0).unwrap();
    let u = field(&out, "U");
    assert!((u / r.u.value() - 1.0).abs() < 5e-12, "{u}");
    let dv = field(&out, "V'");
    assert!((dv / r.dv.value() - 1.0).abs() < 5e-12);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["eval", "--a", "-50", "--z", "13.9", "--format", "json"][..],
        &["table", "--which", "5.3", "--format", "csv"][..],
        &["coeffs", "--family", "u", "--order", "3"][..],
    ] {
        assert_eq!(pcf(args).stdout, pcf(args).stdout, "{args:?}");
    }
}

#[test]
fn table_51_prints_grid_and_verdict() {
    let o = pcf(&["table", "--which", "5.1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let row = out
        .lines()
        .find(|l| l.trim_start().starts_with("0.00 "))
        .unwrap();
    assert_eq!(row.split_whitespace().nth(1), Some("3.2e-10"));
    assert!(out.contains("50/50 cells"));
    assert!(out.trim_end().ends_with("verdict PASS"));
}

#[test]
fn table_csv_has_header() {
    let o = pcf(&[
        "table",
        "--which",
        "5.2",
        "--format",
        "csv",
        "--precision-bits",
        "320",
    ]);
    let out = stdout(&o);
    assert!(out.starts_with("mu,t,delta\n"));
    assert_eq!(out.lines().count(), 51);
}

#[test]
fn env_precision_is_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_pcf"))
        .args(["table", "--which", "5.1"])
        .env("PCF_PRECISION_BITS", "512")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_pcf"))
        .args(["table", "--which", "5.1", "--format", "csv"])
        .env("PCF_PRECISION_BITS", "128")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn coeffs_json() {
    let out = stdout(&pcf(&["coeffs", "--family", "psi", "--order", "1"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["family"], "psi");
    assert_eq!(v["coeffs"], serde_json::json!(["0", "5/4", "7/2", "7/3"]));
    let out = stdout(&pcf(&["coeffs", "--family", "P", "--order", "2"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!(["3/4", "1"]));
}

#[test]
fn scaled_eval_beyond_double_range() {
    let out = stdout(&pcf(&[
        "eval", "--a", "-5000", "--z", "250", "--scaled", "--format", "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["U"]["logScale"].as_f64().unwrap() > 700.0);
    assert!(v["V"]["logScale"].as_f64().unwrap() < -700.0);
}

#[test]
fn argument_errors() {
    let o = pcf(&["eval", "--a", "one", "--z", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    assert_eq!(
        pcf(&["coeffs", "--family", "q", "--order", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(pcf(&[]).status.code(), Some(2));
}

#[test]
fn check_passes() {
    let o = pcf(&["check"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS ")));
    assert!(out.contains("wronskian scan"));
}
