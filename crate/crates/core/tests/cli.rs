//! The `stirling-lab` binary as a black box.

use std::collections::BTreeSet;
use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_stirling-lab");

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(BIN).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn verify_json_shape() {
    let (code, out) = run(&["verify", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let keys: BTreeSet<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        BTreeSet::from(["reports", "generated_at", "overall_pass", "config"])
    );
    assert_eq!(v["overall_pass"], true);
    for r in v["reports"].as_array().unwrap() {
        let keys: BTreeSet<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            BTreeSet::from(["name", "lhs", "rhs", "abs_diff", "tolerance", "pass"])
        );
    }
}

#[test]
fn verify_is_deterministic_apart_from_timestamp() {
    let strip = |s: String| {
        let mut v: serde_json::Value = serde_json::from_str(&s).unwrap();
        v.as_object_mut().unwrap().remove("generated_at");
        v
    };
    let a = strip(run(&["verify", "--json", "--tol", "1e-9"]).1);
    let b = strip(run(&["verify", "--json", "--tol", "1e-9"]).1);
    assert_eq!(a, b);
}

#[test]
fn injected_faults_fail_verification() {
    for fault in [
        "stirling-constant",
        "sawtooth-unit-integral",
        "series-term",
        "series-tail-bracket",
        "tangent-tail-bracket",
        "combined-integrand",
        "partial-fraction-form",
        "log-sin-leading-piece",
    ] {
        let (code, out) = run(&["verify", "--inject-fault", fault]);
        assert_eq!(code, 1, "{fault}");
        assert!(out.contains("FAIL"), "{fault}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--tol", "0"][..],
        &["verify", "--tol", "abc"],
        &["ratio", "--max-n", "0"],
        &["constant", "--method", "nope"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).0, 2, "{args:?}");
    }
}

#[test]
fn ratio_csv_and_json_agree() {
    let (code, csv) = run(&["ratio", "--max-n", "50"]);
    assert_eq!(code, 0);
    let (code, json) = run(&["ratio", "--max-n", "50", "--format", "json"]);
    assert_eq!(code, 0);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.len(), 50);
    for (line, row) in csv.lines().skip(1).zip(&rows) {
        let fields: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields[0], row["n"].as_f64().unwrap());
        assert_eq!(fields[3], row["stirling_ratio"].as_f64().unwrap());
        assert_eq!(fields[4], row["em_residual"].as_f64().unwrap());
    }
}

#[test]
fn constant_methods() {
    for method in ["series", "sawtooth", "quadrature"] {
        let (code, out) = run(&["constant", "--method", method]);
        assert_eq!(code, 0, "{method}");
        assert!(out.contains("-0.08106146679"), "{method}: {out}");
    }
}
