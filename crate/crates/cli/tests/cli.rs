use std::process::Command;

use serde_json::Value;

fn okubo(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_okubo"))
        .args(args)
        .output()
        .expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, json)
}

#[test]
fn verify_passes_over_several_fields() {
    for field in ["gf(3)", "q(w)", "gf(4)"] {
        let (code, report) = okubo(&["verify", "--field", field, "--trials", "50"]);
        assert_eq!(code, 0, "{field}");
        assert_eq!(report["passed"], true);
        assert_eq!(report["command"], "verify");
    }
}

#[test]
fn derivations_over_gf3() {
    let (code, report) = okubo(&["derivations", "--field", "gf(3)"]);
    assert_eq!(code, 0);
    let r = &report["results"];
    assert_eq!(r["dim_der"], 10);
    assert_eq!(r["dim_inner"], 8);
    assert_eq!(r["dim_derived"], 8);
    assert_eq!(r["killing_rank"], 0);
    assert_eq!(r["center_dim"], 0);
    assert_eq!(r["simple"], true);
    assert_eq!(r["grading_dims"]["(0,0)"], 2);
}

#[test]
fn census_over_gf3() {
    let (code, report) = okubo(&["census", "--field", "gf(3)"]);
    assert_eq!(code, 0);
    let r = &report["results"];
    assert_eq!(r["by_type"]["quaternionic"], 1);
    assert_eq!(r["witness_is_e"], true);
    assert_eq!(r["anomalies"].as_array().map(Vec::len), Some(0));
}

#[test]
fn results_are_reproducible() {
    let args = ["twist", "--field", "gf(3)", "--seed", "7", "--trials", "30"];
    let (_, a) = okubo(&args);
    let (_, b) = okubo(&args);
    assert_eq!(a["results"], b["results"]);
    assert_eq!(a["seed"], 7);
}

#[test]
fn export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("okubo.json");
    let report_path = dir.path().join("report.json");
    let (code, report) = okubo(&[
        "export",
        "--field",
        "gf(3)",
        path.to_str().unwrap(),
        "--json",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["results"]["round_trip"], true);
    let text = std::fs::read_to_string(&path).unwrap();
    let alg = okubo_core::StructureConstantAlgebra::from_json(&text).unwrap();
    assert_eq!(
        alg,
        okubo_core::okubo::build_split_okubo(&okubo_core::Field::finite(3).unwrap())
    );
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(saved["results"], report["results"]);
}

#[test]
fn twist_with_explicit_idempotent() {
    let (code, report) = okubo(&[
        "twist",
        "--field",
        "gf(7)",
        "--idempotent",
        "0,0,0,0,1,1,0,0",
        "--trials",
        "20",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["results"]["tau"]["fixed_dim"], 4);
}

#[test]
fn errors_exit_with_code_two() {
    assert_eq!(okubo(&["verify", "--field", "gf(6)"]).0, 2);
    assert_eq!(okubo(&["models", "--field", "gf(5)"]).0, 2);
    assert_eq!(
        okubo(&["twist", "--field", "gf(3)", "--idempotent", "1,0,0,0,0,0,0,0"]).0,
        2
    );
}
