use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn slackmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slackmat"))
        .args(args)
        .env_remove("SLACKMAT_TIMEOUT")
        .env_remove("SLACKMAT_MAX_PAIRS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let out = slackmat(&a);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

#[test]
fn hyperplanes_of_m4() {
    let out = slackmat(&["hyperplanes", "m4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert!(text.starts_with("H1 = {1, 2, 3}\n"));
    let (_, v) = json(&["hyperplanes", "m4.json"]);
    assert_eq!(v["hyperplanes"].as_array().unwrap().len(), 7);
    assert_eq!(v["rank"], 3);
}

#[test]
fn inline_json_input() {
    let (code, v) = json(&["hyperplanes", r#"{"n": 4, "rank": 2}"#]);
    assert_eq!(code, 0);
    assert_eq!(v["hyperplanes"].as_array().unwrap().len(), 4);
}

#[test]
fn fano_over_q_is_certified_non_realizable() {
    let (code, v) = json(&["certify", "--field", "Q", "fano.json"]);
    assert_eq!(code, 1);
    assert_eq!(v["kind"], "non-realizable-monomial");
    assert_eq!(v["verification"], "verified");
    assert_eq!(v["field"], "Q");
}

#[test]
fn fano_over_gf2_is_witnessed() {
    let (code, v) = json(&["certify", "--field", "GF(2)", "--strategy", "scaled-unit,oracle", "fano"]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "realizable-witness");
    assert_eq!(v["payload"]["type"], "witness");
    assert_eq!(v["verification"], "verified");
}

#[test]
fn non_fano_is_unique_over_q() {
    let (code, v) = json(&["unique", "--field", "Q", "nonfano.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"], "unique");
    let rows = v["slack_matrix"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[0].as_array().unwrap().len(), 9);
}

#[test]
fn budget_exhaustion_exits_two() {
    let (code, v) = json(&["certify", "--strategy", "full-product", "--max-pairs", "5", "nonfano"]);
    assert_eq!(code, 2);
    assert_eq!(v["kind"], "unknown");
    let out = Command::new(env!("CARGO_BIN_EXE_slackmat"))
        .args(["certify", "--strategy", "scaled-unit", "nonfano"])
        .env("SLACKMAT_MAX_PAIRS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_exits_64() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "{{\"n\": 3, \"rank\": ").unwrap();
    let out = slackmat(&["hyperplanes", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad matroid JSON"));
    assert_eq!(slackmat(&["certify", "--field", "GF(4)", "fano"]).status.code(), Some(64));
    assert_eq!(slackmat(&["hyperplanes", "no-such-file.json"]).status.code(), Some(64));
    assert_eq!(slackmat(&["frobnicate"]).status.code(), Some(64));
    // not simple: a repeated point
    let out = slackmat(&["hyperplanes", r#"{"n": 3, "rank": 2, "nonbases": [[1, 2]]}"#]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn json_is_deterministic() {
    let strip = |mut v: Value| {
        for s in v["steps"].as_array_mut().unwrap() {
            s["wall_ms"] = Value::Null;
        }
        v
    };
    let args = ["certify", "--field", "GF(3)", "--strategy", "submatrices", "fano"];
    let (_, a) = json(&args);
    let (_, b) = json(&args);
    assert_eq!(strip(a), strip(b));
    let a = slackmat(&["slack-ideal", "--field", "GF(3)", "nonfano", "--json"]).stdout;
    let b = slackmat(&["slack-ideal", "--field", "GF(3)", "nonfano", "--json"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn oracle_exit_codes() {
    assert_eq!(slackmat(&["oracle", "--field", "GF(2)", "fano"]).status.code(), Some(0));
    let (code, v) = json(&["oracle", "--field", "GF(3)", "fano"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"], "exhausted");
    assert_eq!(slackmat(&["oracle", "--field", "Q", "fano"]).status.code(), Some(64));
}

#[test]
fn m4_slack_ideal_and_cycles() {
    let (code, v) = json(&["slack-ideal", "--no-scaled", "m4"]);
    assert_eq!(code, 0);
    assert_eq!(v["variables"].as_array().unwrap().len(), 24);
    assert_eq!(v["codimension"], 12);
    assert_eq!(v["degree"], 293);
    let (code, v) = json(&["cycle-ideal", "--cycles", "chordless", "--compare", "m4"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 72);
    assert_eq!(v["equals_slack_ideal"], true);
}

#[test]
fn final_poly_and_obstructions() {
    let (code, v) = json(&["final-poly", "--field", "GF(2)", "vamos"]);
    assert_eq!(code, 1);
    assert_eq!(v["found"], true);
    assert_eq!(v["certificate"]["columns"].as_array().unwrap().len(), 8);
    let (code, v) = json(&["obstructions", "--field", "Q", "m8"]);
    assert_eq!(code, 0);
    let polys = v["polynomials"].as_array().unwrap();
    assert!(polys.iter().any(|p| p["polynomial"] == "x_{8,12}^2 + x_{8,12} + 1" && p["roots"] == serde_json::json!([])));
}

#[test]
fn universal_projections_of_u23() {
    let (code, v) = json(&["universal", r#"{"n": 3, "rank": 2}"#]);
    assert_eq!(code, 0);
    assert!(v["plucker_side"]["generators"].is_array());
    assert!(v["slack_side"]["generators"].is_array());
}

#[test]
fn example_suite() {
    let out = slackmat(&["examples", "fano", "vamos"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 failed"));
    assert_eq!(slackmat(&["examples", "k4"]).status.code(), Some(64));
}
