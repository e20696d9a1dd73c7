use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symcomvar"))
        .env_remove("SYMCOMVAR_SEED")
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn temp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("symcomvar-cli-{}-{name}", std::process::id()))
}

fn fresh_certificate(name: &str) -> (PathBuf, Value) {
    let path = temp(name);
    let out = run(&["certificate", "gl", "--n", "1", "--m", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let cert = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    (path, cert)
}

#[test]
fn pair_info_reports_dimensions() {
    let out = run(&["pair", "info", "--family", "so", "--n", "2", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["dim_g"].as_u64(), v["dim_g0"].as_u64(), v["dim_g1"].as_u64()), (Some(10), Some(4), Some(6)));
    assert_eq!((v["rank"].as_u64(), v["expected_commvar_dim"].as_u64()), (Some(2), Some(8)));
    assert_eq!(v["config"]["seed"].as_u64(), Some(0x5EED));
}

#[test]
fn seed_flag_and_env_are_echoed() {
    let out = run(&["--seed", "0x10", "c0dim", "--family", "gl", "--n", "1", "--m", "1"]);
    assert_eq!(json(&out)["config"]["seed"].as_u64(), Some(16));
    let out = Command::new(env!("CARGO_BIN_EXE_symcomvar"))
        .env("SYMCOMVAR_SEED", "7")
        .args(["c0dim", "--family", "gl", "--n", "1", "--m", "1"])
        .output()
        .unwrap();
    assert_eq!(json(&out)["config"]["seed"].as_u64(), Some(7));
}

#[test]
fn output_is_deterministic() {
    let args = ["certificate", "so-gl", "--n", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn fresh_certificate_verifies() {
    let (path, _) = fresh_certificate("fresh.json");
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn zeroed_witness_fails_verification() {
    let (path, mut cert) = fresh_certificate("zeroed.json");
    for part in ["x", "y"] {
        for row in cert["witness"][part]["entries"].as_array_mut().unwrap() {
            for entry in row.as_array_mut().unwrap() {
                *entry = Value::from("0/1");
            }
        }
    }
    std::fs::write(&path, cert.to_string()).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["passed"], false);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn truncated_json_is_malformed() {
    let (path, cert) = fresh_certificate("truncated.json");
    let text = cert.to_string();
    std::fs::write(&path, &text[..text.len() / 2]).unwrap();
    assert_eq!(run(&["verify", path.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_file(path).unwrap();
    assert_eq!(run(&["verify", "/nonexistent/cert.json"]).status.code(), Some(2));
}

#[test]
fn spadesuit_report_verifies_through_its_certificate() {
    let path = temp("report.json");
    let out = run(&["spadesuit", "gl", "--n", "2", "--m", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "fails_certificate");
    assert_eq!(run(&["verify", path.to_str().unwrap()]).status.code(), Some(0));
    std::fs::remove_file(path).unwrap();
    let out = run(&["spadesuit", "gl", "--n", "2", "--m", "2"]);
    assert_eq!(json(&out)["status"], "holds_evidence");
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(run(&["pair", "info", "--family", "so", "--n", "9", "--m", "9"]).status.code(), Some(2));
    assert_eq!(run(&["certificate", "gl", "--n", "0", "--m", "2"]).status.code(), Some(2));
    assert_eq!(run(&["pair", "info", "--family", "gl", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["--samples", "0", "c0dim", "--family", "so", "--n", "2", "--m", "2"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn nilpotent_tables() {
    let out = run(&["nilpotent", "enumerate", "--n", "2", "--m", "1", "--verify-ev"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r["valid"] == true && r["triple_verified"] == true));
    assert_eq!(rows[0]["curve"]["passed"], true);
    let out = run(&["nilpotent", "enumerate", "--n", "0", "--m", "0"]);
    assert_eq!(json(&out)["rows"].as_array().unwrap().len(), 0);
    let out = run(&["nilpotent", "enumerate", "--n", "1", "--m", "1"]);
    assert_eq!(json(&out)["rows"].as_array().unwrap().len(), 1);
}
