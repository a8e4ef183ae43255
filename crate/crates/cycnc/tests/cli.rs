use std::process::Command;

use cycnc::cli::run;
use cycnc::modules::Representation;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, Value) {
    let (code, out) = run(std::iter::once("cycnc").chain(args.iter().copied()));
    let json = serde_json::from_str(&out).unwrap_or_else(|e| panic!("not JSON ({e}): {out}"));
    (code, json)
}

#[test]
fn reports_carry_the_schema() {
    let (code, v) = call(&["algebra", "build", "--n", "3", "--r", "1", "--x", "1", "--verify", "iso"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "cycnc.report/1");
    assert_eq!(v["command"], "algebra build");
    assert_eq!(v["parameters"]["n"], "3");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn failing_checks_exit_one() {
    let (code, v) = call(&["pbw", "--family", "kummerwitt", "--n", "4", "--r", "1"]);
    assert_eq!(code, 1);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["status"] == "fail"));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(run(["cycnc", "no-such-command"]).0, 2);
    assert_eq!(run(["cycnc", "pbw", "--n", "three"]).0, 2);
    let (code, out) = run(["cycnc", "module", "torsionfree", "--n", "3", "--r", "1", "--x", "1", "--a", "1", "--b", "1", "--c", "0"]);
    assert_eq!(code, 2);
    assert!(out.starts_with("error:"), "{out}");
    let (code, out) = run(["cycnc", "module", "torsion", "--n", "3", "--d", "2", "--x", "1", "--a", "z+"]);
    assert_eq!(code, 2, "{out}");
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(["cycnc", "--help"]).0, 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["homlie", "--family", "kummerwitt", "--n", "4", "--r", "1", "--x", "1"];
    let first = run(std::iter::once("cycnc").chain(args));
    let second = run(std::iter::once("cycnc").chain(args));
    assert_eq!(first, second);
}

#[test]
fn module_output_feeds_ext() {
    let (code, v) = call(&["module", "torsionfree", "--n", "3", "--r", "1", "--x", "1", "--a", "1", "--b", "2", "--c", "3"]);
    assert_eq!(code, 0);
    let rep_text = v["result"]["representation"].to_string();
    let rep = Representation::from_json(&rep_text).unwrap();
    assert_eq!(rep.dim(), 3);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    std::fs::write(&path, &rep_text).unwrap();
    let p = path.to_str().unwrap();
    let (code, v) = call(&["ext", "--m", p, "--n", p]);
    assert_eq!(code, 0, "{v}");
    assert!(v["result"]["dim"].as_u64().is_some());
    assert!(v["result"]["inner_dim"].as_u64().is_some());
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cycnc");
    let ok = Command::new(bin).args(["centre", "--n", "3", "--r", "1", "--x", "1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let parsed: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(parsed["schema"], "cycnc.report/1");
    let bad = Command::new(bin).arg("bogus").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
