use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_keisler-lab"))
        .args(args)
        .output()
        .unwrap()
}

fn order_report(dir: &Path) -> String {
    let out = dir.join("order.json");
    let status = run(&[
        "order",
        "--ambient",
        "gen:30:2:3:seed=4",
        "--q",
        "3",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(status.status.code(), Some(0));
    out.to_str().unwrap().to_string()
}

#[test]
fn verify_accepts_a_fresh_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = order_report(dir.path());
    let out = run(&["verify", "--report", &report]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn verify_rejects_a_tampered_count() {
    let dir = tempfile::tempdir().unwrap();
    let report = order_report(dir.path());
    let mut json: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    json["certified"][1]["lhs"] = serde_json::json!({"num": "5", "den": "1", "decimal": "5"});
    std::fs::write(&report, json.to_string()).unwrap();
    assert_eq!(run(&["verify", "--report", &report]).status.code(), Some(2));
}

#[test]
fn verify_rejects_a_different_input() {
    let dir = tempfile::tempdir().unwrap();
    let report = order_report(dir.path());
    let out = run(&["verify", "--report", &report, "--input", "ambient=gen:30:2:3:seed=5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("digest"));
}

#[test]
fn verify_rejects_garbage() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.json");
    std::fs::write(&path, "{\"theorem\": \"order\"}").unwrap();
    assert_eq!(
        run(&["verify", "--report", path.to_str().unwrap()]).status.code(),
        Some(1)
    );
}

#[test]
fn failed_precondition_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fam.json");
    let status = run(&[
        "fam",
        "--phi",
        "E(x1,y1)",
        "--epsilon",
        "1/100",
        "--graph",
        "circulant:5:1",
        "--ambient",
        "gen:20:2:3:seed=1",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(status.status.code(), Some(2));
    assert!(!out.exists());
}

#[test]
fn bad_usage_exits_one() {
    assert_eq!(run(&["order", "--ambient", "nonsense:1"]).status.code(), Some(1));
    assert_eq!(
        run(&[
            "fam",
            "--phi",
            "E(x1,",
            "--epsilon",
            "1/2",
            "--graph",
            "circulant:5:1",
            "--ambient",
            "gen:20:2:3:seed=1"
        ])
        .status
        .code(),
        Some(1)
    );
}

#[test]
fn gen_writes_a_structure_file() {
    let out = run(&["gen", "gen:12:2:3:seed=7"]);
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(json.is_object());
}
