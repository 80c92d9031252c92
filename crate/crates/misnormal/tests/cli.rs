//! End-to-end tests of the `misnormal` binary: exit codes, report shapes,
//! file inputs, and worker-count determinism.

use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_misnormal"))
        .args(args)
        .env_remove("MISNORMAL_BUDGET_SECS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn alpha_reports_census() {
    let out = run(&["alpha", "cycle:5"]);
    assert_eq!(out.status.code(), Some(0));
    let obj: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(obj["alpha"], 2);
    assert_eq!(obj["ratio"], "2/5");
    assert_eq!(obj["num_mis"], 5);
    assert_eq!(obj["r"], 2);
}

#[test]
fn alpha_complete_graph() {
    let out = run(&["alpha", "complete:4"]);
    let obj: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(obj["alpha"], 1);
    assert_eq!(obj["ratio"], "1/4");
    assert_eq!(obj["num_mis"], 4);
    assert_eq!(obj["r"], 1);
}

#[test]
fn check_normal_exit_codes() {
    assert_eq!(run(&["check", "normal", "cycle:5", "cycle:5"]).status.code(), Some(0));
    let neg = run(&["check", "normal", "copies:2xcomplete:3", "complete:3"]);
    assert_eq!(neg.status.code(), Some(1));
    let obj: serde_json::Value = serde_json::from_str(stdout(&neg).trim()).unwrap();
    assert_eq!(obj["verdict"], "not_normal");
    assert!(obj["witnesses"]["mixed_witness"].is_array());
}

#[test]
fn check_primitive_exit_codes() {
    assert_eq!(run(&["check", "primitive", "cycle:5"]).status.code(), Some(0));
    let neg = run(&["check", "primitive", "copies:2xcomplete:3"]);
    assert_eq!(neg.status.code(), Some(1));
    let obj: serde_json::Value = serde_json::from_str(stdout(&neg).trim()).unwrap();
    assert_eq!(obj["witnesses"]["imprimitive_witness"], serde_json::json!([0]));
}

#[test]
fn check_theorem_power() {
    let out = run(&["check", "theorem:power", "complete:3", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let obj: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(obj["verdict"], "verified");
}

#[test]
fn check_theorem_partition() {
    let out = run(&["check", "theorem:partition", "copies:2xcomplete:3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(run(&["alpha", "cycle:x"]).status.code(), Some(2));
    assert_eq!(run(&["alpha", "@/nonexistent/file.g6"]).status.code(), Some(2));
    assert_eq!(run(&["check", "bogus-kind", "cycle:5"]).status.code(), Some(2));
    assert_eq!(run(&["check", "normal", "cycle:5"]).status.code(), Some(2)); // arity
    // clap usage errors also use exit code 2
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3() {
    let out = run(&["--budget-secs", "0", "alpha", "kneser:5,2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn graph6_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("petersen.g6");
    fs::write(&path, "I@Q@YiWw?\n").unwrap();
    let out = run(&["alpha", &format!("@{}", path.display())]);
    assert_eq!(out.status.code(), Some(0));
    let obj: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(obj["alpha"], 4);
}

#[test]
fn out_flag_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["--out", path.to_str().unwrap(), "check", "eq1", "complete:3", "complete:3"]);
    assert_eq!(out.status.code(), Some(0));
    let written = fs::read_to_string(&path).unwrap();
    let obj: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert_eq!(obj["verdict"], "verified");
}

#[test]
fn product_command() {
    let out = run(&["product", "complete:3", "complete:3"]);
    assert_eq!(out.status.code(), Some(0));
    let obj: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(obj["n"], 9);
    assert_eq!(obj["edges"], 18);
    assert_eq!(obj["factor_sizes"], serde_json::json!([3, 3]));
}

#[test]
fn info_command() {
    let out = run(&["info", "kneser:5,2"]);
    assert_eq!(out.status.code(), Some(0));
    let obj: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(obj["n"], 10);
    assert_eq!(obj["aut_order"], "120");
    assert_eq!(obj["vertex_transitive"], true);
}

#[test]
fn corpus_workers_deterministic() {
    let one = run(&["corpus", "8", "counting", "eq1-pairs", "--workers", "1"]);
    let four = run(&["corpus", "8", "counting", "eq1-pairs", "--workers", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(four.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&four), "corpus output must not depend on worker count");
}

#[test]
fn table_format_renders() {
    let out = run(&["--format", "table", "check", "normal", "complete:3", "complete:3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("verdict   : normal"));
}
