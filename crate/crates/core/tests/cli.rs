use std::process::{Command, Output};

use graph_wep::family::builtin;

fn graph_wep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graph-wep")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gf_latex_for_the_path() {
    let out = graph_wep(&["gf", "--family", "path", "--format", "latex"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "\\frac{-2x y z^{2} + 2y^{2} z^{2} + 1}{x^{2} y z^{3} - x z - y^{3} z^{3} - y z + 1}\n"
    );
}

#[test]
fn ghz_sector_lengths() {
    let out = graph_wep(&["sld", "--family", "star", "-r", "3", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[1,0,3,4]\n");
}

#[test]
fn verify_cycle() {
    let out = graph_wep(&["verify", "--family", "cycle", "--max-qubits", "14"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "r,qubits,series,iteration,colouring,stabilizer,agree");
    assert_eq!(lines.len(), 16);
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));
    assert!(text.contains("\n4,4,1 0 2 8 5,"));
}

#[test]
fn exit_codes() {
    assert_eq!(graph_wep(&["gf", "--family", "nope"]).status.code(), Some(2));
    assert_eq!(graph_wep(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(graph_wep(&["gf"]).status.code(), Some(2));
    assert_eq!(graph_wep(&["sld", "--family", "star", "-r", "2", "--format", "latex"]).status.code(), Some(2));
    assert_eq!(graph_wep(&["fidelity", "--family", "star", "--lambda", "abc"]).status.code(), Some(2));
    assert_eq!(graph_wep(&["families"]).status.code(), Some(0));
}

#[test]
fn fidelity_report_schema() {
    let out = graph_wep(&["fidelity", "--family", "star", "-r", "12", "--lambda", "0.8", "--asymptotic"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["family", "r", "lambda", "F_exact", "F_approx", "z_star", "gap"]);
    assert_eq!(v["lambda"], "0.8");
    assert!((v["z_star"].as_f64().unwrap() - 10.0 / 9.0).abs() < 1e-15);
    assert!(v["F_exact"].as_str().unwrap().contains('/'));
}

#[test]
fn critical_lambda_report_schema() {
    let out = graph_wep(&["critical-lambda", "--family", "star", "-r", "4", "--asymptotic", "--jobs", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = v["lambda_c"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows[0]["value"].is_null());
    assert!((rows[1]["value"].as_f64().unwrap() - 3f64.powf(-0.25)).abs() < 1e-9);
    assert_eq!(v["lambda_c_approx"].as_f64(), Some(1.0));
}

#[test]
fn spec_file_matches_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("path.json");
    std::fs::write(&path, builtin("path").unwrap().to_json().to_string()).unwrap();
    let from_file = graph_wep(&["gf", "--spec", path.to_str().unwrap()]);
    let from_name = graph_wep(&["gf", "--family", "path"]);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, from_name.stdout);
}

#[test]
fn outputs_are_byte_stable() {
    let args = ["ce", "--family", "cycle", "-r", "12", "--asymptotic", "--format", "csv"];
    assert_eq!(graph_wep(&args).stdout, graph_wep(&args).stdout);
}

#[test]
fn figure_three_to_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = graph_wep(&["figure", "fig3", "-r", "20", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(dir.path().join("fig3.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "family,r,qubits,F_exact,F_approx,delta");
    assert_eq!(lines.len(), 1 + 2 * 21);
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 6 && l.contains("e")));
}

#[test]
fn figure_four_columns() {
    let out = graph_wep(&["figure", "fig4", "-r", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1 + 3 * 5);
    assert!(text.lines().skip(1).all(|l| l.split(',').count() == 5));
}
