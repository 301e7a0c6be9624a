use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bkcolor")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

#[test]
fn oracle_on_m8() {
    let (v, code) = json(&["oracle", "named:M8"]);
    assert_eq!(code, 0);
    assert_eq!(v["chi"], 8);
    assert_eq!(v["omega"], 6);
    assert_eq!(v["alpha"], 2);
    assert_eq!(v["max_degree"], 8);
    assert_eq!(v["average_degree"], "8");
}

#[test]
fn formats_agree() {
    let g6 = json(&["oracle", "named:petersen"]).0["graph"].as_str().unwrap().to_string();
    let dir = std::env::temp_dir().join(format!("bkcolor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let dimacs = dir.join("p.col");
    std::fs::write(&dimacs, run(&["--format", "dimacs", "corpus", "--corpus", "named", "--names", "petersen"]).stdout).unwrap();
    let (v, _) = json(&["--format", "dimacs", "oracle", dimacs.to_str().unwrap()]);
    assert_eq!(v["graph"], g6.as_str());
    let (v, _) = json(&["--format", "edges", "oracle", "3\n0 1\n1 2\n"]);
    assert_eq!(v["size"], 2);
    assert_eq!(v["chi"], 2);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn bad_input_is_an_error() {
    let out = run(&["oracle", "A"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("graph6"));
}

#[test]
fn choosability_witness_format() {
    // complete graphs are never d_1-choosable
    let (v, _) = json(&["choosable", "named:K4", "--k", "1"]);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["lists"].as_array().unwrap().len(), 4);
    let (v, _) = json(&["choosable", "named:C4", "--k", "0"]);
    assert_eq!(v["verdict"], true);
    assert!(v["lists"].is_null());
    let (v, _) = json(&["choosable", "named:C4", "--demand", "2,2,2,2"]);
    assert_eq!(v["verdict"], true);
    let (v, _) = json(&["choosable", "named:C5", "--demand", "2,2,2,2,2"]);
    assert_eq!(v["verdict"], false);
}

#[test]
fn transversal_and_certificate() {
    let (v, _) = json(&["transversal", "named:C6", "--partition", "0 1|2 3|4 5"]);
    assert_eq!(v["transversal"], serde_json::json!([0, 2, 4]));
    let (v, _) = json(&["transversal", "named:K2", "--partition", "0|1"]);
    assert_eq!(v["certificate"]["verified"], true);
}

#[test]
fn strong_color_traces_repairs() {
    let out = run(&["--trace", "strong-color", "named:C6", "--partition", "0 3|1 4|2 5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let first: Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(first["stage"], "repair");
    assert!(text.contains("verified: true"));
}

#[test]
fn color_reports_path() {
    let (v, code) = json(&["color", "named:M8"]);
    assert_eq!(code, 0);
    assert_eq!(v["colors"], 7);
    assert!(v["coloring"].is_null());
    assert_eq!(v["path"], "fallback");
}

#[test]
fn verify_reports_and_exit_codes() {
    let (v, code) = json(&["--max-n", "5", "verify", "alpha-bound"]);
    assert_eq!(code, 0);
    assert_eq!(v["theorem"], "alpha-bound");
    assert_eq!(v["counts"]["checked"], 1 + 2 + 4 + 11 + 34);
    assert!(v["alerts"].as_array().unwrap().is_empty());
    // the literal edge bound of the onesies lemma fails on K_5
    let (v, code) = json(&["verify", "onesies", "--corpus", "named", "--names", "K5"]);
    assert_eq!(code, 1);
    assert_eq!(v["alerts"][0]["graph6"], "D~{");
}

#[test]
fn reruns_are_identical() {
    let args = ["--json", "--seed", "3", "verify", "dense", "--corpus", "random", "--n", "9", "--count", "20", "--p", "0.7"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn corpus_counts() {
    let out = run(&["--max-n", "4", "corpus"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1 + 2 + 4 + 11);
    let out = run(&["--max-n", "4", "corpus", "--connected"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1 + 1 + 2 + 6);
}
