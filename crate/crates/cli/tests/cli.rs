use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liedual"))
        .args(args)
        .env_remove("LIEDUAL_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    serde_json::from_str(&stdout(&o)).expect("valid json")
}

#[test]
fn dim_examples() {
    for (g, w, d) in [
        ("C4", "1,1,1,1", "42"),
        ("A1", "5", "6"),
        ("C2", "0,0", "1"),
    ] {
        let o = run(&["dim", g, w]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), d);
    }
}

#[test]
fn branch_with_oracle_matches() {
    let v = json(&["branch", "sp4_to_sp2sp2", "1", "--generic"]);
    assert_eq!(v["result"]["match"], Value::Bool(true));
    assert_eq!(
        v["result"]["decomposition"]["terms"]
            .as_array()
            .unwrap()
            .len(),
        3
    );
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "PASS"));
}

#[test]
fn branch_charge_block() {
    let o = run(&["branch", "su6_omega3", "1", "--charge", "1"]);
    assert!(stdout(&o).contains("-> V(1,0)xV0[1]"));
    let o = run(&["branch", "so5_to_so3so2", "0", "0"]);
    assert!(stdout(&o).contains("-> V0[0]"));
}

#[test]
fn branch_catalog_embedding() {
    let v = json(&["branch", "sp3_in_su6", "1,1,1,0,0,0"]);
    assert_eq!(v["result"]["source_dimension"], "20");
    let weights: Vec<&str> = v["result"]["decomposition"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["weight"].as_str().unwrap())
        .collect();
    assert_eq!(weights, vec!["(1,0,0)", "(1,1,1)"]);
}

#[test]
fn json_round_trips_byte_for_byte() {
    let o = run(&["branch", "su6_omega3", "2", "--generic", "--format", "json"]);
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, vec!["checks", "command", "inputs", "result"]);
}

#[test]
fn verify_tables_and_infchar() {
    let o = run(&["verify", "tables"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().last(), Some("PASS 36/36"));
    let o = run(&["verify", "infchar", "--max-n", "10"]);
    assert!(o.status.success());
    assert!(stdout(&o).trim_end().ends_with("PASS 66/66"));
}

#[test]
fn verify_rules_small() {
    let o = run(&["verify", "rules", "--max-level", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn verify_all_is_deterministic_across_thread_counts() {
    let a = run(&[
        "verify",
        "all",
        "--threads",
        "1",
        "--max-level",
        "3",
        "--format",
        "json",
    ]);
    let b = run(&[
        "verify",
        "all",
        "--threads",
        "4",
        "--max-level",
        "3",
        "--format",
        "json",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn broken_fixture_fails_with_report() {
    let dir = tempfile::tempdir().unwrap();
    let split = include_str!("../../../fixtures/split.tsv").replace("1,1,1,1\t16", "1,1,1,1\t15");
    std::fs::write(dir.path().join("split.tsv"), split).unwrap();
    std::fs::write(
        dir.path().join("quasisplit.tsv"),
        include_str!("../../../fixtures/quasisplit.tsv"),
    )
    .unwrap();
    let o = run(&[
        "verify",
        "tables",
        "--fixtures",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL split row 6"), "{out}");
    assert!(out.contains("FAIL 1/36"));
}

#[test]
fn missing_fixture_dir_is_an_input_error() {
    let o = run(&["verify", "tables", "--fixtures", "/nonexistent/fixtures"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn minrep_series() {
    let v = json(&[
        "minrep",
        "splitJ-splitE",
        "--type",
        "0,0,0,0",
        "--max-level",
        "5",
    ]);
    assert_eq!(v["result"]["values"], serde_json::json!([1, 2, 3, 4, 5, 6]));
    let v = json(&[
        "minrep",
        "splitJ-mixedE",
        "--type",
        "(2,0)x0",
        "--charge",
        "0",
    ]);
    assert_eq!(v["result"]["first_level"], 2);
    assert_eq!(v["result"]["tag"], "epsilon");
    let v = json(&["minrep", "hermJ-mixedE", "--type", "(0,0)x4"]);
    assert_eq!(v["result"]["first_level"], 1);
    assert_eq!(v["result"]["tag"], "epsilon");
    let v = json(&["minrep", "hermJ-mixedE", "--type", "(1,1)x2"]);
    assert_eq!(v["result"]["tag"], Value::Null);
}

#[test]
fn minrep_levels_tsv() {
    let o = run(&["minrep", "split-E6", "--max-level", "1", "--format", "tsv"]);
    let out = stdout(&o);
    assert!(out.contains("1\t(1,1,1,1)\t1\t42\t\t-1"), "{out}");
}

#[test]
fn exit_codes() {
    let o = run(&[
        "branch",
        "sp4_to_sp2sp2",
        "2",
        "--generic",
        "--budget",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(4));
    let o = Command::new(env!("CARGO_BIN_EXE_liedual"))
        .args(["branch", "sp2xsp2_in_sp4", "2,2,2,2"])
        .env("LIEDUAL_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(run(&["dim", "C2", "0,1"]).status.code(), Some(2));
    assert_eq!(run(&["dim", "G2", "1,0"]).status.code(), Some(2));
    assert_eq!(run(&["branch", "nope", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&[
            "minrep",
            "splitJ-splitE",
            "--type",
            "0,0,0,0",
            "--charge",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "bogus"]).status.code(), Some(2));
}
