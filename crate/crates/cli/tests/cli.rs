//! End-to-end tests of the binary: the documented surfaces, the exit-code
//! contract, and output determinism.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ehrmagic"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).expect("valid json")
}

#[test]
fn expand_binom_dilated_by_two() {
    let out = run(&["expand", "--poly", "binom(x+2,2)", "--k", "2", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["result"]["magic_positive"], serde_json::json!(true));
    let coeffs = v["result"]["coefficients"].as_array().unwrap();
    let nums: Vec<&str> = coeffs.iter().map(|c| c["num"].as_str().unwrap()).collect();
    assert_eq!(nums, ["1", "1", "0"]);
    assert!(coeffs.iter().all(|c| c["den"] == "1"));
}

#[test]
fn expand_cross_d3_not_positive_at_one() {
    let out = run(&["expand", "--family", "cross", "--d", "3", "--k", "1", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["result"]["magic_positive"], serde_json::json!(false));
}

#[test]
fn expand_degree_zero() {
    let out = run(&["expand", "--poly", "1", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["result"]["d"], serde_json::json!(0));
    assert_eq!(v["result"]["magic_positive"], serde_json::json!(true));
    assert_eq!(v["result"]["coefficients"].as_array().unwrap().len(), 1);
}

#[test]
fn mindex_golden_values() {
    for (args, expect) in [
        (vec!["mindex", "--family", "simplex", "--d", "7"], "7"),
        (vec!["mindex", "--family", "reflexive-simplex", "--d", "5"], "20"),
        (vec!["mindex", "--family", "multipartite", "--q", "1,2,5"], "5"),
    ] {
        let mut full = args.clone();
        full.extend(["--format", "json"]);
        let out = run(&full);
        assert!(out.status.success(), "{args:?}");
        let v = json(&out);
        assert_eq!(v["result"]["m_index"], serde_json::json!(expect), "{args:?}");
        assert_eq!(v["result"]["monotone_search"], serde_json::json!(true));
    }
}

#[test]
fn cross_polytope_table_matches_reference_values() {
    let out = run(&["table", "--family", "cross", "--d", "1..16", "--format", "csv"]);
    assert!(out.status.success());
    let got: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect();
    let expect = ["1", "1", "2", "4", "6", "10", "13", "18", "23", "29", "35", "42", "50", "59", "68", "78"];
    assert_eq!(got, expect);
}

#[test]
fn reflexive_simplex_table_matches_reference_values() {
    let out = run(&["table", "--family", "reflexive-simplex", "--d", "1..16", "--format", "csv"]);
    assert!(out.status.success());
    let got: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect();
    let expect = [
        "1", "2", "4", "10", "20", "34", "55", "83", "119", "163", "218", "284", "361", "452",
        "557", "677",
    ];
    assert_eq!(got, expect);
}

#[test]
fn multipartite_table_defaults_to_reference_types() {
    let out = run(&["table", "--family", "multipartite", "--format", "csv"]);
    assert!(out.status.success());
    let got: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().to_string())
        .collect();
    assert_eq!(got, ["2", "2", "4", "3", "4", "5", "5", "5"]);
}

#[test]
fn hstar_of_spiked_simplex() {
    let out = run(&["hstar", "--family", "spiked", "--q", "3", "--d", "4", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    let nums: Vec<&str> = v["result"]["hstar"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["num"].as_str().unwrap())
        .collect();
    assert_eq!(nums, ["1", "3", "3", "3", "3"]);
    assert_eq!(v["warnings"].as_array().unwrap().len(), 0);
}

#[test]
fn cl_certificate_for_cross_d5() {
    let out = run(&["cl", "--family", "cross", "--d", "5", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["result"]["is_cl"], serde_json::json!(true));
    assert_eq!(v["result"]["odd_degree_half_root"], serde_json::json!(true));
    let bound: i64 = v["result"]["mindex_bound"].as_str().unwrap().parse().unwrap();
    assert!(bound >= 6, "CL bound {bound} must dominate the m-index 6");
}

#[test]
fn realrooted_checks_numerator() {
    let out = run(&["realrooted", "--family", "cross", "--d", "4", "--numerator", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["result"]["real_rooted"], serde_json::json!(true));
    let out = run(&["realrooted", "--poly", "x^2+1", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["result"]["real_rooted"], serde_json::json!(false));
}

#[test]
fn verify_single_tuple_and_sweep() {
    let out = run(&[
        "verify", "--family", "hypersimplex", "--k", "2", "--n", "4", "--dilation", "1",
        "--points", "2", "--format", "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["result"]["all_pass"], serde_json::json!(true));
    assert_eq!(v["result"]["tuples"][0]["formula"], serde_json::json!("19"));
    assert_eq!(v["result"]["tuples"][0]["enumerated"], serde_json::json!("19"));

    let out = run(&["verify", "--sweep", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["result"]["all_pass"], serde_json::json!(true));
    assert!(v["result"]["tuples"].as_array().unwrap().len() > 200);
}

#[test]
fn conjecture_q56_matches_on_reference_types() {
    let out = run(&["conjecture", "--which", "q5.6", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["result"]["matches"], serde_json::json!(8));
    assert_eq!(v["result"]["mismatches"], serde_json::json!(0));
}

#[test]
fn exit_code_contract() {
    // 2: parse/usage errors
    assert_eq!(run(&["expand", "--poly", "x +"]).status.code(), Some(2));
    assert_eq!(run(&["mindex", "--family", "nonesuch", "--d", "3"]).status.code(), Some(2));
    assert_eq!(run(&["mindex"]).status.code(), Some(2));
    // 3: domain errors
    assert_eq!(run(&["expand", "--poly", "0"]).status.code(), Some(3));
    assert_eq!(
        run(&["mindex", "--family", "minimal-matroid", "--k", "3", "--n", "3"]).status.code(),
        Some(3)
    );
    // 1: verification failure
    let out = run(&[
        "verify", "--family", "cross", "--d", "2", "--points", "1", "--expect", "99",
    ]);
    assert_eq!(out.status.code(), Some(1));
    // 0: success
    assert_eq!(run(&["expand", "--poly", "x+1"]).status.code(), Some(0));
}

#[test]
fn scan_cap_env_is_honored() {
    let out = bin()
        .args(["mindex", "--poly", "x^2+1", "--format", "json"])
        .env("EHRHART_SCAN_CAP", "17")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v["result"]["m_index"], serde_json::Value::Null);
    assert_eq!(v["result"]["search_bound_used"], serde_json::json!("17"));
    assert!(!v["warnings"].as_array().unwrap().is_empty());

    let bad = bin()
        .args(["mindex", "--poly", "x+1"])
        .env("EHRHART_SCAN_CAP", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn json_and_csv_output_is_deterministic() {
    for format in ["json", "csv"] {
        let a = run(&["table", "--family", "cross", "--d", "1..8", "--format", format]);
        let b = run(&["table", "--family", "cross", "--d", "1..8", "--format", format]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{format} output must be byte-identical");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("ehrmagic-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let out = run(&[
        "table", "--family", "cross", "--d", "1..4", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("d,m-index\n"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn approx_flag_adds_marked_column() {
    let out = run(&["expand", "--poly", "binom(x+2,2)", "--approx"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("approx (decimal, inexact)"));
    assert!(text.contains("-0.500000"));
    let plain = run(&["expand", "--poly", "binom(x+2,2)"]);
    assert!(!stdout(&plain).contains("approx"));
}
