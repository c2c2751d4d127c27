use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_current-lie")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

#[test]
fn verify_h2_sl2_tpoly3() {
    let (code, v) = json(&["verify", "h2", "--L", "sl2", "--A", "tpoly:3"]);
    assert_eq!(code, 0);
    assert_eq!(v["theorem"], "h2");
    assert_eq!(v["span_in_Z"], true);
    assert_eq!(v["Z_in_span"], true);
    assert_eq!(v["dims"]["Z2"], v["dims"]["span"]);
}

#[test]
fn larsson_sl3_table() {
    let (code, v) = json(&["larsson", "--g", "sl3", "--max-degree", "6"]);
    assert_eq!(code, 0);
    let h: Vec<u64> = (2..=6).map(|d| v["degrees"][d.to_string()]["H"].as_u64().unwrap()).collect();
    assert_eq!(h, vec![20, 0, 0, 0, 0]);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["quadratic_presentation"], true);
}

#[test]
fn larsson_rejects_non_semisimple() {
    assert_eq!(run(&["larsson", "--g", "heis3"]).status.code(), Some(2));
}

#[test]
fn cohomology_sl2_trivial() {
    let (code, v) = json(&["cohomology", "--L", "sl2", "--module", "trivial", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["H"], 0);
    let (_, v3) = json(&["cohomology", "--L", "sl2", "--n", "3"]);
    assert_eq!(v3["H"], 1);
}

#[test]
fn text_output_is_aligned() {
    let out = run(&["cohomology", "--L", "sl2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let cols: Vec<usize> = text.lines().map(|l| l.rfind("  ").unwrap()).collect();
    assert!(cols.windows(2).all(|w| w[0] == w[1]), "{text}");
}

#[test]
fn failed_verification_exits_one_with_witness() {
    let (code, v) = json(&["verify", "forms", "--L", "heis3", "--A", "tpoly:3"]);
    assert_eq!(code, 1);
    assert!(v["witness"]["vector"].as_array().is_some_and(|a| !a.is_empty()));
}

#[test]
fn der_report_is_deterministic() {
    let a = run(&["verify", "der", "--L", "sl2", "--A", "tpoly:3", "--seed", "5", "--json"]);
    let b = run(&["verify", "der", "--L", "sl2", "--A", "tpoly:3", "--seed", "5", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["equal"], true);
    assert_eq!(v["der_dim"], v["span_dim"]);
}

#[test]
fn der_without_residue_form_is_an_error() {
    assert_eq!(run(&["verify", "der", "--L", "sl2", "--A", "zero:1"]).status.code(), Some(2));
}

#[test]
fn heisenberg_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let first = run(&["algebra", "show", "heis3", "--json"]);
    let path = dir.path().join("heis.json");
    fs::write(&path, &first.stdout).unwrap();
    let second = run(&["algebra", "show", path.to_str().unwrap(), "--json"]);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let (code, v) = json(&["algebra", "validate", path.to_str().unwrap()]);
    assert_eq!((code, v["valid"].clone(), v["dim"].clone()), (0, Value::Bool(true), Value::from(3)));
}

#[test]
fn anticommutativity_error_names_pair() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(
        &path,
        r#"{"kind":"lie","dim":2,"basis":["x","y"],"table":[
            {"i":1,"j":2,"terms":[{"k":1,"c":"1"}]},
            {"i":2,"j":1,"terms":[{"k":1,"c":"1"}]}]}"#,
    )
    .unwrap();
    let (code, v) = json(&["algebra", "validate", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["axiom"], "anticommutativity");
    assert_eq!(v["witness"], serde_json::json!([1, 2]));
}

#[test]
fn associativity_error_names_triple() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(
        &path,
        r#"{"kind":"assoc","dim":2,"basis":["a","b"],"table":[
            {"i":1,"j":1,"terms":[{"k":2,"c":"1"}]},
            {"i":1,"j":2,"terms":[{"k":1,"c":"1"}]},
            {"i":2,"j":1,"terms":[{"k":1,"c":"1"}]}]}"#,
    )
    .unwrap();
    let (code, v) = json(&["algebra", "validate", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["axiom"], "associativity");
    assert_eq!(v["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "h2", "--L", "nonsense", "--A", "tpoly:3"]).status.code(), Some(2));
    assert_eq!(run(&["forms", "--L", "sl2", "--cond", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-verb"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "h2", "--L", "sl2"]).status.code(), Some(2));
}

#[test]
fn forms_and_derivation_counts() {
    let (_, v) = json(&["forms", "--L", "sl2", "--cond", "jacobi_sum_zero", "--sym", "symmetric"]);
    assert_eq!(v["dim"], 5);
    assert_eq!(v["basis"].as_array().unwrap().len(), 5);
    let (_, v) = json(&["antiderivations", "--L", "sl3"]);
    assert_eq!(v["antiderivations"], 0);
    let (_, v) = json(&["derivations", "--L", "sl2", "--A", "tpoly:3"]);
    assert_eq!((v["derivations"].as_u64(), v["inner"].as_u64()), (Some(18), Some(3)));
}

#[test]
fn sequence_and_hc1() {
    let (code, v) = json(&["sequence", "--L", "sl2"]);
    assert_eq!(code, 0);
    assert_eq!(v["dims"], serde_json::json!({"H2": 0, "H1": 0, "B": 1, "H3": 1}));
    assert_eq!(v["w_injective"], true);
    let (code, v) = json(&["sequence", "--L", "sl2", "--A", "tpoly:3", "--form", "product"]);
    assert_eq!(code, 0);
    assert_eq!(v["module"], "adjoint");
    let (code, v) = json(&["hc1"]);
    assert_eq!((code, v["hc1_vanishes"].clone()), (0, Value::Bool(true)));
}
