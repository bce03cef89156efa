use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latticehom")).args(args).output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn boolean_scan_is_sharp_at_five() {
    let o = run(&["stability-scan", "--family", "boolean", "--S", "2,3", "--n", "4..10"]);
    assert!(o.status.success());
    let r = &json(&o)["report"];
    assert_eq!(r["stable_at"], 5);
    assert_eq!(r["sharp"], true);
}

#[test]
fn betti_equals_basis_count() {
    let o = run(&["betti", "--family", "partition", "--n", "4", "--S", "2"]);
    assert!(o.status.success());
    let rows = json(&o);
    assert_eq!(rows[0]["betti"], 6);
    let b = json(&run(&["basis", "--family", "partition", "--n", "4", "--S", "2"]));
    assert_eq!(b["elements"].as_array().unwrap().len(), 6);
}

#[test]
fn empty_rank_set_is_trivial() {
    let b = json(&run(&["basis", "--family", "partition", "--n", "4", "--S", ""]));
    assert_eq!(b["size"], 1);
    assert_eq!(b["elements"][0]["chain_terms"][0]["chain"].as_array().unwrap().len(), 0);
    assert_eq!(b["elements"][0]["chain_terms"][0]["coeff"], "1");
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let a = run(&["decompose", "--family", "partition", "--S", "1,2", "--n", "3..7", "--threads", "1"]);
    let b = run(&["decompose", "--family", "partition", "--S", "1,2", "--n", "3..7", "--threads", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn guard_violation_is_a_json_error() {
    let o = run(&["basis", "--family", "boolean", "--n", "6", "--S", "2", "--element-cap", "10"]);
    assert!(!o.status.success());
    let e: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(e["error"], "guard");
}

#[test]
fn lowered_guards_make_verify_all_inconclusive() {
    let o = run(&["verify-all", "--criteria", "1", "--element-cap", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)[0]["status"], "inconclusive");
}

#[test]
fn unknown_command_is_a_usage_error() {
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
}

#[test]
fn csv_decomposition() {
    let o = run(&["decompose", "--family", "boolean", "--S", "2", "--n", "4", "--format", "csv"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text, "n,lambda,mult\n4,\"2,2\",1\n4,\"3,1\",1\n");
}
