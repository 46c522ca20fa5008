//! End-to-end runs of the binary: documented examples, exit codes and output contracts.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_momentum-atlas")).args(args).env_remove("MOMENTUM_ATLAS_BUDGET").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn error(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    assert!(out.stdout.is_empty());
    (out.status.code().unwrap(), serde_json::from_slice(&out.stderr).unwrap())
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn momentum_of_sp4_natural() {
    let v = json(&["momentum", "--system", "C2", "--weight", "1,0"]);
    assert_eq!(v["command"], "momentum");
    let verdict = &v["result"]["verdict"];
    assert_eq!(verdict["kind"], "OuterBound");
    let mut vertices: Vec<Vec<String>> = verdict["polytope"]["vertices"].as_array().unwrap().iter().map(strings).collect();
    vertices.sort();
    assert_eq!(vertices, vec![vec!["0", "0"], vec!["1", "0"]]);
}

#[test]
fn kirwan_on_sl2_adjoint() {
    let v = json(&["kirwan", "--system", "A1", "--weight", "2"]);
    let candidates = v["result"]["candidates"].as_array().unwrap();
    let xis: Vec<Vec<String>> = candidates.iter().map(|c| strings(&c["xi"])).collect();
    assert_eq!(xis, vec![vec!["2"], vec!["0"]]);
    assert!(candidates.iter().all(|c| c["verdict"] == "Critical"));
}

#[test]
fn qubit_wall_state() {
    let v = json(&["qubits", "--n", "3", "--xi", "1,0,0"]);
    let r = &v["result"];
    assert_eq!(r["N0"], 2);
    assert_eq!(r["verdict"], "Critical");
    assert!(r["state"]["momentum_residual"].as_f64().unwrap() <= 1e-9);
    assert!(r["state"]["torus_residual"].as_f64().unwrap() <= 1e-9);
    let idle_one = json(&["qubits", "--n", "3", "--xi", "1,1,0"]);
    assert_eq!(idle_one["result"]["verdict"], "NotCritical");
    assert!(idle_one["result"]["state"].is_null());
}

#[test]
fn catalog_lookup_by_group() {
    let v = json(&["catalog", "--group", "A4", "--weight", "0,1,0,0"]);
    assert_eq!(v["result"]["unstable"]["row"], "wedge2-odd");
    let tables = json(&["catalog"]);
    assert!(tables["result"]["unstable"].as_array().unwrap().len() >= 9);
}

#[test]
fn zero_witness_for_reducible_input() {
    let v = json(&["zero-witness", "--system", "A4", "--summand", "1,0,0,0", "--summand", "0,1,0,0"]);
    assert_eq!(v["result"]["search"]["witness"]["support"].as_array().unwrap().len(), 3);
    let none = json(&["zero-witness", "--system", "A4", "--summand", "0,0,0,1", "--summand", "0,1,0,0"]);
    assert!(none["result"]["search"]["witness"].is_null());
}

#[test]
fn every_report_embeds_the_scale() {
    let plain = json(&["weyl", "--system", "A1xA1", "--weight", "1,1"]);
    assert_eq!(strings(&plain["scale"]), vec!["1", "1"]);
    let scaled = json(&["weyl", "--system", "A1xA1", "--scale", "2,1/3", "--weight", "1,1"]);
    assert_eq!(strings(&scaled["scale"]), vec!["2", "1/3"]);
    assert_eq!(scaled["result"]["gram"][0][0], "4");
    assert_eq!(plain["result"]["orbit"], scaled["result"]["orbit"]);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["kirwan", "--system", "A2", "--weight", "1,1"][..],
        &["upsilon", "--system", "B3", "--weight", "1,0,1"][..],
        &["qubits", "--n", "4", "--xi", "1,1,0,0"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn plot_slice_as_csv() {
    let out = run(&["upsilon", "--system", "A2", "--weight", "1,1", "--plot", "1,2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "omega1,omega2");
    let mut rows: Vec<&str> = lines[1..].to_vec();
    rows.sort();
    assert_eq!(rows, vec!["0,0", "0,1", "1,0", "1,1"]);
}

#[test]
fn text_format() {
    let out = run(&["--format", "text", "partition", "--system", "C2", "--weight", "1,0"]);
    assert!(out.status.success());
    assert!(!String::from_utf8(out.stdout).unwrap().trim_start().starts_with('{'));
}

#[test]
fn input_errors_exit_one() {
    let (code, e) = error(&["momentum", "--system", "A2", "--weight", "1"]);
    assert_eq!((code, e["error"].as_str().unwrap()), (1, "dimension"));
    let (code, _) = error(&["momentum", "--system", "Q7", "--weight", "1"]);
    assert_eq!(code, 1);
    let (code, e) = error(&["frobnicate"]);
    assert_eq!((code, e["error"].as_str().unwrap()), (1, "usage"));
    let (code, _) = error(&["weyl", "--system", "A1", "--budget-orbit", "0"]);
    assert_eq!(code, 1);
}

#[test]
fn budget_exhaustion_exits_two() {
    let (code, e) = error(&["kirwan", "--system", "B3", "--weight", "2,2,2", "--budget-subsets", "5"]);
    assert_eq!((code, e["error"].as_str().unwrap()), (2, "budget"));
    let out = Command::new(env!("CARGO_BIN_EXE_momentum-atlas"))
        .args(["kirwan", "--system", "B3", "--weight", "2,2,2"])
        .env("MOMENTUM_ATLAS_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    assert!(run(&["--help"]).status.success());
    assert!(run(&["kirwan", "--help"]).status.success());
}
