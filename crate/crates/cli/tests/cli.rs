use std::process::{Command, Output};

use serde_json::Value;

fn cotor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cotor")).args(args).output().unwrap()
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = cotor(args);
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json)
}

#[test]
fn enumerate_cp_lists_two_pairs() {
    let (code, r) = report(&["enumerate-cp", "--backend", "nakayama:m=1,n=3"]);
    assert_eq!(code, 0);
    assert_eq!(r["schema"], "cotor.report/1");
    assert_eq!(r["result"]["count"], 2);
    assert_eq!(r["seed"], 0);
}

#[test]
fn polygon_counts() {
    let (code, r) = report(&["enumerate-cp", "--backend", "polygon:N=5"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["rigid"], 11);
    assert_eq!(r["result"]["triangulations"], 5);
}

#[test]
fn verify_bijection_passes() {
    let (code, r) = report(&["verify", "--backend", "nakayama:m=2,n=2", "--suite", "bijection"]);
    assert_eq!(code, 0);
    assert_eq!(r["outcome"], "pass");
    assert_eq!(r["result"]["suites"][0]["suite"], "bijection");
}

#[test]
fn mutate_shifts_the_simple() {
    let (code, r) = report(&[
        "mutate",
        "--backend",
        "nakayama:m=2,n=2",
        "--tcp",
        "trivial-hovey",
        "--pair",
        "U=[S0];V=[S0]",
        "--k",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["result"]["U"], serde_json::json!(["M(1,1)"]));
    let (_, back) = report(&[
        "mutate",
        "--backend",
        "nakayama:m=2,n=2",
        "--tcp",
        "trivial-hovey",
        "--pair",
        "U=[S1];V=[S1]",
        "--k",
        "-1",
    ]);
    assert_eq!(back["result"]["result"]["U"], serde_json::json!(["M(0,1)"]));
}

#[test]
fn filters_narrow_the_twin_pairs() {
    let (_, all) = report(&["enumerate-tcp", "--backend", "nakayama:m=2,n=3"]);
    let (_, conc) = report(&["enumerate-tcp", "--backend", "nakayama:m=2,n=3", "--concentric"]);
    let (_, good) = report(&[
        "enumerate-tcp",
        "--backend",
        "nakayama:m=2,n=3",
        "--cond-I",
        "--cond-II",
    ]);
    let (_, iii) = report(&["enumerate-tcp", "--backend", "nakayama:m=2,n=3", "--cond-III"]);
    assert_eq!(all["result"]["count"], 35);
    assert_eq!(conc["result"]["count"], 15);
    assert_eq!(good["result"]["count"], 11);
    assert_eq!(iii["result"]["count"], 11);
}

#[test]
fn invalid_input_exits_two() {
    assert_eq!(
        cotor(&["enumerate-cp", "--backend", "torus:g=1"]).status.code(),
        Some(2)
    );
    assert_eq!(cotor(&["verify", "--backend", "polygon:N=5"]).status.code(), Some(2));
    assert_eq!(cotor(&["verify", "--cap", "1"]).status.code(), Some(2));
    let out = cotor(&["mutate", "--tcp", "trivial-hovey", "--pair", "U=[S5];V=0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("S5"));
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "--backend", "nakayama:m=2,n=3", "--seed", "5"];
    let a = cotor(&args);
    let b = cotor(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn orbit_graph_is_dot() {
    let out = cotor(&["orbit-graph", "--backend", "polygon:N=5", "--i", "arc(0,2)"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph mutation {"));
    assert!(dot.contains("n1 -> n2;") && dot.contains("n2 -> n1;"));
}

#[test]
fn match_backends_finds_the_square() {
    let (_, r) = report(&[
        "match-backends",
        "--backend",
        "nakayama:m=2,n=2",
        "--other",
        "polygon:N=4",
    ]);
    assert_eq!(r["result"]["dictionary"].as_array().unwrap().len(), 2);
    let (_, r) = report(&[
        "match-backends",
        "--backend",
        "nakayama:m=1,n=3",
        "--other",
        "polygon:N=4",
    ]);
    assert!(r["result"]["dictionary"].is_null());
}

#[test]
fn out_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("cotor-report-{}.json", std::process::id()));
    let out = cotor(&["reduce", "--tcp", "trivial-hovey", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["command"], "reduce");
    assert_eq!(r["result"]["objects"].as_array().unwrap().len(), 2);
    std::fs::remove_file(path).ok();
}

#[test]
fn census_covers_the_default_instances() {
    let (code, r) = report(&["census"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["instances"].as_array().unwrap().len(), 5);
}
