use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn torquo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torquo")).args(args).output().expect("binary runs")
}

fn torquo_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_torquo"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn analyze_weighted_projective_line() {
    let v = json(&torquo(&["analyze", "--format", "json", "--matrix", "2 3"]));
    assert_eq!(v["dim"], 2);
    assert_eq!(v["poincare"]["terms"][0]["e"], 2);
    assert_eq!(v["poincare"]["terms"][0]["c"], "1");
    assert_eq!(v["poincare"]["terms"].as_array().unwrap().len(), 1);
}

#[test]
fn classify_weighted_plane_is_not_a_manifold() {
    let v = json(&torquo(&["classify", "--format", "json", "--matrix", "3 1 1"]));
    assert_eq!(v["verdict"], "NotManifold");
}

#[test]
fn classify_hopf_action() {
    let v = json(&torquo(&["classify", "--format", "json", "--matrix", "1 1 1"]));
    assert_eq!(v["verdict"], "ComplexProjective(2)");
}

#[test]
fn tutte_engines_agree_on_triangle() {
    let v = json(&torquo(&["tutte", "--format", "json", "--matrix", "1 0 1\n0 1 1"]));
    assert_eq!(v["equal"], true);
    assert_eq!(v["deletion_contraction"], v["oracle"]);
}

#[test]
fn reads_standard_input() {
    let out = torquo_stdin(&["analyze"], "1 1\n");
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("dimension: 2"));
}

#[test]
fn reads_a_file() {
    let path = std::env::temp_dir().join(format!("torquo-cli-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"rows": [[1, 0, 1], [0, 1, 1]]}"#).unwrap();
    let v = json(&torquo(&["flats", "--format", "json", path.to_str().unwrap()]));
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
}

#[test]
fn noneffective_exits_two_unless_reduced() {
    let out = torquo(&["analyze", "--matrix", "2 4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = torquo(&["analyze", "--auto-reduce", "--matrix", "2 4"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("divided row 1 by 2"));
}

#[test]
fn invalid_input_exits_one() {
    assert_eq!(torquo(&["analyze", "--matrix", "1 x"]).status.code(), Some(1));
    assert_eq!(torquo(&["analyze", "--matrix", "1 2;3"]).status.code(), Some(1));
    assert_eq!(torquo(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn limit_refusal_and_force() {
    let out = torquo(&["tutte", "--limit", "2", "--matrix", "1 1 1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = torquo(&["tutte", "--limit", "2", "--force", "--matrix", "1 1 1"]);
    assert!(out.status.success());
}

#[test]
fn verify_passes_on_uniform_matroid() {
    let v = json(&torquo(&["verify", "--format", "json", "--matrix", "1 1 1 1;0 1 2 3"]));
    for check in v["checks"].as_array().unwrap() {
        assert_ne!(check["status"], "fail", "{check}");
    }
}

#[test]
fn singular_wedge_is_consistent() {
    let v = json(&torquo(&["singular", "--format", "json", "--matrix", "1 0 1;0 1 1"]));
    assert_eq!(v["wedge_consistent"], true);
    assert_eq!(v["strata"].as_array().unwrap().len(), 3);
}

#[test]
fn canonicalize_logs_moves() {
    let v = json(&torquo(&["canonicalize", "--format", "json", "--matrix", "2 0;-1 -2"]));
    assert_eq!(v["steps"][0]["move"], "divide_row");
    let again = json(&torquo(&["canonicalize", "--format", "json", "--matrix", "1 0;0 1"]));
    assert_eq!(v["matrix"], again["matrix"]);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["classify", "--format", "json", "--matrix", "1 2 3;0 1 1"];
    assert_eq!(torquo(&args).stdout, torquo(&args).stdout);
}
