//! End-to-end runs of the `fpp` binary on fast commands.

use std::process::{Command, Output};

fn fpp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fpp")).args(args).output().expect("fpp runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn bounds_eval_phi2() {
    let out = fpp(&["bounds", "eval", "--name", "phi2", "--d", "7", "--h3", "9"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("phi2 in [9.047882482698"));
}

#[test]
fn bounds_ladder_is_certified() {
    let out = fpp(&["bounds", "ladder", "--degree", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[certified]"));
    assert!(!text.contains("NOT certified"));
}

#[test]
fn split_classifies_places_over_41() {
    let out = fpp(&["split", "--pair", "C4", "--p", "41"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains(": inert"));
    assert!(text.contains(": ramified"));
}

#[test]
fn lvalue_reconstructs_c2() {
    let out = fpp(&["lvalue", "--pair", "C2", "--s", "-2", "--prime-limit", "50000"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("reconstructed 32/9"));
}

#[test]
fn volume_chi_of_c31() {
    let out = fpp(&["volume", "chi", "--pair", "C31", "--t0", "2", "--prime-limit", "50000"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("q = 8"));
    assert!(text.lines().any(|l| l.starts_with("chiLambda") && l.trim_end().ends_with(" 9")));
}

#[test]
fn census_stage_as_json() {
    let out = fpp(&["census", "run", "--stage", "kq-discriminant-cut", "--report", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["stage"], "kq-discriminant-cut");
    assert!(v["cuts"].as_array().is_some_and(|c| !c.is_empty()));
}

#[test]
fn unknown_pair_exits_with_two() {
    let out = fpp(&["lvalue", "--pair", "C99", "--s", "-2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}
