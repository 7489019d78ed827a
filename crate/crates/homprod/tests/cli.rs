//! End-to-end tests of the `homprod` binary.

use std::io::Write;
use std::process::{Command, Output};

fn homprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homprod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn params_shor() {
    let out = homprod(&["params", "fixture:shor"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#"{"n":9,"k":1}"#);
}

#[test]
fn distance_fig8_exhaustive() {
    let out = homprod(&["distance", "fixture:fig8", "--method", "exhaustive"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["d"], 3);
    assert_eq!(json["x"]["value"]["exact"], 3);
    assert_eq!(json["z"]["value"]["exact"], 3);
}

#[test]
fn distance_single_side_weight_limited() {
    let out = homprod(&[
        "distance",
        "fixture:surface-3",
        "--method",
        "weight-limited",
        "--wmax",
        "2",
        "--side",
        "z",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["value"]["at_least"], 3);
}

#[test]
fn weight_limited_without_wmax_is_usage_error() {
    let out = homprod(&["distance", "fixture:shor", "--method", "weight-limited"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_checks_exit_1() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"construction":"classical","hx":["10","01"],"hz":["10","01"]}}"#
    )
    .unwrap();
    let out = homprod(&["build", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("H_Z · H_Xᵀ ≠ 0"));
}

#[test]
fn malformed_recipe_exit_2() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "{{not json").unwrap();
    let out = homprod(&["build", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_fixture_exit_2() {
    let out = homprod(&["params", "fixture:klein-bottle"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn build_round_trip_matches_in_process_params() {
    for fixture in ["shor", "fig8", "toric-3", "surface-3"] {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("code.json");
        let out = homprod(&[
            "build",
            &format!("fixture:{fixture}"),
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{fixture}");
        let rebuilt = homprod(&["params", path.to_str().unwrap()]);
        let direct = homprod(&["params", &format!("fixture:{fixture}")]);
        assert_eq!(stdout(&rebuilt), stdout(&direct), "{fixture}");
    }
}

#[test]
fn audit_toric() {
    let out = homprod(&["audit", "fixture:toric-3"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["max_row_weight"], 4);
    assert_eq!(json["max_qubit_degree"], 4);
}

#[test]
fn tanner_dot_output() {
    let out = homprod(&["tanner", "fixture:shor"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.contains("graph"));
    assert!(dot.contains("q0"));
    assert!(dot.contains("x0"));
    assert!(dot.contains("z0"));
}

#[test]
fn simulate_deterministic_csv() {
    let args = [
        "simulate",
        "fixture:toric-3",
        "--decoder",
        "lookup",
        "--p",
        "0.05",
        "--trials",
        "500",
        "--seed",
        "11",
    ];
    let a = homprod(&args);
    let b = homprod(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "code,decoder,px,pz,trials,failures,rate,ci_lo,ci_hi,seed"
    );
    let row = lines.next().unwrap();
    assert!(row.starts_with("toric-3,lookup,0.05,0.05,500,"));
}

#[test]
fn bbs_recipe_params() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"construction":"bbs","a":["11","11"]}}"#).unwrap();
    let out = homprod(&["params", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["n"], 4);
    assert_eq!(json["k"], 1);
}

#[test]
fn hgp_recipe_from_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"construction":"hgp","h1":["110","011"],"h2":["110","011"]}}"#
    )
    .unwrap();
    let out = homprod(&["params", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#"{"n":13,"k":1}"#);
}
