use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qframe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qframe")).args(args).env_remove("QFRAME_SEED").output().expect("qframe runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_file(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn write_maximally_mixed(path: &Path, d: usize) {
    let re: Vec<Vec<f64>> =
        (0..d).map(|i| (0..d).map(|j| if i == j { 1.0 / d as f64 } else { 0.0 }).collect()).collect();
    let im = vec![vec![0.0; d]; d];
    let text = serde_json::json!({ "dim": d, "re": re, "im": im }).to_string();
    std::fs::write(path, text).unwrap();
}

fn s(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn values(v: &Value) -> Vec<f64> {
    v["values"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

#[test]
fn build_writes_frame_dual_and_geometry() {
    let dir = tempfile::tempdir().unwrap();
    let out = qframe(&["build", "wootters", "--d", "3", "--out", s(dir.path())]);
    assert_eq!(code(&out), 0);
    let summary: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["outcomes"], 9);
    assert!(summary["duality_residual"].as_f64().unwrap() < 1e-9);
    let frame = json_file(&dir.path().join("frame.json"));
    assert_eq!(frame["operators"].as_array().unwrap().len(), 9);
    let geometry = json_file(&dir.path().join("geometry.json"));
    assert_eq!(geometry["lines"].as_array().unwrap().len(), 12);
    assert_eq!(geometry["striations"].as_array().unwrap().len(), 4);
}

#[test]
fn built_in_qubit_fiducial_is_reported() {
    let out = qframe(&["build", "sic", "--d", "2"]);
    assert_eq!(code(&out), 0);
    let summary: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(summary["fiducial_deviation"].as_f64().unwrap() < 1e-8);
}

#[test]
fn composite_mub_dimension_is_rejected() {
    let out = qframe(&["build", "mub", "--d", "4"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("d must be prime"));
}

#[test]
fn unknown_names_and_bad_seeds_are_argument_errors() {
    assert_eq!(code(&qframe(&["build", "glauber", "--d", "3"])), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_qframe"))
        .args(["represent", "wootters", "--d", "3", "--random", "1"])
        .env("QFRAME_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn seed_falls_back_to_environment() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_qframe"))
            .args(["represent", "wootters", "--d", "3", "--random", "2"])
            .env("QFRAME_SEED", seed)
            .output()
            .unwrap()
            .stdout
    };
    let explicit = qframe(&["represent", "wootters", "--d", "3", "--random", "2", "--seed", "41"]).stdout;
    assert_eq!(run("41"), explicit);
    assert_ne!(run("42"), explicit);
}

#[test]
fn maximally_mixed_state_is_uniform() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("mixed.json");
    write_maximally_mixed(&state, 3);
    let out = qframe(&["represent", "wootters", "--d", "3", "--state", s(&state)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches("1.111111111111e-01").count(), 9);
    let dist: Value = serde_json::from_str(&text).unwrap();
    assert!(values(&dist).iter().all(|v| (v - 1.0 / 9.0).abs() < 1e-12));
}

#[test]
fn csv_output_has_one_row_per_outcome() {
    let out = qframe(&["represent", "mub", "--d", "3", "--random", "1", "--seed", "2", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut rows = text.lines();
    assert_eq!(rows.next(), Some("basis,outcome,value"));
    assert_eq!(rows.count(), 12);
}

#[test]
fn round_trip_error_is_reported() {
    let out = qframe(&["represent", "leonhardt", "--d", "2", "--random", "2", "--seed", "3"]);
    assert_eq!(code(&out), 0);
    let stderr = String::from_utf8_lossy(&out.stderr);
    let line = stderr.lines().find(|l| l.starts_with("round-trip error:")).expect("reported");
    let err: f64 = line.trim_start_matches("round-trip error:").trim().parse().unwrap();
    assert!(err < 1e-8);
}

#[test]
fn reconstruct_inverts_represent() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("mixed.json");
    let dist = dir.path().join("dist.json");
    write_maximally_mixed(&state, 3);
    assert_eq!(code(&qframe(&["represent", "cohendet", "--d", "3", "--state", s(&state), "--out", s(&dist)])), 0);
    let out = qframe(&["reconstruct", "--dist", s(&dist)]);
    assert_eq!(code(&out), 0);
    let m: Value = serde_json::from_slice(&out.stdout).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            let want = if i == j { 1.0 / 3.0 } else { 0.0 };
            assert!((m["re"][i][j].as_f64().unwrap() - want).abs() < 1e-8);
            assert!(m["im"][i][j].as_f64().unwrap().abs() < 1e-8);
        }
    }
}

#[test]
fn truncated_input_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("mixed.json");
    write_maximally_mixed(&state, 3);
    let text = std::fs::read_to_string(&state).unwrap();
    std::fs::write(&state, &text[..text.len() / 2]).unwrap();
    assert_eq!(code(&qframe(&["represent", "wootters", "--d", "3", "--state", s(&state)])), 3);
    assert_eq!(code(&qframe(&["reconstruct", "--dist", s(&state)])), 3);
}

#[test]
fn missing_file_is_an_argument_error() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&qframe(&["reconstruct", "--dist", s(&dir.path().join("absent.json"))])), 2);
}

#[test]
fn transform_round_trip_through_sic() {
    let dir = tempfile::tempdir().unwrap();
    let (w, sic, back) = (dir.path().join("w.json"), dir.path().join("s.json"), dir.path().join("b.json"));
    assert_eq!(
        code(&qframe(&["represent", "wootters", "--d", "3", "--random", "2", "--seed", "5", "--out", s(&w)])),
        0
    );
    assert_eq!(code(&qframe(&["transform", "--dist", s(&w), "--to", "sic", "--d", "3", "--out", s(&sic)])), 0);
    assert_eq!(code(&qframe(&["transform", "--dist", s(&sic), "--to", "wootters", "--d", "3", "--out", s(&back)])), 0);
    let (a, b) = (values(&json_file(&w)), values(&json_file(&back)));
    let worst = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    assert!(worst < 1e-8, "{worst}");

    let same = dir.path().join("same.json");
    assert_eq!(code(&qframe(&["transform", "--dist", s(&w), "--to", "wootters", "--d", "3", "--out", s(&same)])), 0);
    let c = values(&json_file(&same));
    assert!(a.iter().zip(&c).all(|(x, y)| (x - y).abs() < 1e-12));
}

#[test]
fn transform_errors() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    assert_eq!(code(&qframe(&["represent", "wootters", "--d", "3", "--random", "1", "--out", s(&w)])), 0);
    assert_eq!(code(&qframe(&["transform", "--dist", s(&w), "--to", "sic", "--d", "5"])), 4);
    let from_overcomplete = ["transform", "--dist", s(&w), "--from", "cohendet-extended", "--to", "sic", "--d", "3"];
    assert_eq!(code(&qframe(&from_overcomplete)), 5);
}

#[test]
fn verify_reports_born_residual() {
    let out = qframe(&["verify", "wootters", "--d", "5", "--samples", "200"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let born = report["checks"].as_array().unwrap().iter().find(|c| c["name"] == "born_rule").unwrap();
    assert_eq!(born["passed"], true);
    assert!(born["worst_residual"].as_f64().unwrap() < 1e-8);
}

#[test]
fn verify_field_net_passes() {
    let out = qframe(&["verify", "ghw", "--p", "2", "--n", "2"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let names: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"net_covariance"));
}

#[test]
fn starved_fiducial_search_fails_verification() {
    let out = qframe(&["verify", "sic", "--d", "7", "--starts", "0"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("no SIC fiducial found"));
}

#[test]
fn demo_bell() {
    let out = qframe(&["demo", "bell", "--angles", "0,60,120"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("violated: true"), "{text}");
    assert!(text.contains("lhs=1.0000, rhs=0.5000"), "{text}");
}

#[test]
fn demo_nmr_below_bound_is_classical() {
    let out = qframe(&["demo", "nmr", "--n", "2", "--epsilon", "0.111"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("classical: true"));
}

#[test]
fn demo_teleport_residuals() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let out = qframe(&["demo", "teleport", "--d", "3", "--seed", "7", "--format", "csv", "--out", s(&csv)]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut rows = text.lines();
    let header: Vec<&str> = rows.next().unwrap().split(',').collect();
    let cols: Vec<usize> = header.iter().enumerate().filter(|(_, h)| h.contains("residual")).map(|(i, _)| i).collect();
    assert!(!cols.is_empty());
    let mut n = 0;
    for row in rows {
        let fields: Vec<&str> = row.split(',').collect();
        for &c in &cols {
            assert!(fields[c].parse::<f64>().unwrap() < 1e-9);
        }
        n += 1;
    }
    assert_eq!(n, 9);
}

#[test]
fn demo_rejects_bad_parameters() {
    assert_eq!(code(&qframe(&["demo", "bell", "--angles", "0,60"])), 2);
    assert_eq!(code(&qframe(&["demo", "nmr", "--n", "2", "--epsilon", "1.5"])), 2);
}
