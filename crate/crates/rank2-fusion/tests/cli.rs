//! End-to-end tests of the command-line binary.

use std::process::{Command, Output};

use rank2_fusion::GradedDecomposition;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rank2-fusion"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout must be UTF-8")
}

#[test]
fn decompose_g2_json_matches_golden_fixture() {
    let out = run(&[
        "decompose",
        "--type",
        "G2",
        "--lambda",
        "1,0",
        "--mu",
        "1,0",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), include_str!("fixtures/golden_g2.json"));
}

#[test]
fn decompose_trivial_pair_is_a_single_record() {
    let out = run(&[
        "decompose",
        "--type",
        "A2",
        "--lambda",
        "0,0",
        "--mu",
        "0,0",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let d: GradedDecomposition = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(d.entries_desc().count(), 1);
    let (nu, poly) = d.entries_desc().next().unwrap();
    assert_eq!((nu.w1, nu.w2), (0, 0));
    assert_eq!(poly.coeffs(), &[1]);
}

#[test]
fn decompose_json_round_trips() {
    let out = run(&[
        "decompose",
        "--type",
        "C2",
        "--lambda",
        "2,1",
        "--mu",
        "1,2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let d: GradedDecomposition = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&d).unwrap() + "\n", text);
}

#[test]
fn inadmissible_g2_pair_exits_with_usage_error() {
    let out = run(&[
        "decompose",
        "--type",
        "G2",
        "--lambda",
        "1,1",
        "--mu",
        "0,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("inadmissible"), "stderr was: {stderr}");
}

#[test]
fn malformed_weight_exits_with_usage_error() {
    let out = run(&["decompose", "--type", "A2", "--lambda", "1", "--mu", "0,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decompose_csv_has_the_documented_header() {
    let out = run(&[
        "decompose",
        "--type",
        "A2",
        "--lambda",
        "1,0",
        "--mu",
        "0,1",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("type,lambda1,lambda2,mu1,mu2,nu1,nu2,degree,multiplicity")
    );
    assert_eq!(lines.next(), Some("A2,1,0,0,1,1,1,0,1"));
    assert_eq!(lines.next(), Some("A2,1,0,0,1,0,0,1,1"));
    assert_eq!(lines.next(), None);
}

#[test]
fn verify_single_pair_sweep_passes() {
    let out = run(&["verify", "--type", "C2", "--max", "0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1 pair, all checks pass"));
}

#[test]
fn schur_example_reports_domination() {
    let out = run(&[
        "schur",
        "--type",
        "A2",
        "--lambda",
        "2,0",
        "--mu",
        "0,0",
        "--lambda2",
        "1,0",
        "--mu2",
        "1,0",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("dominated: true"));
}

#[test]
fn schur_hypothesis_violation_exits_with_usage_error() {
    let out = run(&[
        "schur",
        "--type",
        "A2",
        "--lambda",
        "2,0",
        "--mu",
        "0,0",
        "--lambda2",
        "0,1",
        "--mu2",
        "1,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn count_agrees_across_models() {
    let out = run(&["count", "--type", "G2", "--lambda", "2,1", "--mu", "3,0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("S points:"));
    assert!(text.contains("tableaux:"));
}

#[test]
fn out_flag_writes_the_file() {
    let dir = std::env::temp_dir().join("rank2-fusion-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("decomposition.json");
    let out = run(&[
        "decompose",
        "--type",
        "A2",
        "--lambda",
        "1,1",
        "--mu",
        "1,1",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let d: GradedDecomposition = serde_json::from_str(&written).unwrap();
    assert_eq!(d.total(), 6);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn output_is_byte_deterministic() {
    let args = [
        "decompose",
        "--type",
        "G2",
        "--lambda",
        "2,1",
        "--mu",
        "2,0",
        "--format",
        "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn oracle_matches_decompose_totals() {
    let out = run(&[
        "oracle", "--type", "C2", "--lambda", "1,0", "--mu", "1,0", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text,
        "type,lambda1,lambda2,mu1,mu2,nu1,nu2,multiplicity\n\
         C2,1,0,1,0,2,0,1\nC2,1,0,1,0,0,1,1\nC2,1,0,1,0,0,0,1\n"
    );
}
