//! Integration tests for the binary: exit codes, CSV determinism, JSON
//! round-trips, and the documented examples.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_gradred"))
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn write_instance(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const DIM_DROP_EXAMPLE: &str = r#"{
    "prime": 32003,
    "vars": ["x", "y"],
    "module": [{"denominator": [[2, 0]]}],
    "ideal": [[1, 0]]
}"#;

const M_SQUARED: &str = r#"{
    "prime": 32003,
    "vars": ["x", "y"],
    "module": [{}],
    "ideal": [[2, 0], [1, 1], [0, 2]]
}"#;

const CI_IDEAL: &str = r#"{
    "prime": 32003,
    "vars": ["x", "y"],
    "module": [{}],
    "ideal": [[2, 0], [0, 3]]
}"#;

#[test]
fn compute_dim_of_ideal_multiple() {
    // dim(IM) = 1 for M = S/(x^2) I M presented directly: numerator (x)
    let dir = tempfile::tempdir().unwrap();
    let im = r#"{
        "prime": 32003,
        "vars": ["x", "y"],
        "module": [{"numerator": [[1, 0]], "denominator": [[2, 0]]}],
        "ideal": [[1, 0]]
    }"#;
    let path = write_instance(&dir, "im.json", im);
    let out = run(&["compute", "--input", &path, "--what", "dim"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["invariants"]["dim"], "1");
}

#[test]
fn compute_shifted_free_module_degrees() {
    // S(-3): D = d = 3
    let dir = tempfile::tempdir().unwrap();
    let shifted = r#"{
        "prime": 32003,
        "vars": ["x", "y"],
        "module": [{"shift": 3}],
        "ideal": [[1, 0]]
    }"#;
    let path = write_instance(&dir, "s3.json", shifted);
    let out = run(&["compute", "--input", &path, "--what", "D,d"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["invariants"]["D"], 3);
    assert_eq!(doc["invariants"]["d"], 3);
}

#[test]
fn compute_rho_of_complete_intersection() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_instance(&dir, "ci.json", CI_IDEAL);
    let out = run(&["compute", "--input", &path, "--what", "rho"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["invariants"]["rho"], 3);
}

#[test]
fn series_csv_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_instance(&dir, "m2.json", M_SQUARED);
    let args = ["series", "--input", &path, "--quantities", "r,D", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success(), "stderr: {}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,quantity,value,rho,intercept,status");
    // 10 rows per quantity
    assert_eq!(text.lines().count(), 21);
    assert!(text.lines().skip(1).all(|l| l.ends_with("stabilized")));
    // rho = 2 in every data row
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(3) == Some("2")));
    // no warnings leak into the CSV
    assert!(!text.contains("warning"));
}

#[test]
fn series_inconclusive_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_instance(&dir, "ci.json", CI_IDEAL);
    // window larger than the run of stable intercepts for r at n-max 2
    let out = run(&[
        "series", "--input", &path, "--quantities", "r", "--n-max", "2", "--window", "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().skip(1).all(|l| l.ends_with("inconclusive")));
}

#[test]
fn series_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_instance(&dir, "m2.json", M_SQUARED);
    let out_path = dir.path().join("series.csv");
    let out = run(&[
        "series",
        "--input",
        &path,
        "--quantities",
        "D",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.starts_with("n,quantity,value,rho,intercept,status\n"));
}

#[test]
fn oracle_agrees_on_quotient_instance() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_instance(&dir, "quotient.json", DIM_DROP_EXAMPLE);
    let out = run(&["oracle", "--input", &path]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["r", "D", "dim"] {
        assert_eq!(doc[key]["agree"], true, "{key} disagreed: {doc}");
    }
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = run(&["series", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn bad_json_is_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_instance(&dir, "bad.json", "{ not json");
    let out = run(&["compute", "--input", &path]);
    assert_eq!(out.status.code(), Some(65));
}

#[test]
fn composite_prime_is_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_instance(&dir, "bad.json", &M_SQUARED.replace("32003", "32001"));
    let out = run(&["compute", "--input", &path]);
    assert_eq!(out.status.code(), Some(65), "32001 = 3 * 10667 must be rejected");
}

#[test]
fn small_prime_warns_on_stderr_only() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_instance(&dir, "small.json", &M_SQUARED.replace("32003", "7919"));
    let out = run(&["series", "--input", &path, "--quantities", "D"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("warning"), "stderr: {err}");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("warning"));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn missing_subcommand_is_usage_error() {
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn instance_round_trip_via_library() {
    let inst = gradred::InstanceFile::from_json(M_SQUARED).unwrap();
    let again = gradred::InstanceFile::from_json(&inst.to_json()).unwrap();
    assert_eq!(inst, again);
}

#[test]
fn verify_koszul_suite_passes() {
    let out = run(&["verify", "--suite", "koszul", "--seed", "5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success(), "output: {text}");
    assert!(text.lines().all(|l| l.starts_with("[PASS]")), "output: {text}");
}
