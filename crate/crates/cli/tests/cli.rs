//! End-to-end tests running the compiled binary: output shapes, exit codes,
//! file round trips, and byte determinism.

use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cds-grid"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is text")
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_str(&stdout_of(out)).expect("stdout is JSON")
}

#[test]
fn formula_plain_output() {
    let out = run(&["formula", "4", "4"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "gamma = 7\na' = 1\nr_bar' = 1\nc' = 1\n");
}

#[test]
fn formula_json_output() {
    let out = run(&["formula", "6", "6", "--json"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "{\"m\":6,\"n\":6,\"a_prime\":0,\"r_bar_prime\":0,\"c_prime\":2,\"gamma\":14}\n"
    );
}

#[test]
fn formula_rejects_small_sides() {
    let out = run(&["formula", "3", "5"]);
    assert_eq!(code_of(&out), 2);
    assert!(!out.stderr.is_empty());
}

#[test]
fn construct_ascii_picture() {
    let out = run(&["construct", "4", "4"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "....\n####\n.#.#\n.#..\n");
}

#[test]
fn construct_json_case_and_parts() {
    let out = run(&["construct", "5", "5", "--format", "json"]);
    assert_eq!(code_of(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["case"], "(2,2)");
    assert_eq!(v["vertices"].as_array().unwrap().len(), 11);
    assert_eq!(v["parts"]["A"].as_array().unwrap().len(), 5);
    assert_eq!(v["parts"]["E"].as_array().unwrap().len(), 3);
}

#[test]
fn construct_json_feeds_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w55.json");
    let out = run(&["construct", "5", "5", "--format", "json"]);
    fs::write(&path, out.stdout).unwrap();
    let out = run(&["verify", "--input", path.to_str().unwrap()]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("cardinality = 11"));
    assert!(text.contains("is_cds = true"));
}

#[test]
fn verify_reads_standard_input() {
    let mut child = bin()
        .args(["verify", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"m":4,"n":4,"vertices":[[1,2],[2,2],[2,3],[2,4],[3,2],[4,2],[4,3]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code_of(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["cardinality"], 7);
    assert_eq!(v["is_cds"], true);
}

#[test]
fn verify_fails_on_non_cds() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"m":4,"n":4,"vertices":[[1,1],[3,3]]}"#).unwrap();
    let out = run(&["verify", "--input", path.to_str().unwrap()]);
    assert_eq!(code_of(&out), 1);
    assert!(stdout_of(&out).contains("is_cds = false"));
}

#[test]
fn solve_reports_gamma_and_nodes() {
    let out = run(&["solve", "4", "4"]);
    assert_eq!(code_of(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["gamma"], 7);
    assert!(v["node_count"].as_u64().unwrap() > 0);
    assert!(v.get("witness").is_none());
}

#[test]
fn solve_witness_has_minimum_size() {
    let out = run(&["solve", "4", "5", "--witness"]);
    assert_eq!(code_of(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["gamma"], 9);
    assert_eq!(v["witness"]["vertices"].as_array().unwrap().len(), 9);
}

#[test]
fn solve_enumerates_all_minimum_sets() {
    let out = run(&["solve", "4", "4", "--all", "--cap", "200"]);
    assert_eq!(code_of(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["count"], 16);
    assert_eq!(v["truncated"], false);
    assert_eq!(v["sets"].as_array().unwrap().len(), 16);

    let out = run(&["solve", "4", "4", "--all", "--cap", "3"]);
    let v = json_of(&out);
    assert_eq!(v["count"], 3);
    assert_eq!(v["truncated"], true);
}

#[test]
fn solve_capacity_exit_code() {
    let out = run(&["solve", "8", "8"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn solve_budget_exit_code() {
    let out = run(&["solve", "5", "6", "--budget", "10"]);
    assert_eq!(code_of(&out), 3);
}

#[test]
fn regularize_summary_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("w45.json");
    let trace = dir.path().join("t45.json");
    let out = run(&["construct", "4", "5", "--format", "json"]);
    fs::write(&input, out.stdout).unwrap();
    let out = run(&[
        "regularize",
        "--input",
        input.to_str().unwrap(),
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("cases = C1 C1 C1 C31 C2 C2 C34"), "got: {text}");
    let steps: Value = serde_json::from_str(&fs::read_to_string(&trace).unwrap()).unwrap();
    let steps = steps.as_array().unwrap();
    assert_eq!(steps.len(), 7);
    for step in steps {
        for key in ["case", "frame_before", "frame_after", "removed", "added"] {
            assert!(step.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn regularize_audit_passes() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("w45.json");
    let out = run(&["construct", "4", "5", "--format", "json"]);
    fs::write(&input, out.stdout).unwrap();
    let out = run(&["regularize", "--input", input.to_str().unwrap(), "--audit"]);
    assert_eq!(code_of(&out), 0);
    let v = json_of(&out);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 8);
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn regularize_rejects_non_cds() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.json");
    fs::write(&input, r#"{"m":4,"n":4,"vertices":[[1,2]]}"#).unwrap();
    let out = run(&["regularize", "--input", input.to_str().unwrap()]);
    assert_eq!(code_of(&out), 1);
}

#[test]
fn regularize_rejects_small_grids() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("small.json");
    fs::write(&input, r#"{"m":3,"n":3,"vertices":[[2,1],[2,2],[2,3]]}"#).unwrap();
    let out = run(&["regularize", "--input", input.to_str().unwrap()]);
    assert_eq!(code_of(&out), 2);
}

const SWEEP_TABLE: &str = "m,n,gamma_formula,gamma_solver,match\n\
    4,4,7,7,true\n\
    4,5,9,9,true\n\
    4,6,10,10,true\n\
    5,4,9,9,true\n\
    5,5,11,skipped,skipped\n\
    5,6,12,skipped,skipped\n";

#[test]
fn sweep_writes_expected_table() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("t.csv");
    let out = run(&[
        "sweep",
        "--m",
        "4..5",
        "--n",
        "4..6",
        "--solve-upto",
        "24",
        "--out",
        table.to_str().unwrap(),
    ]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(fs::read_to_string(&table).unwrap(), SWEEP_TABLE);
}

#[test]
fn sweep_stdout_matches_file_output() {
    let out = run(&["sweep", "--m", "4..5", "--n", "4..6", "--solve-upto", "24"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), SWEEP_TABLE);
}

#[test]
fn sweep_solved_rows_all_match() {
    let out = run(&["sweep", "--m", "4..5", "--n", "4..6", "--solve-upto", "30"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().skip(1).all(|line| line.ends_with(",true")), "got: {text}");
}

#[test]
fn usage_errors_exit_with_two() {
    let out = run(&["no-such-command"]);
    assert_eq!(code_of(&out), 2);
    let out = run(&["sweep", "--m", "5..4", "--n", "4..6"]);
    assert_eq!(code_of(&out), 2);
}
