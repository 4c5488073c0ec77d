use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const MEDIAN_NOT_TVPI: &str = r#"{"dim": 3, "points": [[0,0,0],[1,1,2],[2,1,2],[1,2,2]]}"#;
const PLANE: &str = r#"{"dim": 2, "points": [[0,0],[2,2],[1,0]]}"#;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_intclosure"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn check_median_closed_exits_zero() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "s.json", MEDIAN_NOT_TVPI);
    let out = run(&["check", "--property", "median-closed", "--in", &input]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("median-closed: true"));
}

#[test]
fn check_repr_tvpi_fails_with_hole() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "s.json", MEDIAN_NOT_TVPI);
    let out = run(&["check", "--property", "repr-tvpi", "--in", &input, "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["schema"], "intclosure.check/1");
    assert_eq!(v["holds"], false);
    assert_eq!(v["certificate"]["kind"], "hole");
    assert_eq!(v["certificate"]["point"], serde_json::json!([1, 1, 1]));
}

#[test]
fn check_decomposable_on_plane() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "s.json", PLANE);
    assert_eq!(run(&["check", "--property", "2-decomposable", "--in", &input]).status.code(), Some(0));
}

#[test]
fn check_mu_witness_written_to_file() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("cert.json");
    let input = write(&dir, "t.json", r#"{"dim": 2, "points": [[2,0],[0,1],[0,2],[1,1],[1,2],[2,1],[2,2]]}"#);
    let out = run(&["check", "--property", "mu-closed", "--in", &input, "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = read_json(&out_path);
    assert_eq!(v["certificate"]["kind"], "operation");
    assert_eq!(v["certificate"]["inputs"], serde_json::json!([[2, 0], [0, 1]]));
    assert_eq!(v["certificate"]["produced"], serde_json::json!([1, 0]));
}

#[test]
fn check_parameterized_properties() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "s.json", r#"{"dim": 3, "points": [[0,0,1],[0,1,0],[1,0,0]]}"#);
    assert_eq!(run(&["check", "--property", "weak-F:3", "--in", &input]).status.code(), Some(1));
    assert_eq!(run(&["check", "--property", "hereditary:2-decomposable", "--in", &input]).status.code(), Some(1));
    assert_eq!(run(&["check", "--property", "weak-F:2", "--in", &input]).status.code(), Some(2));
    let input = write(&dir, "m.json", MEDIAN_NOT_TVPI);
    assert_eq!(run(&["check", "--property", "hereditary:strong-maj-p", "--in", &input]).status.code(), Some(0));
}

#[test]
fn usage_and_input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"dim": 2, "points": [[0,0],[1]]}"#);
    let good = write(&dir, "good.json", PLANE);
    assert_eq!(run(&["check", "--property", "median-closed", "--in", &bad]).status.code(), Some(2));
    assert_eq!(run(&["check", "--property", "no-such", "--in", &good]).status.code(), Some(2));
    assert_eq!(run(&["check", "--in", &good]).status.code(), Some(2));
    assert_eq!(run(&["closure", "--kind", "op:nope", "--in", &good]).status.code(), Some(2));
    let out = run(&["check", "--property", "median-closed", "--in", &dir.path().join("missing.json").to_string_lossy()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn budget_guard_exits_two() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "s.json", r#"{"dim": 2, "points": [[0,0],[100,100]]}"#);
    let out = run(&["closure", "--kind", "svpi", "--in", &input, "--budget", "100"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn closure_output_is_a_readable_set() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "s.json", r#"{"dim": 1, "points": [[0],[3]]}"#);
    let out_path = dir.path().join("c.json");
    let out = run(&["closure", "--kind", "op:mu", "--in", &input, "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = read_json(&out_path);
    assert_eq!(v["schema"], "intclosure.point-set/1");
    assert_eq!(v["points"], serde_json::json!([[0], [1], [2], [3]]));
    let again = run(&["closure", "--kind", "svpi", "--in", out_path.to_str().unwrap(), "--json"]);
    assert_eq!(json(&again)["points"], v["points"]);
}

#[test]
fn closure_kinds() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "s.json", r#"{"dim": 2, "points": [[0,0],[2,2]]}"#);
    let count = |kind: &str| json(&run(&["closure", "--kind", kind, "--in", &input, "--json"]))["points"].as_array().unwrap().len();
    assert_eq!(count("op:median"), 2);
    assert_eq!(count("op:mu"), 3);
    assert_eq!(count("op:gh"), 3);
    assert_eq!(count("dc"), 3);
    assert_eq!(count("utvpi"), 3);
    assert_eq!(count("tvpi"), 3);
    assert_eq!(count("svpi"), 9);
}

#[test]
fn repr_then_solve_round_trips() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "s.json", r#"{"dim": 2, "points": [[0,0],[1,0],[1,1]]}"#);
    let sys_path = dir.path().join("sys.json");
    let out = run(&["repr", "--class", "dc", "--in", &input, "--out", sys_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let sys = read_json(&sys_path);
    assert_eq!(sys["representable"], true);
    assert_eq!(sys["schema"], "intclosure.system/1");
    let sol = json(&run(&["solve", "--box", "-2:3,-2:3", "--in", sys_path.to_str().unwrap(), "--json"]));
    assert_eq!(sol["points"], serde_json::json!([[0, 0], [1, 0], [1, 1]]));

    let out = run(&["repr", "--class", "svpi", "--in", &input, "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["hole"], serde_json::json!([0, 1]));
    let sys_path = dir.path().join("svpi.json");
    fs::write(&sys_path, v.to_string()).unwrap();
    let sol = json(&run(&["solve", "--box", "-1:2,-1:2", "--in", sys_path.to_str().unwrap(), "--json"]));
    assert_eq!(sol["points"], serde_json::json!([[0, 0], [0, 1], [1, 0], [1, 1]]));
    assert_eq!(run(&["repr", "--class", "general", "--in", &input]).status.code(), Some(2));
}

#[test]
fn solve_reads_rational_systems() {
    let dir = TempDir::new().unwrap();
    let input = write(
        &dir,
        "sys.json",
        r#"{"dim": 2, "rows": [{"coeffs": [1, 2], "rhs": 2, "class": "TVPI"},
            {"coeffs": ["1/2", 0], "rhs": 0}, {"coeffs": [0, 1], "rhs": 0},
            {"coeffs": [-1, 0], "rhs": -2}, {"coeffs": [0, -1], "rhs": -2}]}"#,
    );
    let out = run(&["solve", "--box", "0:2,0:2", "--in", &input, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["points"].as_array().unwrap().len(), 7);
    assert_eq!(run(&["solve", "--box", "0:2", "--in", &input]).status.code(), Some(2));
}

#[test]
fn classify_from_stdin() {
    use std::io::Write;
    let mut child = bin().args(["classify", "--json"]).stdin(std::process::Stdio::piped()).stdout(std::process::Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(MEDIAN_NOT_TVPI.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "intclosure.class-report/1");
    assert_eq!(v["verdicts"]["median-closed"], true);
    assert_eq!(v["verdicts"]["repr-tvpi"], false);
    assert_eq!(v["verdicts"]["2-decomposable"], true);
    assert_eq!(v["consistency"], serde_json::json!([]));
}

#[test]
fn classify_text_table() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "s.json", PLANE);
    let out = run(&["classify", "--in", &input]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("integrally-convex"));
    assert!(text.contains("consistency: ok"));
}

#[test]
fn bundled_examples_all_pass_in_name_order() {
    let out = run(&["paper-examples"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).collect();
    assert_eq!(
        lines,
        ["PASS hole-free-not-hereditary", "PASS intconv-not-mu", "PASS median-not-tvpi", "PASS proj-breaks-decomp", "PASS tvpi-not-mu"]
    );
}

#[test]
fn verify_theorems_small_run() {
    let out = run(&["verify-theorems", "--trials", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["violations"], 0);
    assert!(v["suites"].as_array().unwrap().len() > 10);
    assert_eq!(run(&["verify-theorems", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify-theorems", "--fault", "bogus"]).status.code(), Some(2));
}

#[test]
fn verify_theorems_detects_injected_fault() {
    let out = run(&["verify-theorems", "--trials", "20", "--fault", "mu-ceil", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn verify_theorems_default_run_is_clean() {
    let out = run(&["verify-theorems"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}
