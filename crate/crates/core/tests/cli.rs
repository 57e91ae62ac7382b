use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use reset_planner::{Method, PathSolution};

const CHORD: &str = r#"{"start": [0, 0], "end": [4, 0], "budget": 3,
  "polytopes": [{"vertices": [[1.5, -0.5], [2.5, -0.5], [2.5, 0.5], [1.5, 0.5]]}]}"#;
const SHORT_TRIP: &str = r#"{"start": [0, 0], "end": [2, 0], "budget": 3, "polytopes": []}"#;
const ISOLATED: &str = r#"{"start": [0, 0], "end": [20, 0], "budget": 3,
  "polytopes": [{"vertices": [[2, -0.5], [3, -0.5], [3, 0.5], [2, 0.5]]}]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reset-planner"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn plan_trivial_prints_straight_line() {
    let dir = tempfile::tempdir().unwrap();
    let scn = write(dir.path(), "t.json", SHORT_TRIP);
    let out = run(&["plan", &scn]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let sol = PathSolution::from_json(&stdout(&out)).unwrap();
    assert_eq!(sol.method, Method::StraightLine);
    assert_eq!(sol.total_length, 2.0);
}

#[test]
fn plan_chord_reports_both_stages() {
    let dir = tempfile::tempdir().unwrap();
    let scn = write(dir.path(), "c.json", CHORD);
    let sol_path = dir.path().join("sol.json");
    let graph_path = dir.path().join("graph.json");
    let svg_path = dir.path().join("fig.svg");
    let out = run(&[
        "plan",
        &scn,
        "--output",
        sol_path.to_str().unwrap(),
        "--dump-graph",
        graph_path.to_str().unwrap(),
        "--svg",
        svg_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let err = stderr(&out);
    assert!(err.contains("graph-only length"));
    assert!(err.contains("refined length: 4.0000000"));
    let sol = PathSolution::from_json(&fs::read_to_string(&sol_path).unwrap()).unwrap();
    assert_eq!(sol.method, Method::Refined);
    assert!((sol.total_length - 4.0).abs() < 1e-6);

    let graph: serde_json::Value = serde_json::from_str(&fs::read_to_string(&graph_path).unwrap()).unwrap();
    let edges = graph["edges"].as_array().unwrap();
    assert!(!graph["nodes"].as_array().unwrap().is_empty());
    assert!(edges.iter().all(|e| e.as_array().unwrap().len() == 4));

    let svg = fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<?xml") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<polygon").count(), 1);
}

#[test]
fn infeasible_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let scn = write(dir.path(), "i.json", ISOLATED);
    let out = run(&["plan", &scn]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("infeasible: no budget-feasible path"));
}

#[test]
fn bad_input_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let scn = write(dir.path(), "b.json", r#"{"start": [0, 0], "end": [1, 0], "budget": -1, "polytopes": []}"#);
    assert_eq!(run(&["plan", &scn]).status.code(), Some(1));
    assert_eq!(run(&["plan", "/nonexistent/scenario.json"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn compare_writes_csv_and_rejects_empty_list() {
    let dir = tempfile::tempdir().unwrap();
    let scn = write(dir.path(), "c.json", CHORD);
    let out = run(&["compare", &scn, "--deltas", "2,4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("delta,nodes,graph_len,refined_len,ms"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[1][2] <= rows[0][2]);
    assert!(rows.iter().all(|r| r[3] <= r[2] + 1e-6));

    let md = run(&["compare", &scn, "--deltas", "4", "--format", "markdown"]);
    assert!(stdout(&md).starts_with("| delta |"));

    assert_eq!(run(&["compare", &scn]).status.code(), Some(1));
}

#[test]
fn generate_is_deterministic_and_renders() {
    let dir = tempfile::tempdir().unwrap();
    let a = run(&["generate", "-m", "15", "--bounds", "0,0,18,14", "-q", "3", "--seed", "1"]);
    let b = run(&["generate", "-m", "15", "--bounds", "0,0,18,14", "-q", "3", "--seed", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let empty = run(&["generate", "-m", "0", "--bounds", "0,0,3,4", "-q", "6"]);
    let scn = write(dir.path(), "empty.json", &stdout(&empty));
    let sol = dir.path().join("sol.json");
    let planned = run(&["plan", &scn, "--output", sol.to_str().unwrap()]);
    assert_eq!(planned.status.code(), Some(0));
    let svg = dir.path().join("empty.svg");
    let r = run(&["render", &scn, sol.to_str().unwrap(), "--output", svg.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0), "{}", stderr(&r));
    let text = fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<circle").count(), 2);
    assert_eq!(text.matches("<line").count(), 1);
}

#[test]
fn render_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let scn = write(dir.path(), "c.json", CHORD);
    let sol = dir.path().join("sol.json");
    run(&["plan", &scn, "--output", sol.to_str().unwrap()]);
    let one = dir.path().join("1.svg");
    let two = dir.path().join("2.svg");
    run(&["render", &scn, sol.to_str().unwrap(), "-o", one.to_str().unwrap()]);
    run(&["render", &scn, sol.to_str().unwrap(), "-o", two.to_str().unwrap()]);
    let one = fs::read(one).unwrap();
    assert!(!one.is_empty());
    assert_eq!(one, fs::read(two).unwrap());
}

#[test]
fn verify_reports_oracle_length() {
    let dir = tempfile::tempdir().unwrap();
    let scn = write(dir.path(), "c.json", CHORD);
    let out = run(&["verify", &scn, "--oracle-spacing", "0.02"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("oracle length:"));
    assert!(text.contains("same sequence:  true"));
}
