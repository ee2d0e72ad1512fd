use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn irreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_irreg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn irreg_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_irreg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn gen_then_info_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("yoke.txt");
    let path = file.to_str().unwrap();
    let gen = irreg(&["gen", "yoke", "7", "5", "--out", path]);
    assert!(gen.status.success());
    assert!(stdout(&gen).is_empty());
    let info = json(&irreg(&["--format", "json", "info", path]));
    assert_eq!(info["n"], 12);
    assert_eq!(info["m"], 13);
    assert_eq!(info["zagreb"], 58);
    assert_eq!(info["irregularity"], 4);
}

#[test]
fn gen_json_lists_edges() {
    let g = json(&irreg(&["gen", "star", "4", "--format", "json"]));
    assert_eq!(g["n"], 4);
    assert_eq!(g["m"], 3);
    assert_eq!(g["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn gen_random_is_reproducible() {
    let a = irreg(&["gen", "random", "20", "0.3", "42"]);
    let b = irreg(&["gen", "random", "20", "0.3", "42"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("20 58\n"));
}

#[test]
fn bad_parameters_exit_four() {
    for args in [
        &["gen", "yoke", "2", "5"][..],
        &["gen", "random", "5", "1.5", "0"],
        &["gen", "path", "x"],
        &["gen", "cube", "3"],
        &["gen", "path"],
        &["study", "21"],
        &["nonsense"],
    ] {
        let o = irreg(args);
        assert_eq!(o.status.code(), Some(4), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn bad_tolerance_exits_four() {
    let o = irreg_stdin(&["bounds", "--tol", "0.5", "-"], "2 1\n0 1\n");
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn self_loop_exits_three_naming_the_vertex() {
    let o = irreg_stdin(&["info", "-"], "3 1\n2 2\n");
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains('2'));
}

#[test]
fn out_of_range_vertex_exits_three() {
    let o = irreg_stdin(&["info", "-"], "3 1\n0 3\n");
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn malformed_edge_list_exits_two_with_line() {
    let o = irreg_stdin(&["info", "-"], "3 2\n0 1\n1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn missing_file_is_an_io_error() {
    let o = irreg(&["info", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn empty_graph_reports_zeros() {
    let r = json(&irreg_stdin(&["--format", "json", "bounds", "-"], "0 0\n"));
    assert_eq!(r["irregularity"], 0);
    assert_eq!(r["empty_graph"], true);
    for key in ["albertson", "acd", "zhou_luo", "laplacian_new"] {
        assert_eq!(r[key]["raw"], 0.0);
        assert_eq!(r[key]["truncated"], 0);
    }
}

#[test]
fn merris_cap_on_yoke_uses_sixteen_thirds() {
    let edges = stdout(&irreg(&["gen", "yoke", "7", "5"]));
    let r = json(&irreg_stdin(&["--format", "json", "bounds", "--merris-cap", "-"], &edges));
    assert_eq!(r["lambda_source"], "merris-cap");
    assert!((r["lambda_max_used"].as_f64().unwrap() - 16.0 / 3.0).abs() < 1e-12);
    let expected = (2.0f64 * 13.0 * 10.0).sqrt() * (16.0f64 / 3.0 / 12.0).sqrt();
    assert!((r["laplacian_new"]["raw"].as_f64().unwrap() - expected).abs() < 1e-12);
}

#[test]
fn path_pendant_bound_is_tight() {
    let edges = stdout(&irreg(&["gen", "path", "10"]));
    let r = json(&irreg_stdin(&["--format", "json", "bounds", "-"], &edges));
    assert_eq!(r["irregularity"], 2);
    assert_eq!(r["tree_pendant"], 2);
    assert_eq!(r["tree_pendant_tight"], true);
}

#[test]
fn complete_graph_spectral_bounds_vanish() {
    let edges = stdout(&irreg(&["gen", "complete", "4"]));
    let r = json(&irreg_stdin(&["--format", "json", "bounds", "-"], &edges));
    assert_eq!(r["zhou_luo"]["raw"], 0.0);
    assert_eq!(r["laplacian_new"]["raw"], 0.0);
    assert_eq!(r["tree_pendant"], Value::Null);
}

#[test]
fn table_uses_six_decimals() {
    let edges = stdout(&irreg(&["gen", "path", "10"]));
    let o = irreg_stdin(&["bounds", "-"], &edges);
    let text = stdout(&o);
    assert!(text.contains("lambda_max 3.902113"), "{text}");
    assert!(text.contains("7.496027"), "{text}");
}

#[test]
fn ten_vertex_study_summary() {
    let o = irreg(&["study", "10"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().last(), Some("new_better=46 equal=18 tree_better=42"));
    assert_eq!(text.lines().count(), 1 + 106 + 1);

    let s = json(&irreg(&["--format", "json", "study", "10"]));
    assert_eq!(s["trees"], 106);
    assert_eq!(s["counts"]["new_better"], 46);
    assert_eq!(s["counts"]["equal"], 18);
    assert_eq!(s["counts"]["tree_better"], 42);
}

#[test]
fn study_csv_has_header_and_rows() {
    let o = irreg(&["--format", "csv", "study", "10"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("canonical_id,n,p,I,zl_raw,new_raw,new_trunc,pendant_bound,winner")
    );
    assert_eq!(lines.count(), 106);
}

#[test]
fn two_vertex_study_has_one_row() {
    let s = json(&irreg(&["--format", "json", "study", "2"]));
    assert_eq!(s["trees"], 1);
    assert_eq!(s["counts"]["new_better"], 1);
}

#[test]
fn t15_search_on_ten_vertices() {
    let r = json(&irreg(&["--format", "json", "t15", "--n", "10"]));
    let matches = r["matches"].as_array().unwrap();
    assert_eq!(matches.len(), 1);
    assert_eq!(matches[0]["laplacian_trunc"], 26);
    assert_eq!(matches[0]["pendant_bound"], 42);
}

#[test]
fn help_exits_zero() {
    assert_eq!(irreg(&["--help"]).status.code(), Some(0));
}
