use std::fs;
use std::process::{Command, Output};

use equicurv::CurvatureStatus;
use equicurv_cli::{AnalysisReport, CorpusReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equicurv")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn report(out: &Output) -> AnalysisReport {
    serde_json::from_slice(&out.stdout).expect("report parses")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn compute_cycle() {
    let out = run(&["compute", "--family", "cycle:6"]);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert_eq!(r.schema_version, "1");
    assert_eq!(r.curvature.k.as_ref().unwrap().0.to_string(), "2/3");
    assert_eq!(r.curvature.status, CurvatureStatus::ExactCanonical);
    assert_eq!(r.graph.diameter, 3);
    assert_eq!(r.graph.avdiam.0.to_string(), "3/2");
    assert!(r.theorems.is_empty());
}

#[test]
fn compute_knight_board_is_inconsistent() {
    let out = run(&["compute", "--family", "knight:7,7"]);
    assert_eq!(code(&out), 2);
    let r = report(&out);
    assert_eq!(r.curvature.status, CurvatureStatus::Inconsistent);
    assert!(r.curvature.w.is_none() && r.curvature.pseudo);
    let [lo, hi] = r.curvature.residual_range;
    assert!((lo - 46.42).abs() < 0.01 && (hi - 52.22).abs() < 0.01, "{lo} {hi}");
}

#[test]
fn compute_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.txt");
    fs::write(&path, "# path on three vertices\n0 1\n1 2\n").unwrap();
    let out = run(&["compute", "--edge-list", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["curvature"]["w"], serde_json::json!(["3/2", "0", "3/2"]));
    assert!(report(&out).graph.source.starts_with("edge-list:"));
}

#[test]
fn report_roundtrips() {
    for family in ["cycle:7", "multipartite:1,1,1,4", "path:6"] {
        let out = run(&["verify", "--family", family, "--seed", "4", "--invariance-samples", "100"]);
        let r = report(&out);
        let again: AnalysisReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(again, r);
    }
}

#[test]
fn compute_is_byte_identical() {
    let a = run(&["compute", "--family", "johnson:6,3"]);
    let b = run(&["compute", "--family", "johnson:6,3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_hypercube_all() {
    let out = run(&["verify", "--family", "hypercube:4", "--theorems", "all"]);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert_eq!(r.failures, 0);
    let bm = r.theorems.iter().find(|t| t.theorem == equicurv::TheoremId::BonnetMyers).unwrap();
    assert!(bm.has_equality() && bm.notes.iter().any(|n| n.contains("equality")));
}

#[test]
fn verify_complete_reverse() {
    let out = run(&["verify", "--family", "complete:5", "--theorems", "reverse_bm"]);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert_eq!(r.theorems.len(), 1);
    assert!(r.theorems[0].has_equality());
    assert!(r.theorems[0].notes.iter().any(|n| n.contains("complete graph")));
}

#[test]
fn verify_path_lichnerowicz_unmet() {
    let out = run(&["verify", "--family", "path:4", "--theorems", "lichnerowicz"]);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert!(!r.theorems[0].hypothesis_satisfied);
}

#[test]
fn verify_inconsistent_graph_passes() {
    let out = run(&["verify", "--family", "multipartite:1,1,1,1,3", "--invariance-samples", "10"]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out).failures, 0);
}

#[test]
fn errors_exit_one() {
    let out = run(&["compute", "--family", "nonsense:3"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("johnson:N,K"));

    assert_eq!(code(&run(&["compute"])), 1);
    assert_eq!(code(&run(&["compute", "--family", "cycle:5", "--edge-list", "x"])), 1);
    assert_eq!(code(&run(&["verify", "--family", "cycle:5", "--theorems", "bogus"])), 1);
    assert_eq!(code(&run(&["corpus", "--n-range", "9..3"])), 1);
    assert_eq!(code(&run(&["corpus", "--count", "1", "--p", "0"])), 1);

    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.txt");
    let out = run(&["compute", "--edge-list", missing.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("missing.txt"));

    let disconnected = dir.path().join("two.txt");
    fs::write(&disconnected, "0 1\n2 3\n").unwrap();
    let out = run(&["compute", "--edge-list", disconnected.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("disconnected"));

    let malformed = dir.path().join("bad.txt");
    fs::write(&malformed, "0 1\n1 two\n").unwrap();
    let out = run(&["export-dot", "--edge-list", malformed.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));
}

#[test]
fn help_and_version_exit_zero() {
    let out = run(&["--help"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("name:arg1,arg2"));
    assert_eq!(code(&run(&["--version"])), 0);
}

#[test]
fn corpus_complete_graph() {
    let out = run(&["corpus", "--count", "1", "--n-range", "5..5", "--p", "1.0", "--json-lines"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    let rec: equicurv::corpus::GraphRecord = serde_json::from_str(lines[0]).unwrap();
    assert_eq!((rec.n, rec.edges, rec.diameter), (5, 10, 1));
    let summary: CorpusReport = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(summary.summary.count, 1);
    assert_eq!(summary.summary.total_failures, 0);
}

#[test]
fn corpus_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for path in [&a, &b] {
        let out = run(&["corpus", "--count", "30", "--n-range", "5..20", "--seed", "7", "--invariance-samples", "200", "--out", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
        assert!(out.stdout.is_empty());
    }
    let (ta, tb) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let parsed: CorpusReport = serde_json::from_slice(&ta).unwrap();
    assert_eq!(parsed.summary.count, 30);
    assert_eq!(serde_json::from_str::<CorpusReport>(&serde_json::to_string(&parsed).unwrap()).unwrap(), parsed);
}

fn fill_colors(dot: &str) -> Vec<String> {
    dot.lines()
        .filter_map(|l| l.split("fillcolor=\"").nth(1))
        .map(|rest| rest[..7].to_string())
        .collect()
}

#[test]
fn dot_path_endpoints_red() {
    let out = run(&["export-dot", "--family", "path:5"]);
    assert_eq!(code(&out), 0);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph "));
    assert_eq!(fill_colors(&dot), ["#ff0000", "#ffffff", "#ffffff", "#ffffff", "#ff0000"]);
    assert!(dot.contains("tooltip=\"w = 5/4"));
    assert_eq!(dot.matches(" -- ").count(), 4);
}

#[test]
fn dot_cycle_uniform_and_star_blue() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c8.dot");
    let out = run(&["export-dot", "--family", "cycle:8", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let colors = fill_colors(&fs::read_to_string(&path).unwrap());
    assert_eq!(colors.len(), 8);
    assert!(colors.iter().all(|c| c == &colors[0] && c.starts_with("#ff")));

    // the centre of a star has curvature -4/3
    let out = run(&["export-dot", "--family", "multipartite:1,3"]);
    let colors = fill_colors(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(colors, ["#0000ff", "#ff0000", "#ff0000", "#ff0000"]);
}
