use std::fs;
use std::path::Path;
use std::process::Command;

use rainbow_core::cli::run;
use rainbow_core::graph::{EdgeColouring, Graph};
use rainbow_core::rainbow::verify_rainbow;
use tempfile::TempDir;

fn rainbow(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("rainbow").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn colour_threshold_on_a_star() {
    let dir = TempDir::new().unwrap();
    let star = Graph::star(4);
    let g = write(&dir, "star5.graph", &star.to_edge_list());
    let col_path = dir.path().join("star5.col");
    let (code, out, _) = rainbow(&["colour-threshold", &g, "--output", path_str(&col_path)]);
    assert_eq!(code, 0);
    assert_eq!(out, "case=pendant_three k=2 p=4 kraft=2/1 rc=4\n");
    let col = EdgeColouring::parse_for(&star, &fs::read_to_string(&col_path).unwrap()).unwrap();
    assert_eq!(col.colours_used(), 4);

    let (code, out, _) = rainbow(&["verify", &g, path_str(&col_path)]);
    assert_eq!(code, 0);
    assert!(out.starts_with("rainbow=yes"));

    // identical inputs give identical files
    let again = dir.path().join("again.col");
    rainbow(&["colour-threshold", &g, "--output", path_str(&again)]);
    assert_eq!(fs::read(&col_path).unwrap(), fs::read(&again).unwrap());
}

#[test]
fn verify_reports_a_witness() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p3.graph", "3 2\n1 2\n2 3\n");
    let bad = write(&dir, "bad.col", "3 2 1\n1 2 0\n2 3 0\n");
    let (code, out, _) = rainbow(&["verify", &g, &bad]);
    assert_eq!(code, 1);
    assert_eq!(out, "rainbow=no witness=1,3\n");
    let (code, out, _) = rainbow(&["--quiet", "verify", &g, &bad]);
    assert_eq!((code, out.as_str()), (1, ""));
}

#[test]
fn recognize_and_rc_exact() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "paw.graph", "4 4\n1 2\n1 3\n2 3\n3 4\n");
    let (code, out, _) = rainbow(&["recognize", &g]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "split: yes");
    assert_eq!(lines[1], "clique=3,1 independent=2,4");
    assert_eq!(lines[2], "threshold: yes");
    assert_eq!(lines[4], "chordal: yes");

    let (code, out, _) = rainbow(&["rc-exact", &g]);
    assert_eq!(code, 0);
    assert!(out.starts_with("rc=2 lower_bound=2\n"));

    let c4 = write(&dir, "c4.graph", "4 4\n1 2\n2 3\n3 4\n4 1\n");
    let (_, out, _) = rainbow(&["recognize", &c4]);
    assert_eq!(out, "split: no\nthreshold: no\nchordal: no\n");
    let (code, _, err) = rainbow(&["colour-split", &c4]);
    assert_eq!(code, 2);
    assert!(err.contains("not a split graph"));

    // k = 2 needs 2^4 states
    let (code, _, err) = rainbow(&["rc-exact", &c4, "--budget", "10"]);
    assert_eq!(code, 2);
    assert!(err.contains("budget"));
}

#[test]
fn colour_split_prints_report_and_colouring() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k13.graph", "4 3\n1 2\n3 1\n4 1\n");
    let (code, out, _) = rainbow(&["colour-split", &g]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "colours_used=3 lower_bound=3 upper_bound=4 p=3 d=2\n4 3 4\n1 2 1\n1 3 2\n1 4 3\n"
    );
}

#[test]
fn reduce_lift_extract_pipeline() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.hg", "3 1\n1 2 3\n");
    let (code, out, _) = rainbow(&["reduce", "--target", "chordal", "--k", "4", &h]);
    assert_eq!(code, 0, "{out}");
    let graph_path = dir.path().join("h.graph");
    let roles = dir.path().join("h.roles");
    assert!(out.contains("n=24") && out.contains("k=4 diameter=4"));

    let hcol = write(&dir, "h.hcol", "3\n1 0\n2 1\n3 2\n");
    let lifted = dir.path().join("h.col");
    let (code, out, _) = rainbow(&["lift", path_str(&roles), &hcol, "--output", path_str(&lifted)]);
    assert_eq!(code, 0);
    assert!(out.starts_with("colours=4"));

    let (code, _, _) = rainbow(&["verify", path_str(&graph_path), path_str(&lifted)]);
    assert_eq!(code, 0);
    let (g, col) = EdgeColouring::parse_file(&fs::read_to_string(&lifted).unwrap()).unwrap();
    assert!(verify_rainbow(&g, &col).unwrap().connected);

    let (code, out, _) = rainbow(&["extract", path_str(&roles), path_str(&lifted)]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("proper=yes n=8"));

    let (code, _, err) = rainbow(&["reduce", "--target", "split", "--k", "4", &h]);
    assert_eq!(code, 2);
    assert!(err.contains("k must be 3"));

    let mono = write(&dir, "mono.hcol", "3\n1 0\n2 0\n3 0\n");
    let (code, _, err) = rainbow(&["lift", path_str(&roles), &mono]);
    assert_eq!(code, 2);
    assert!(err.contains("monochromatic"));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "bad.graph", "3 2\n1 2\n");
    let (code, _, err) = rainbow(&["recognize", &g]);
    assert_eq!(code, 2);
    assert!(err.contains("expected 2 edge lines"));
    let (code, _, _) = rainbow(&["recognize"]);
    assert_eq!(code, 2);
}

#[test]
fn binary_runs_kraft() {
    let out = Command::new(env!("CARGO_BIN_EXE_rainbow"))
        .args(["kraft", "1", "2", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "sum=1/1 ok\ncodewords=0,10,11\n"
    );

    let out = Command::new(env!("CARGO_BIN_EXE_rainbow"))
        .args(["rc-exact", "/nonexistent"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_comes_from_the_environment() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.graph", "4 4\n1 2\n2 3\n3 4\n4 1\n");
    let out = Command::new(env!("CARGO_BIN_EXE_rainbow"))
        .args(["rc-exact", &g])
        .env("RAINBOW_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_rainbow"))
        .args(["rc-exact", &g, "--budget", "1000"])
        .env("RAINBOW_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("rc=2"));
}
