use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::Instant;

use ccl_core::io::{PolyFile, TreeDump};

const DISK: &str = r#"{ "dim": 2, "degree": [2, 2], "box": [[-1, 1], [-1, 1]],
    "basis": "power", "coeffs": [-0.25, 0, 1, 0, 0, 0, 1, 0, 0] }"#;
const HALF_PLANE: &str = r#"{ "dim": 2, "degree": [1, 0], "box": [[-1, 1], [-1, 1]],
    "basis": "power", "coeffs": [0, 1] }"#;
const CONSTANT: &str = r#"{ "dim": 2, "degree": [0, 0], "box": [[0, 1], [0, 1]],
    "basis": "bernstein", "coeffs": [2] }"#;

fn ccl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccl")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn file(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, contents).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn build_dump(dir: &Path, poly: &str, depth: &str) -> PathBuf {
    let input = file(dir, "poly.json", poly);
    let dump = dir.join("tree.json");
    let o = ccl(&["build", s(&input), "--max-depth", depth, "--out", s(&dump)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    dump
}

#[test]
fn constant_builds_one_certified_leaf() {
    let dir = tempfile::tempdir().unwrap();
    let input = file(dir.path(), "c.json", CONSTANT);
    let o = ccl(&["build", s(&input)]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("1 leaf, certified\n"), "{}", stdout(&o));
}

#[test]
fn bad_input_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let broken = file(dir.path(), "b.json", "{ not json");
    assert_eq!(ccl(&["build", s(&broken)]).status.code(), Some(1));
    let five = file(
        dir.path(),
        "five.json",
        r#"{"dim":5,"degree":[0,0,0,0,0],"box":[[0,1],[0,1],[0,1],[0,1],[0,1]],"basis":"bernstein","coeffs":[1]}"#,
    );
    let o = ccl(&["build", s(&five)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("dimension 5"));
}

#[test]
fn half_plane_queries() {
    let dir = tempfile::tempdir().unwrap();
    let dump = build_dump(dir.path(), HALF_PLANE, "4");
    let points = file(dir.path(), "pts.csv", "-0.5,0\n0.5,0\n0.5,0\n0,0.3\n");
    let o = ccl(&["query", s(&dump), s(&points)]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 4);
    assert_ne!(rows[0][1], rows[1][1]);
    assert_eq!(rows[1][1], rows[2][1]);
    assert_eq!(rows[3], vec!["3", "", "on-zero-set"]);
}

#[test]
fn query_outside_domain_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let dump = build_dump(dir.path(), HALF_PLANE, "2");
    let points = file(dir.path(), "pts.csv", "2.0,0\n");
    assert_eq!(ccl(&["query", s(&dump), s(&points)]).status.code(), Some(1));
}

#[test]
fn dump_round_trip_matches_in_process_labels() {
    let dir = tempfile::tempdir().unwrap();
    let dump = build_dump(dir.path(), DISK, "6");
    let grid: Vec<[f64; 2]> =
        (0..15).flat_map(|i| (0..15).map(move |j| [-0.97 + 0.13 * i as f64, -0.96 + 0.131 * j as f64])).collect();
    let csv: String = grid.iter().map(|x| format!("{},{}\n", x[0], x[1])).collect();
    let points = file(dir.path(), "pts.csv", &csv);
    let out = dir.path().join("labels.csv");
    assert!(ccl(&["query", s(&dump), s(&points), "--out", s(&out)]).status.success());

    let poly = PolyFile::from_json(DISK).unwrap().to_bernstein().unwrap();
    let tol = ccl_core::Tolerance::default_for(&poly);
    let st = ccl_core::Labeling::build(poly, 6, tol).unwrap();
    let loaded = TreeDump::from_json(&fs::read_to_string(&dump).unwrap()).unwrap().to_labeling().unwrap();
    let text = fs::read_to_string(&out).unwrap();
    for (x, line) in grid.iter().zip(text.lines().skip(1)) {
        let label = line.split(',').nth(1).unwrap();
        assert_eq!(label, st.label_of(x).unwrap().to_string());
        assert_eq!(label, loaded.label_of(x).unwrap().to_string());
    }
}

#[test]
fn render_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let dump = build_dump(dir.path(), DISK, "5");
    let (a, b) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
    for out in [&a, &b] {
        assert!(ccl(&["render", s(&dump), "--res", "64", "--seed", "9", "--out", s(out)]).status.success());
    }
    let svg = fs::read_to_string(&a).unwrap();
    assert_eq!(svg, fs::read_to_string(&b).unwrap());
    assert!(svg.starts_with("<svg") && svg.contains(r#"id="zero-set""#) && svg.contains(r#"id="tree""#));
    // Inside and outside of the disk: two fill colors.
    let fills: std::collections::BTreeSet<&str> =
        svg.lines().filter(|l| l.contains("height=\"1\"")).filter_map(|l| l.split("fill=\"").nth(1)).collect();
    assert_eq!(fills.len(), 2);
    let other = dir.path().join("c.svg");
    assert!(ccl(&["render", s(&dump), "--res", "64", "--seed", "10", "--out", s(&other)]).status.success());
    assert_ne!(svg, fs::read_to_string(&other).unwrap());
}

#[test]
fn render_constant_is_one_color_and_one_cell() {
    let dir = tempfile::tempdir().unwrap();
    let dump = build_dump(dir.path(), CONSTANT, "4");
    let out = dir.path().join("c.svg");
    assert!(ccl(&["render", s(&dump), "--res", "64", "--out", s(&out)]).status.success());
    let svg = fs::read_to_string(&out).unwrap();
    assert_eq!(svg.lines().filter(|l| l.contains("height=\"1\"")).count(), 64);
    let tree: Vec<&str> = svg.split(r#"<g id="tree""#).nth(1).unwrap().lines().filter(|l| l.starts_with("<rect")).collect();
    assert_eq!(tree, vec![r#"<rect x="0" y="0" width="64" height="64"/>"#]);
}

#[test]
fn render_rejects_low_resolution_and_3d() {
    let dir = tempfile::tempdir().unwrap();
    let dump = build_dump(dir.path(), DISK, "2");
    let out = dir.path().join("x.svg");
    assert_eq!(ccl(&["render", s(&dump), "--res", "32", "--out", s(&out)]).status.code(), Some(1));
    let cube = r#"{"dim":3,"degree":[1,0,0],"box":[[-1,1],[-1,1],[-1,1]],"basis":"power","coeffs":[0,1]}"#;
    let dump3 = build_dump(dir.path(), cube, "2");
    assert_eq!(ccl(&["render", s(&dump3), "--out", s(&out)]).status.code(), Some(1));
}

#[test]
fn tiny_sweep_is_quick() {
    let dir = tempfile::tempdir().unwrap();
    let config = file(dir.path(), "cfg.json", r#"{"dim": 2, "count": 10, "min_depth": 2, "max_depth": 3, "oracle_res": 128}"#);
    let csv = dir.path().join("rows.csv");
    let t = Instant::now();
    let o = ccl(&["sweep", s(&config), "--out", s(&csv)]);
    assert!(t.elapsed().as_secs_f64() < 5.0);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    for line in text.lines().skip(2) {
        let cols: Vec<f64> = line.split_whitespace().skip(1).take(3).map(|v| v.parse().unwrap()).collect();
        assert!((cols.iter().sum::<f64>() - 100.0).abs() < 0.05, "{line}");
    }
    assert!(fs::read_to_string(&csv).unwrap().starts_with("seed,index,max_depth,outcome"));
}

#[test]
fn verify_trifolium_glues() {
    let dir = tempfile::tempdir().unwrap();
    assert!(ccl(&["corpus", "--name", "trifolium", "--out", s(dir.path())]).status.success());
    let input = dir.path().join("trifolium.json");
    let o = ccl(&["build", s(&input), "--max-depth", "6"]);
    let text = stdout(&o);
    assert!(text.starts_with(&format!("{} leaves, not certified", text.split(' ').next().unwrap())));
    assert!(!text.contains("not-simply-connected 0"));
    let o = ccl(&["verify", s(&input), "--max-depth", "6", "--res", "400"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("outcome: glued"), "{}", stdout(&o));
}

#[test]
fn unknown_corpus_case_is_rejected() {
    assert_eq!(ccl(&["corpus", "--name", "nope"]).status.code(), Some(1));
}
