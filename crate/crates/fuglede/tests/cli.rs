use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn fuglede(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fuglede")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn set_file(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_pair_is_symmetric() {
    let dir = TempDir::new().unwrap();
    let a = set_file(&dir, "a", "2 2\n0 0\n0 2\n");
    let b = set_file(&dir, "b", "2 2\n0 0\n0 1\n");
    let c = set_file(&dir, "c", "2 2\n0 0\n1 0\n");
    for (x, y, want) in [(&a, &b, 0), (&a, &c, 1)] {
        let fwd = fuglede(&["check-pair", s(x), s(y), "--mode", "spectral"]);
        let back = fuglede(&["check-pair", s(y), s(x), "--mode", "spectral"]);
        assert_eq!(code(&fwd), want, "{}", stdout(&fwd));
        assert_eq!(code(&back), want, "{}", stdout(&back));
    }
    let d = set_file(&dir, "d", "2 2\n0 0\n0 1\n1 0\n1 1\n");
    for (x, y) in [(&a, &d), (&d, &a)] {
        let tiles = fuglede(&["check-pair", s(x), s(y), "--mode", "tiling"]);
        assert_eq!(code(&tiles), 0, "{}", stdout(&tiles));
    }
    assert_eq!(code(&fuglede(&["check-pair", s(&a), s(&b), "--mode", "tiling"])), 1);
}

#[test]
fn spectrum_output_round_trips_through_check_pair() {
    let dir = TempDir::new().unwrap();
    let a = set_file(&dir, "a", "# a coset of the order 3 subgroup\n3 2\n0 0\n0 3\n0 6\n");
    let out = dir.path().join("spec");
    let r = fuglede(&["--json", "spectrum", s(&a), "--out", s(&out)]);
    assert_eq!(code(&r), 0, "{}", String::from_utf8_lossy(&r.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&r)).unwrap();
    assert!(doc.is_object());
    let pair = fuglede(&["check-pair", s(&a), s(&out), "--mode", "spectral"]);
    assert_eq!(code(&pair), 0);

    let comp = dir.path().join("comp");
    let r = fuglede(&["complement", s(&a), "--spectrum", s(&out), "--out", s(&comp)]);
    assert_eq!(code(&r), 0);
    assert_eq!(code(&fuglede(&["check-pair", s(&a), s(&comp), "--mode", "tiling"])), 0);
}

#[test]
fn bad_input_exits_with_usage() {
    let dir = TempDir::new().unwrap();
    let dup = set_file(&dir, "dup", "2 2\n0 1\n0 1\n");
    let empty = set_file(&dir, "empty", "2 2\n");
    let range = set_file(&dir, "range", "2 2\n2 0\n");
    let ok = set_file(&dir, "ok", "2 2\n0 1\n");
    for f in [&dup, &empty, &range] {
        let r = fuglede(&["analyze", s(f)]);
        assert_eq!(code(&r), 2, "{}", s(f));
        assert!(!r.stderr.is_empty());
    }
    assert_eq!(code(&fuglede(&["analyze", s(&ok), "--p", "3"])), 2);
    assert_eq!(code(&fuglede(&["analyze", s(&dir.path().join("missing"))])), 2);
    assert_eq!(code(&fuglede(&["enumerate", "--p", "4", "--n", "1"])), 2);
    assert_eq!(code(&fuglede(&["analyze", s(&ok), "--p", "2", "--n", "2"])), 0);
}

#[test]
fn enumerate_reports_capacity_and_is_deterministic() {
    assert_eq!(code(&fuglede(&["enumerate", "--p", "2", "--n", "5"])), 3);
    assert_eq!(code(&fuglede(&["oracle-compare", "--p", "2", "--n", "16", "--trials", "1"])), 3);

    let dir = TempDir::new().unwrap();
    let one = dir.path().join("one.json");
    let many = dir.path().join("many.json");
    let r = fuglede(&["enumerate", "--p", "2", "--n", "2", "--out", s(&one)]);
    assert_eq!(code(&r), 0);
    assert!(String::from_utf8_lossy(&r.stderr).contains("wall_time"));
    assert_eq!(code(&fuglede(&["enumerate", "--p", "2", "--n", "2", "--shards", "7", "--out", s(&many)])), 0);
    assert_eq!(std::fs::read(&one).unwrap(), std::fs::read(&many).unwrap());
    let doc: serde_json::Value = serde_json::from_slice(&std::fs::read(&one).unwrap()).unwrap();
    assert_eq!(doc["tiles"], doc["spectral"]);
}

#[test]
fn search_finds_partners() {
    let dir = TempDir::new().unwrap();
    let a = set_file(&dir, "a", "2 2\n0 0\n1 1\n");
    let found = dir.path().join("found");
    assert_eq!(code(&fuglede(&["search", s(&a), "--kind", "complement", "--out", s(&found)])), 0);
    assert_eq!(code(&fuglede(&["check-pair", s(&a), s(&found), "--mode", "tiling"])), 0);
    assert_eq!(code(&fuglede(&["search", s(&a), "--kind", "spectrum", "--out", s(&found)])), 0);
    assert_eq!(code(&fuglede(&["check-pair", s(&a), s(&found), "--mode", "spectral"])), 0);
}
