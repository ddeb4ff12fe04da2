use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const K3: &str = "p 3 3\ne 1 2\ne 2 3\ne 1 3\n";
const P3: &str = "p 3 2\ne 1 2\ne 2 3\n";
const C4: &str = "p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n";
const K2: &str = "p 2 1\ne 1 2\n";
/// The 3-leaf star decomposition of the triangle.
const K3_BD: &str = "bd 4\nte 1 2\nte 1 3\nte 1 4\nleaf 2 1 2\nleaf 3 2 3\nleaf 4 1 3\n";

fn paramkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paramkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn record(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(text.lines().next().expect("one record")).unwrap()
}

/// All triples share the `A` element 0, so no two are disjoint.
fn crowded_3dm() -> String {
    let mut text = String::from("t 1 5 5 25\n");
    for b in 0..5 {
        for c in 0..5 {
            text.push_str(&format!("0 {b} {c}\n"));
        }
    }
    text
}

#[test]
fn solve_vc_degree_on_triangle_is_no() {
    let dir = TempDir::new().unwrap();
    let k3 = file(&dir, "k3.gr", K3);
    let out = paramkit(&["solve", "vc", "--algorithm", "degree", "--k", "2", s(&k3)]);
    assert_eq!(out.status.code(), Some(0));
    let out = paramkit(&["solve", "vc", "--algorithm", "degree", "--k", "1", s(&k3)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(record(&out)["answer"], "NO");
}

#[test]
fn every_vc_algorithm_agrees() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4.gr", C4);
    for alg in ["edge", "path", "degree", "compression", "kernel+degree", "decomp-dp"] {
        for (k, code) in [(1, 1), (2, 0)] {
            let out = paramkit(&["solve", "vc", "--algorithm", alg, "--k", &k.to_string(), s(&c4)]);
            assert_eq!(out.status.code(), Some(code), "{alg} k {k}");
        }
    }
}

#[test]
fn solve_kpath_on_p3() {
    let dir = TempDir::new().unwrap();
    let p3 = file(&dir, "p3.gr", P3);
    let out = paramkit(&["solve", "kpath", "--k", "3", "--delta", "0.01", "--seed", "7", s(&p3)]);
    assert_eq!(out.status.code(), Some(0));
    let r = record(&out);
    assert_eq!(r["answer"], "YES");
    assert_eq!(r["seed"], 7);
    assert_eq!(r["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn solve_vc_with_decomposition_file() {
    let dir = TempDir::new().unwrap();
    let k3 = file(&dir, "k3.gr", K3);
    let bd = file(&dir, "k3.bd", K3_BD);
    let out = paramkit(&["solve", "vc", "--algorithm", "decomp-dp", "--k", "2", "--bd", s(&bd), s(&k3)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(record(&out)["answer"], "YES");
    let out = paramkit(&["solve", "3col", "--bd", s(&bd), s(&k3)]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn other_problems() {
    let dir = TempDir::new().unwrap();
    let k3 = file(&dir, "k3.gr", K3);
    let c4 = file(&dir, "c4.gr", C4);
    let k2 = file(&dir, "k2.gr", K2);
    let cases: [(&[&str], &Path, i32); 8] = [
        (&["ds", "--k", "1"], &k3, 0),
        (&["ds", "--k", "1"], &c4, 1),
        (&["tripack", "--k", "1"], &k3, 0),
        (&["tripack", "--k", "1"], &c4, 1),
        (&["maxleaf", "--k", "2"], &c4, 0),
        (&["maxleaf", "--k", "3"], &c4, 1),
        (&["nonblocker", "--k", "1"], &k2, 0),
        (&["3col"], &c4, 0),
    ];
    for (args, input, code) in cases {
        let mut full = vec!["solve"];
        full.extend_from_slice(args);
        full.push(s(input));
        assert_eq!(paramkit(&full).status.code(), Some(code), "{full:?}");
    }
    let t = file(&dir, "crowded.3dm", &crowded_3dm());
    assert_eq!(paramkit(&["solve", "3dm", "--k", "1", s(&t)]).status.code(), Some(0));
    assert_eq!(paramkit(&["solve", "3dm", "--k", "2", s(&t)]).status.code(), Some(1));
}

#[test]
fn usage_and_format_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let k3 = file(&dir, "k3.gr", K3);
    let bad = file(&dir, "bad.gr", "p 2 1\ne 1 1\n");
    let runs: [&[&str]; 6] = [
        &["solve", "vc", "--algorithm", "colorcode", "--k", "1", s(&k3)],
        &["solve", "nope", "--k", "1", s(&k3)],
        &["solve", "vc", s(&k3)],
        &["solve", "vc", "--k", "1", s(&bad)],
        &["solve", "vc", "--k", "1", "/no/such/file.gr"],
        &["frobnicate"],
    ];
    for args in runs {
        assert_eq!(paramkit(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn kernelize_vc_on_c4() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4.gr", C4);
    let out = paramkit(&["kernelize", "vc", "--k", "2", s(&c4)]);
    assert_eq!(out.status.code(), Some(0));
    let r = record(&out);
    assert_eq!(r["reduced_size"], 4);
    assert_eq!(r["bound"], 4);
    assert_eq!(r["bound_met"], true);
    let written = fs::read_to_string(dir.path().join("c4.kernel.gr")).unwrap();
    assert!(written.starts_with("p 4 4"));
}

#[test]
fn kernelize_nonblocker_on_k2_is_decided_yes() {
    let dir = TempDir::new().unwrap();
    let k2 = file(&dir, "k2.gr", K2);
    let out = paramkit(&["kernelize", "nonblocker", "--k", "1", s(&k2)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(record(&out)["decided"], "YES");
}

#[test]
fn kernelize_3dm_respects_bound() {
    let dir = TempDir::new().unwrap();
    let big = file(&dir, "big.3dm", &crowded_3dm());
    let dest = dir.path().join("reduced.3dm");
    let out = paramkit(&["kernelize", "3dm", "--k", "2", "--output", s(&dest), s(&big)]);
    assert_eq!(out.status.code(), Some(0));
    let r = record(&out);
    assert_eq!(r["bound"], 15);
    assert!(r["reduced_size"].as_u64().unwrap() <= 15);
    assert_eq!(r["bound_met"], true);
    let text = fs::read_to_string(dest).unwrap();
    assert_eq!(text.lines().count() as u64, 1 + r["reduced_size"].as_u64().unwrap());
}

#[test]
fn generate_writes_parseable_graphs() {
    let dir = TempDir::new().unwrap();
    let dest = dir.path().join("grid.gr");
    assert_eq!(paramkit(&["generate", "grid:2x2", "--output", s(&dest)]).status.code(), Some(0));
    let out = paramkit(&["oracle", "vc", s(&dest)]);
    let r = record(&out);
    assert_eq!((r["n"].as_u64(), r["m"].as_u64(), r["value"].as_u64()), (Some(4), Some(4), Some(2)));
    assert_eq!(paramkit(&["generate", "spiral:3"]).status.code(), Some(2));
}

fn strip_timing(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| {
            let mut v: Value = serde_json::from_str(l).unwrap();
            v.as_object_mut().unwrap().remove("wall_ms");
            v
        })
        .collect()
}

#[test]
fn bench_is_deterministic_and_schema_stable() {
    for suite in ["vc-branching", "kernel-sizes", "colorcode-stats"] {
        let a = paramkit(&["bench", suite, "--seed", "1"]);
        let b = paramkit(&["bench", suite, "--seed", "1"]);
        assert_eq!(a.status.code(), Some(0));
        let (ra, rb) = (strip_timing(&a), strip_timing(&b));
        assert!(!ra.is_empty());
        assert_eq!(ra, rb, "{suite}");
        let first = String::from_utf8_lossy(&a.stdout).lines().next().unwrap().to_string();
        assert!(first.starts_with(&format!("{{\"schema\":1,\"suite\":\"{suite}\"")));
    }
    let nodes = strip_timing(&paramkit(&["bench", "vc-branching", "--seed", "1"]));
    assert!(nodes.iter().all(|r| r["metrics"]["nodes_expanded"].is_u64()));
}

#[test]
fn bench_to_unwritable_path_exits_2() {
    let out = paramkit(&["bench", "kernel-sizes", "--output", "/no/such/dir/out.jsonl"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(paramkit(&["bench", "unknown-suite"]).status.code(), Some(2));
}
