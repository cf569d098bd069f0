use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn domlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domlab")).args(args).env_remove("DOMLAB_THREADS").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

fn k7() -> String {
    let mut s = String::from("7 21\n");
    for u in 0..7 {
        for v in u + 1..7 {
            s.push_str(&format!("{u} {v}\n"));
        }
    }
    s
}

#[test]
fn predict_small_case() {
    let out = domlab(&["predict", "--n", "10", "--p", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["r_hat"], 1);
    assert_eq!(v["interval"], serde_json::json!([2, 3]));
    assert!(out.stderr.is_empty());
}

#[test]
fn predict_rejects_p_one() {
    let out = domlab(&["predict", "--n", "10", "--p", "1.0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let err = stderr(&out);
    assert_eq!(err.trim_end().lines().count(), 1);
    assert!(err.contains("q = 1/(1-p) is undefined"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["predict", "--n", "10"][..],
        &["predict", "--n", "10", "--p", "0.5", "--bogus", "1"],
        &["frobnicate"],
        &[],
        &["predict", "--n", "ten", "--p", "0.5"],
    ] {
        let out = domlab(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn solve_complete_graph() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k7.el", &k7());
    let out = domlab(&["solve", "--input", &input]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["size"], 1);
    assert_eq!(v["status"], "exact");
    assert_eq!(v["witness"]["n"], 7);
}

#[test]
fn solve_with_cap() {
    let dir = tempfile::tempdir().unwrap();
    // C6: D = 2
    let input = write(dir.path(), "c6.el", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    let below = json(&domlab(&["solve", "--input", &input, "--cap", "1"]));
    assert_eq!(below["status"], "exact");
    assert_eq!(below["size"], 2);
    let within = json(&domlab(&["solve", "--input", &input, "--cap", "3"]));
    assert_eq!(within["status"], "upper_bound_only");
    assert!(within["size"].as_u64().unwrap() <= 3);
}

#[test]
fn solve_reports_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    for (name, body, line) in [
        ("loop.el", "3 1\n1 1\n", "line 2"),
        ("range.el", "3 1\n0 9\n", "line 2"),
        ("dup.el", "3 2\n0 1\n1 0\n", "line 3"),
    ] {
        let input = write(dir.path(), name, body);
        let out = domlab(&["solve", "--input", &input]);
        assert_eq!(out.status.code(), Some(1), "{name}");
        assert!(out.stdout.is_empty());
        assert!(stderr(&out).contains(line), "{name}: {}", stderr(&out));
    }
    let missing = domlab(&["solve", "--input", "/nonexistent/graph.el"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn sample_is_reproducible_and_solvable() {
    let dir = tempfile::tempdir().unwrap();
    let a = domlab(&["sample", "--n", "40", "--p", "0.3", "--seed", "5"]);
    let b = domlab(&["sample", "--n", "40", "--p", "0.3", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let file = dir.path().join("g.el");
    let c = domlab(&["sample", "--n", "40", "--p", "0.3", "--seed", "5", "--out", file.to_str().unwrap()]);
    assert_eq!(c.status.code(), Some(0));
    assert!(c.stdout.is_empty());
    assert_eq!(std::fs::read(&file).unwrap(), a.stdout);
    let solved = json(&domlab(&["solve", "--input", file.to_str().unwrap()]));
    assert_eq!(solved["status"], "exact");
}

const CONFIG: &str = r#"{"kind": "deletion", "n": 50, "p": 0.3, "trials": 20, "master_seed": 8, "x": 0.5}"#;

#[test]
fn experiment_writes_reports_independent_of_threads() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "cfg.json", CONFIG);
    let out_dir = dir.path().to_str().unwrap();
    let one = domlab(&["experiment", "--config", &cfg, "--out-dir", out_dir]);
    assert_eq!(one.status.code(), Some(0), "{}", stderr(&one));
    let four = domlab(&["experiment", "--config", &cfg, "--threads", "4", "--out-dir", out_dir]);
    assert_eq!(one.stdout, four.stdout);
    let v = json(&one);
    assert_eq!(v["records"].as_array().unwrap().len(), 20);
    assert_eq!(v["config"]["kind"], "deletion");
    let written = std::fs::read(dir.path().join("deletion-n50-seed8.json")).unwrap();
    assert_eq!(written, one.stdout);
    let csv = std::fs::read_to_string(dir.path().join("deletion-n50-seed8.csv")).unwrap();
    assert!(csv.starts_with("trial_index,seed,status,D,witness_size,crucial_count,survived,millis\n"));
    assert_eq!(csv.lines().count(), 21);

    let as_csv = domlab(&["experiment", "--config", &cfg, "--out-dir", out_dir, "--format", "csv"]);
    assert!(String::from_utf8(as_csv.stdout).unwrap().starts_with("trial_index,"));
}

#[test]
fn thread_environment_variable() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "cfg.json", CONFIG);
    let out_dir = dir.path().to_str().unwrap();
    let run = |env: &str, extra: &[&str]| {
        let mut args = vec!["experiment", "--config", &cfg, "--out-dir", out_dir];
        args.extend_from_slice(extra);
        Command::new(env!("CARGO_BIN_EXE_domlab")).args(&args).env("DOMLAB_THREADS", env).output().unwrap()
    };
    let by_env = run("3", &[]);
    assert_eq!(by_env.status.code(), Some(0));
    assert!(stderr(&by_env).contains("threads=3"));
    let overridden = run("3", &["--threads", "2"]);
    assert!(stderr(&overridden).contains("threads=2"));
    assert_eq!(by_env.stdout, overridden.stdout);
    assert_eq!(run("lots", &[]).status.code(), Some(2));
    assert_eq!(run("lots", &["--threads", "1"]).status.code(), Some(0));
}

#[test]
fn experiment_domain_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().to_str().unwrap();
    for (name, body) in [
        ("zero.json", r#"{"kind": "concentration", "n": 20, "p": 0.5, "trials": 0, "master_seed": 1}"#),
        ("knob.json", r#"{"kind": "concentration", "n": 20, "p": 0.5, "trials": 2, "master_seed": 1, "x": 1.0}"#),
        ("unknown.json", r#"{"kind": "concentration", "n": 20, "p": 0.5, "trials": 2, "master_seed": 1, "y": 1}"#),
        ("garbage.json", "not json"),
    ] {
        let cfg = write(dir.path(), name, body);
        let out = domlab(&["experiment", "--config", &cfg, "--out-dir", out_dir]);
        assert_eq!(out.status.code(), Some(1), "{name}");
        assert!(out.stdout.is_empty());
        assert_eq!(stderr(&out).trim_end().lines().count(), 1, "{name}: {}", stderr(&out));
    }
}
