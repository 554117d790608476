use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const U3: &str = r#"{"factors":[{"n":3,"d":1,"sigma":[0],"twist":1}]}"#;
const GL2_WR_2: &str = r#"{"factors":[{"n":2,"d":2,"A_gens":[[1,0]],"sigma":[0,1]}]}"#;
const STEP3: &str = r#"{"factors":[{"n":2,"d":2,"A_gens":[[1,0]],"sigma":[1,0]}]}"#;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace { dir: tempfile::tempdir().expect("tempdir") }
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, body).expect("write spec");
        p
    }
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreathchar")).args(args).output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn data_rows(o: &Output) -> Vec<String> {
    stdout(o).lines().skip(1).filter(|l| !l.starts_with('#')).map(str::to_owned).collect()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn analyze_unitary_cube() {
    let ws = Workspace::new();
    let spec = ws.file("u3.json", U3);
    let o = run(&["analyze", "--spec", spec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let rows = data_rows(&o);
    assert_eq!(rows.len(), 1);
    assert!(rows[0].contains("unitary") && rows[0].contains("GU_3(q)"), "{rows:?}");
}

#[test]
fn analyze_json_has_schema() {
    let ws = Workspace::new();
    let spec = ws.file("u3.json", U3);
    let v = json(&run(&["analyze", "--spec", spec.to_str().unwrap(), "--out", "json"]));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["orbits"].as_array().map(Vec::len), Some(1));
}

#[test]
fn labels_gl2_wreath_two() {
    let ws = Workspace::new();
    let spec = ws.file("gl2wr2.json", GL2_WR_2);
    let o = run(&["labels", "--spec", spec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(data_rows(&o).len(), 5);
    let v = json(&run(&["labels", "--spec", spec.to_str().unwrap(), "--out", "json"]));
    assert_eq!(v["schema"], 1);
}

#[test]
fn verify_lemma51_step3() {
    let ws = Workspace::new();
    let spec = ws.file("step3.json", STEP3);
    let o = run(&["verify", "lemma51", "--spec", spec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn mtable_defaults_to_json() {
    let ws = Workspace::new();
    let spec = ws.file("gl2wr2.json", GL2_WR_2);
    let o = run(&[
        "mtable",
        "--spec",
        spec.to_str().unwrap(),
        "--levi",
        r#"{"compositions":[[1,1],[2]],"AL_gens":[]}"#,
        "--lambda",
        "[1]/[1];[2]",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert!(!v["entries"].as_array().expect("entries").is_empty());
}

#[test]
fn degrees_at_q() {
    let ws = Workspace::new();
    let spec = ws.file("u3.json", U3);
    let v = json(&run(&["degrees", "2", "--spec", spec.to_str().unwrap(), "--out", "json"]));
    assert_eq!(v["schema"], 1);
}

#[test]
fn seeded_runs_repeat() {
    let a = run(&["verify", "frobenius", "--seed", "7"]);
    let b = run(&["verify", "frobenius", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_errors_exit_two() {
    let ws = Workspace::new();
    let bad = ws.file("bad.json", r#"{"factors":[{"n":2,"d":2,"sigma":[0,0]}]}"#);
    assert_eq!(run(&["analyze", "--spec", bad.to_str().unwrap()]).status.code(), Some(2));
    let broken = ws.file("broken.json", "{");
    assert_eq!(run(&["labels", "--spec", broken.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--spec", "/nonexistent/spec.json"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nosuchsuite"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["labels"]).status.code(), Some(2));
}
