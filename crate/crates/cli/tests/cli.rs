use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn fibercox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibercox"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn pentagon_pipeline_certifies_first_group() {
    let dir = tempfile::tempdir().unwrap();
    let out = fibercox(&["pipeline", "--cycle", "5", "--iterations", "1", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let chain = json(&out);
    let it = &chain["iterations"][0];
    assert_eq!(it["vcd"]["value"], 2);
    assert_eq!(it["vcd"]["status"], "certified");
    assert_eq!(it["thickening"]["vertices"], 10);
    assert_eq!(it["legality"]["orbit"]["orbit"], 32);
    assert_eq!(it["group_certified"], true);
    let f: Vec<u64> = serde_json::from_value(it["quotient"]["properties"]["f_vector"].clone()).unwrap();
    assert_eq!(f, vec![1024, 5120, 6400, 2560, 320]);
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("chain.json")).unwrap()).unwrap();
    assert_eq!(saved, chain);
}

#[test]
fn four_cycle_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(
        dir.path(),
        "c4.json",
        r#"{"vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","d"],["d","a"]]}"#,
    );
    let out = fibercox(&["check-legal", "--complex", &c4]);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert_eq!(r["certified"], false);
    assert!(r["certificate"]["refusal"].as_str().unwrap().starts_with("not 5-large"));
}

#[test]
fn thicken_then_suite() {
    let dir = tempfile::tempdir().unwrap();
    let t1 = dir.path().join("t1.json");
    let out = fibercox(&["thicken", "--cycle", "5", "--out", t1.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["f_vector"], serde_json::json!([10, 25, 20, 5]));
    let out = fibercox(&["lemma-suite", "--complex", t1.to_str().unwrap(), "--level", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn quotient_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let x = dir.path().join("x.json");
    let out = fibercox(&["davis-quotient", "--cycle", "5", "--out", x.to_str().unwrap()]);
    // The 2-neighborhoods of this quotient are not contractible.
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert_eq!(r["properties"]["f_vector"], serde_json::json!([32, 80, 40]));
    assert_eq!(r["euler_characteristic"], -8);
    let out = fibercox(&["verify-properties", "--complex", x.to_str().unwrap()]);
    let r = json(&out);
    assert_eq!(r["cd"], 2);
    assert_eq!(r["no_isolated_corners"]["passed"], true);
    assert_eq!(r["no_disconnecting_cubes"]["passed"], true);
}

#[test]
fn vcd_and_family() {
    let out = fibercox(&["vcd", "--cycle", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["report"]["vcd"], 2);
    let out = fibercox(&["family-report", "--k", "5,6,7,8"]);
    assert_eq!(out.status.code(), Some(0));
    let gens: Vec<u64> = json(&out)["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["generators"].as_u64().unwrap())
        .collect();
    assert_eq!(gens, vec![10, 18, 28, 40]);
}

#[test]
fn deterministic_output() {
    let a = fibercox(&["pipeline", "--cycle", "6", "--seed", "7"]);
    let b = fibercox(&["pipeline", "--cycle", "6", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(fibercox(&["pipeline", "--bogus"]).status.code(), Some(1));
    assert_eq!(fibercox(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(fibercox(&["pipeline", "--cycle", "4"]).status.code(), Some(1));
    assert_eq!(fibercox(&["vcd", "--coeffs", "r", "--cycle", "5"]).status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{ not json");
    assert_eq!(fibercox(&["thicken", "--complex", &bad]).status.code(), Some(1));
    let missing = dir.path().join("missing.json");
    assert_eq!(fibercox(&["thicken", "--complex", missing.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn single_square_halts() {
    let dir = tempfile::tempdir().unwrap();
    let sq = write(
        dir.path(),
        "square.json",
        r#"{"vertices":["a","b","c","d"],"cubes":[{"dim":2,"verts":["a","b","c","d"]}]}"#,
    );
    let out = fibercox(&["pipeline", "--complex", &sq]);
    assert_eq!(out.status.code(), Some(2));
    let chain = json(&out);
    assert_eq!(chain["halted"]["step"], "verify input");
}
