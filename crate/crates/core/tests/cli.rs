//! The `hubnet` binary: outputs, exit codes and determinism.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hubnet::io::parse_document;
use hubnet::minimality::is_minimal;
use hubnet::hub_count;

fn hubnet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hubnet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn generate_grid_reports_eighteen_hubs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json");
    let o = hubnet(&["generate", "--family", "grid", "--c1", "3", "--c2", "3", "--output", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("18 hubs"), "{}", stdout(&o));
    let g = parse_document(&fs::read_to_string(&out).unwrap()).unwrap().network;
    assert_eq!(hub_count(&g).0, 18);
}

#[test]
fn generate_to_stdout_matches_fixture() {
    let o = hubnet(&["generate", "--family", "example"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), fs::read_to_string(fixture("example_22.json")).unwrap());
}

#[test]
fn check_notes_minimal_reroutable_three_pairs() {
    let o = hubnet(&["check", "--input", fixture("reroutable_222.json").to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("minimal yet reroutable"), "{text}");
}

#[test]
fn check_two_pairs_prints_agreement() {
    let o = hubnet(&["check", "--input", fixture("grid_33.json").to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\"agree\": true"));
}

#[test]
fn parse_error_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"vertices\": [0,").unwrap();
    let o = hubnet(&["check", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = hubnet(&["check", "--input", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_of_class_input_exits_one() {
    // one path for a pair that demands two
    let doc = r#"{"vertices":[0,1,2],"edges":[{"id":0,"u":0,"v":2,"directed":true},{"id":1,"u":2,"v":1,"directed":true}],"pairs":[{"source":0,"sink":1,"demand":2}]}"#;
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("g.json");
    fs::write(&p, doc).unwrap();
    let o = hubnet(&["check", "--input", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn minimalize_writes_a_minimal_network() {
    let dir = tempfile::tempdir().unwrap();
    let (raw, min) = (dir.path().join("raw.json"), dir.path().join("min.json"));
    let o = hubnet(&["generate", "--family", "random", "--demands", "2,3", "--seed", "4", "--output", raw.to_str().unwrap()]);
    assert!(o.status.success());
    let o = hubnet(&["minimalize", "--input", raw.to_str().unwrap(), "--output", min.to_str().unwrap()]);
    assert!(o.status.success());
    let g = parse_document(&fs::read_to_string(&min).unwrap()).unwrap().network;
    assert!(is_minimal(&g).unwrap());
}

#[test]
fn represent_reports_decomposition() {
    let o = hubnet(&["represent", "--input", fixture("example_22.json").to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["delta"], 2);
    assert_eq!(v["report"]["paths"].as_array().unwrap().len(), 4);
    assert!(v["representation"]["edges"].is_array());
}

#[test]
fn interconnect_trace_is_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.jsonl");
    let input = fixture("grid_33.json");
    let o = hubnet(&["interconnect", "--input", input.to_str().unwrap(), "--trace", trace.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(&trace).unwrap();
    let events: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(events[0]["step"], "init");
    assert_eq!(events.last().unwrap()["step"], "terminate");
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["hubs"], 18);
    assert_eq!(report["bound"], 18);
}

#[test]
fn oracle_respects_size_guard_override() {
    let input = fixture("example_22.json");
    let o = hubnet(&["oracle", "--input", input.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["min_hubs"], 8);
    assert_eq!(v["holds"], true);
    let dir = tempfile::tempdir().unwrap();
    let raw = dir.path().join("raw.json");
    let o = hubnet(&["generate", "--family", "random", "--demands", "2,2", "--seed", "3", "--output", raw.to_str().unwrap()]);
    assert!(o.status.success());
    let o = hubnet(&["oracle", "--input", raw.to_str().unwrap(), "--max-edges", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("size-guard"));
}

#[test]
fn commands_are_deterministic() {
    for args in [
        &["generate", "--family", "random", "--demands", "2,2,1", "--seed", "9"][..],
        &["interconnect", "--input", fixture("example_22.json").to_str().unwrap(), "--trace"][..],
    ] {
        assert_eq!(hubnet(args).stdout, hubnet(args).stdout);
    }
}
