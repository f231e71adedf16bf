//! Checked-in fixtures match the generators byte for byte and parse back.

use std::fs;
use std::path::Path;

use hubnet::cuts::in_class;
use hubnet::extremal::{grid_graph, reroutable_witness, witness_222, worked_example};
use hubnet::io::{parse_document, serialize_routed};
use hubnet::minimality::is_minimal;
use hubnet::RoutedNetwork;

fn fixture(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    fs::read_to_string(path).expect("fixture exists")
}

fn assert_matches(name: &str, generated: RoutedNetwork) {
    let text = fixture(name);
    assert_eq!(text, serialize_routed(&generated), "{name} is stale");
    let parsed = parse_document(&text).unwrap().routed().unwrap();
    assert_eq!(parsed, generated);
    assert!(in_class(&parsed.network));
    assert!(is_minimal(&parsed.network).unwrap());
}

#[test]
fn worked_example_fixture() {
    assert_matches("example_22.json", worked_example());
}

#[test]
fn twelve_hub_witness_fixture() {
    assert_matches("witness_222.json", witness_222());
}

#[test]
fn reroutable_witness_fixture() {
    assert_matches("reroutable_222.json", reroutable_witness());
}

#[test]
fn grid_fixture() {
    assert_matches("grid_33.json", grid_graph(3, 3).unwrap());
}
