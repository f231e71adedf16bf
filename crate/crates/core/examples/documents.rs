// JSON round trip and Graphviz export.

use hubnet::extremal::grid_graph;
use hubnet::io::{export_dot, parse_document, serialize_routed};

pub fn run_example() -> hubnet::Result<()> {
    let r = grid_graph(1, 2)?;
    let text = serialize_routed(&r);
    println!("{text}");
    let back = parse_document(&text)?.routed().expect("systems were written");
    assert_eq!(back, r);
    println!("{}", export_dot(&r.network, Some(&r.systems)));
    Ok(())
}

#[allow(dead_code)]
fn main() -> hubnet::Result<()> {
    run_example()
}
