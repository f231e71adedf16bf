// Exhaustive minimum-hub search on a small random (2,2) network.

use hubnet::hub_count;
use hubnet::oracle::{check_bound, min_hub_subgraph};
use hubnet::random::oracle_corpus;

pub fn run_example() -> hubnet::Result<()> {
    let g = &oracle_corpus(3, 1, &[2, 2], 20)[0];
    let report = min_hub_subgraph(g, None)?;
    println!(
        "{} edges, {} hubs; {} minimal subgraphs, best has {} hubs",
        g.edge_count(),
        hub_count(g).0,
        report.num_minimal_subgraphs,
        report.min_hubs
    );
    let bound = check_bound(g, None)?;
    println!("bound {} holds: {}", bound.bound, bound.holds);
    assert!(bound.holds);
    Ok(())
}

#[allow(dead_code)]
fn main() -> hubnet::Result<()> {
    run_example()
}
