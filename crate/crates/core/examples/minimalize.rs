// Random in-class network, minimalized by edge deletion.

use hubnet::hub_count;
use hubnet::minimality::{is_minimal, minimalize_with};
use hubnet::random::random_in_class;

pub fn run_example() -> hubnet::Result<()> {
    let g = random_in_class(11, &[2, 3]);
    let m = minimalize_with(&g, None)?;
    println!(
        "edges {} -> {}, hubs {} -> {}",
        g.edge_count(),
        m.edge_count(),
        hub_count(&g).0,
        hub_count(&m).0
    );
    assert!(is_minimal(&m)?);
    assert!(hub_count(&m).0 <= 2 * 2 * 3);
    // a different deletion order may keep a different subgraph
    let other = minimalize_with(&g, Some(5))?;
    assert!(is_minimal(&other)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> hubnet::Result<()> {
    run_example()
}
