// Extremal generators and the finiteness bound.

use hubnet::extremal::{finiteness_bound, grid_graph, ones_graph, witness_222};
use hubnet::hub_count;
use hubnet::minimality::is_minimal;

pub fn run_example() -> hubnet::Result<()> {
    for (c1, c2) in [(1, 1), (2, 2), (3, 3), (2, 5)] {
        let g = grid_graph(c1, c2)?.network;
        println!("grid({c1},{c2}): {} hubs", hub_count(&g).0);
        assert_eq!(hub_count(&g).0, (2 * c1 * c2) as usize);
    }
    for n in 0..=3 {
        let g = ones_graph(2, 3, n)?.network;
        println!("ones(2,3,{n}): {} hubs, minimal {}", hub_count(&g).0, is_minimal(&g)?);
    }
    let w = witness_222().network;
    println!("(2,2,2) witness: {} hubs", hub_count(&w).0);
    for d in [vec![4], vec![3, 4], vec![2, 2, 2], vec![2, 2, 2, 2]] {
        println!("bound {d:?} = {}", finiteness_bound(&d)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hubnet::Result<()> {
    run_example()
}
