// Minimum vertex cuts and disjoint paths on the worked two-pair network.

use hubnet::cuts::{in_class, min_vertex_cut, vertex_disjoint_paths};
use hubnet::extremal::worked_example;

pub fn run_example() -> hubnet::Result<()> {
    let g = worked_example().network;
    for (i, pair) in g.pairs().iter().enumerate() {
        let cut = min_vertex_cut(&g, i)?;
        println!(
            "pair {i}: demand {}, cut {} via {:?}",
            pair.demand, cut.value, cut.separator
        );
        let system = vertex_disjoint_paths(&g, i, pair.demand)?.expect("the cut meets the demand");
        for p in system.paths() {
            println!("  {:?}", p.vertices());
        }
    }
    assert!(in_class(&g));
    Ok(())
}

#[allow(dead_code)]
fn main() -> hubnet::Result<()> {
    run_example()
}
