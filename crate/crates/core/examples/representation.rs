// Degree-3 representation and its alternating-path decomposition.

use hubnet::extremal::{grid_graph, worked_example};
use hubnet::representation::{decompose_private, to_representation};

pub fn run_example() -> hubnet::Result<()> {
    for (name, r) in [("worked example", worked_example()), ("grid(2,3)", grid_graph(2, 3)?)] {
        let rep = to_representation(&r)?;
        let dec = decompose_private(&rep)?;
        println!("{name}: {:?}, delta {}", rep.stage_hubs, dec.delta);
        for p in &dec.paths {
            println!(
                "  {:?} edges {:?} upper {:?} lower {:?} choke {:?}",
                p.kind, p.edges, p.upper, p.lower, p.choke
            );
        }
        assert!(rep.violations().is_empty());
        let (c1, c2) = (r.network.pairs()[0].demand, r.network.pairs()[1].demand);
        assert_eq!(dec.paths.len(), (c1 + c2) as usize);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hubnet::Result<()> {
    run_example()
}
