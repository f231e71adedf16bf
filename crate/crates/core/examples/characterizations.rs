// Minimality, non-reroutability and the absence of consistent cycles.
// They coincide for two pairs; with three pairs a minimal network can
// still be reroutable.

use hubnet::extremal::{grid_graph, reroutable_witness};
use hubnet::minimality::{deletable_private_edge, is_minimal, is_reroutable, characterization_agreement};
use hubnet::{Network, Path, PathSystem};

pub fn run_example() -> hubnet::Result<()> {
    let grid = grid_graph(2, 2)?;
    let report = characterization_agreement(&grid.network, &grid.systems)?;
    println!("grid(2,2): {report:?}");
    assert!(report.agree && report.minimal);

    // the first pair detours a -> c -> b although a -> b is shared
    let mut g = Network::new();
    let [s1, r1, s2, r2, a, b, c] = [(); 7].map(|_| g.add_vertex());
    g.add_pair(s1, r1, 1);
    g.add_pair(s2, r2, 1);
    for (x, y) in [(s1, a), (a, c), (c, b), (b, r1), (s2, a), (a, b), (b, r2)] {
        g.connect(x, y)?;
    }
    let phi = Path::through(&g, &[s1, a, c, b, r1])?;
    let psi = Path::through(&g, &[s2, a, b, r2])?;
    let systems = [PathSystem::new(&g, 0, vec![phi])?, PathSystem::new(&g, 1, vec![psi])?];
    let report = characterization_agreement(&g, &systems)?;
    println!("detour: {report:?}");
    println!(
        "first pair reroutable {}, deletable private edge {:?}",
        is_reroutable(&g, &systems, 0),
        deletable_private_edge(&g, &systems, 0)?
    );
    assert!(report.agree && !report.minimal);

    let w = reroutable_witness();
    let third = is_reroutable(&w.network, &w.systems, 2);
    println!("three pairs: minimal {}, third pair reroutable {third}", is_minimal(&w.network)?);
    assert!(is_minimal(&w.network)? && third);
    Ok(())
}

#[allow(dead_code)]
fn main() -> hubnet::Result<()> {
    run_example()
}
