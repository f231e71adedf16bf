use super::*;
use crate::extremal::{grid_graph, worked_example};
use crate::graph::{Network, Path, PathSystem, RoutedNetwork};

fn two_terminal_pairs(g: &mut Network) -> [VertexId; 4] {
    let [s1, r1, s2, r2] = [(); 4].map(|_| g.add_vertex());
    g.add_pair(s1, r1, 1);
    g.add_pair(s2, r2, 1);
    [s1, r1, s2, r2]
}

fn routed(g: Network, phi: &[&[VertexId]], psi: &[&[VertexId]]) -> RoutedNetwork {
    let sys = |i, seqs: &[&[VertexId]]| {
        let paths = seqs.iter().map(|s| Path::through(&g, s).unwrap()).collect();
        PathSystem::new(&g, i, paths).unwrap()
    };
    let systems = vec![sys(0, phi), sys(1, psi)];
    RoutedNetwork::new(g, systems).unwrap()
}

#[test]
fn worked_example_is_already_a_representation() {
    let r = worked_example();
    let rep = to_representation(&r).unwrap();
    assert!(rep.violations().is_empty(), "{:?}", rep.violations());
    assert_eq!(structural_signature(&rep.routed()), structural_signature(&r));
    assert_eq!(rep.hub_count(), 8);
}

#[test]
fn worked_example_decomposes_into_four_paths() {
    let rep = to_representation(&worked_example()).unwrap();
    let dec = decompose_private(&rep).unwrap();
    assert_eq!(dec.paths.len(), 4);
    assert_eq!(dec.delta, 2);
    assert_eq!(dec.kind_counts(), [2, 2, 0, 0]);
    // S1 -> x <- b -> c <- S2, choke c
    let long = dec
        .paths
        .iter()
        .find(|p| p.kind == PathKind::S1S2 && p.edges.len() == 4)
        .unwrap();
    let e = |k: u32| EdgeId(k - 1);
    assert_eq!(long.edges, vec![e(4), e(6), e(7), e(5)]);
    assert!(long.edge_is_right_of(e(7), e(6)));
    let (b, c) = (VertexId(5), VertexId(6));
    assert!(long.is_right_of(c, b));
    assert_eq!(long.choke, Some(c));
    assert_eq!(long.upper, vec![b]);
}

#[test]
fn relay_chain_becomes_one_edge() {
    let mut g = Network::new();
    let [s1, r1, s2, r2] = two_terminal_pairs(&mut g);
    let [a, b, h, k] = [(); 4].map(|_| g.add_vertex());
    for (x, y) in [(s1, a), (a, b), (b, h), (h, k), (k, r1), (s2, h), (h, k), (k, r2)] {
        if g.incident(x).all(|e| e.opposite(x) != Some(y)) {
            g.connect(x, y).unwrap();
        }
    }
    let r = routed(g, &[&[s1, a, b, h, k, r1]], &[&[s2, h, k, r2]]);
    let rep = to_representation(&r).unwrap();
    assert!(!rep.graph.contains_vertex(a));
    assert!(!rep.graph.contains_vertex(b));
    assert!(rep.violations().is_empty(), "{:?}", rep.violations());
    // S1 -> h replaces S1 -> a -> b -> h and remembers all three edges
    let merged = rep
        .provenance
        .edges
        .values()
        .find(|v| v.len() == 3)
        .expect("merged edge");
    assert_eq!(merged.len(), 3);
}

#[test]
fn relay_with_parallel_edges_is_degenerate() {
    let mut g = Network::new();
    let [s1, _, _, _] = two_terminal_pairs(&mut g);
    let v = g.add_vertex();
    g.connect(s1, v).unwrap();
    g.insert_edge(crate::graph::Edge {
        id: g.next_edge_id(),
        u: s1,
        v,
        directed: true,
    })
    .unwrap();
    let stage = Stage {
        routed: RoutedNetwork {
            network: g,
            systems: Vec::new(),
        },
        provenance: Provenance::default(),
    };
    assert_eq!(
        remove_relays(&stage).unwrap_err(),
        RepresentationError::DegenerateRelay(v)
    );
}

#[test]
fn crossing_adds_two_vertices_and_one_edge() {
    let mut g = Network::new();
    let [s1, r1, s2, r2] = two_terminal_pairs(&mut g);
    let v = g.add_vertex();
    for (x, y) in [(s1, v), (v, r1), (s2, v), (v, r2)] {
        g.connect(x, y).unwrap();
    }
    let before = (g.vertex_count(), g.edge_count());
    let r = routed(g, &[&[s1, v, r1]], &[&[s2, v, r2]]);
    let rep = to_representation(&r).unwrap();
    assert_eq!(rep.graph.vertex_count(), before.0 + 1);
    assert_eq!(rep.graph.edge_count(), before.1 + 1);
    assert!(rep.violations().is_empty(), "{:?}", rep.violations());
    assert_eq!(rep.stage_hubs.original, 1);
    assert_eq!(rep.stage_hubs.matched, 2);
    assert!(rep.stage_hubs.relation_holds());
}

#[test]
fn opposite_shared_edge_is_rewired() {
    // φ: S1 a b R1, ψ: S2 b a R2, so the shared edge a-b is used both ways
    let mut g = Network::new();
    let [s1, r1, s2, r2] = two_terminal_pairs(&mut g);
    let [a, b] = [(); 2].map(|_| g.add_vertex());
    for (x, y) in [(s1, a), (a, b), (b, r1), (s2, b), (a, r2)] {
        g.connect(x, y).unwrap();
    }
    let r = routed(g, &[&[s1, a, b, r1]], &[&[s2, b, a, r2]]);
    let rep = to_representation(&r).unwrap();
    assert!(rep.naturally_oriented);
    assert!(rep.violations().is_empty(), "{:?}", rep.violations());
    let psi = &rep.systems[1].paths()[0];
    assert_eq!(psi.vertices(), &[s2, a, b, r2]);
}

#[test]
fn transformation_is_idempotent() {
    for r in [worked_example(), grid_graph(2, 3).unwrap()] {
        let once = to_representation(&r).unwrap();
        let twice = to_representation(&once.routed()).unwrap();
        assert_eq!(structural_signature(&once.routed()), structural_signature(&twice.routed()));
    }
}

#[test]
fn rewiring_order_does_not_change_the_result() {
    let r = grid_graph(3, 3).unwrap();
    let base = structural_signature(&to_representation(&r).unwrap().routed());
    for seed in 0..8 {
        let other = to_representation_ordered(&r, Some(seed)).unwrap();
        assert_eq!(structural_signature(&other.routed()), base, "seed {seed}");
    }
}

#[test]
fn grid_decomposition_counts() {
    for (c1, c2) in [(1, 1), (2, 3), (3, 2), (4, 4)] {
        let rep = to_representation(&grid_graph(c1, c2).unwrap()).unwrap();
        let dec = decompose_private(&rep).unwrap();
        let delta = c1.min(c2) as usize;
        assert_eq!(dec.delta, delta);
        assert_eq!(
            dec.kind_counts(),
            [delta, delta, c1 as usize - delta, c2 as usize - delta]
        );
    }
}

#[test]
fn three_pairs_are_rejected() {
    let r = crate::extremal::witness_222();
    assert!(matches!(
        to_representation(&r),
        Err(RepresentationError::InvalidInput(_))
    ));
}
