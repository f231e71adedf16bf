//! Seeded random instances for the property suites.
//!
//! A random network has a random interior graph, and each source (sink)
//! joined to exactly `demand` distinct interior vertices, so no pair can
//! have a cut above its demand. Instances whose cuts fall short are
//! rejected and redrawn.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cuts::in_class;
use crate::graph::{Network, RoutedNetwork, VertexId};
use crate::minimality::{minimalize_routed, route};

/// Draws attempts before a corpus builder gives up on one instance.
const MAX_ATTEMPTS: usize = 10_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One draw: `interior` vertices, each interior pair joined with
/// probability `density`. Returns `None` unless every cut equals its demand.
pub fn random_network(rng: &mut impl Rng, demands: &[u32], interior: usize, density: f64) -> Option<Network> {
    let mut g = Network::new();
    let terminals: Vec<(VertexId, VertexId)> = demands
        .iter()
        .map(|&d| {
            let s = g.add_vertex();
            let r = g.add_vertex();
            g.add_pair(s, r, d);
            (s, r)
        })
        .collect();
    let inner: Vec<VertexId> = (0..interior).map(|_| g.add_vertex()).collect();
    for (i, &a) in inner.iter().enumerate() {
        for &b in &inner[i + 1..] {
            if rng.gen_bool(density) {
                g.connect(a, b).expect("distinct vertices");
            }
        }
    }
    for (&(s, r), &d) in terminals.iter().zip(demands) {
        if d as usize > interior {
            return None;
        }
        for &v in inner.choose_multiple(rng, d as usize) {
            g.connect(s, v).expect("distinct vertices");
        }
        for &v in inner.choose_multiple(rng, d as usize) {
            g.connect(v, r).expect("distinct vertices");
        }
    }
    g.remove_isolated();
    in_class(&g).then_some(g)
}

fn draw<T>(rng: &mut ChaCha8Rng, mut attempt: impl FnMut(&mut ChaCha8Rng) -> Option<T>) -> T {
    for _ in 0..MAX_ATTEMPTS {
        if let Some(x) = attempt(rng) {
            return x;
        }
    }
    panic!("no acceptable instance in {MAX_ATTEMPTS} draws");
}

/// A random network with the given demands, redrawn until in class.
pub fn random_in_class(seed: u64, demands: &[u32]) -> Network {
    let mut r = rng(seed);
    let min = demands.iter().copied().max().unwrap_or(1) as usize + 1;
    draw(&mut r, |r| {
        let n = r.gen_range(min..=min + 8);
        let p = r.gen_range(0.25..0.55);
        random_network(r, demands, n, p)
    })
}

/// Two-pair graphs that are the union of their two path systems (not
/// necessarily minimal), demands cycling through `1..=max_demand`.
pub fn two_pair_corpus(seed: u64, count: usize, max_demand: u32) -> Vec<RoutedNetwork> {
    let mut r = rng(seed);
    (0..count)
        .map(|k| {
            let c1 = 1 + (k as u32) % max_demand;
            let c2 = 1 + (k as u32 / max_demand) % max_demand;
            draw(&mut r, |r| {
                let n = r.gen_range(c1.max(c2) as usize + 2..=12);
                let p = r.gen_range(0.25..0.5);
                let g = random_network(r, &[c1, c2], n, p)?;
                Some(route(&g).ok()?.restrict_to_systems())
            })
        })
        .collect()
}

/// Minimal two-pair graphs with path systems covering them: each corpus
/// graph minimalized, then routed.
pub fn minimal_corpus(corpus: &[RoutedNetwork]) -> Vec<RoutedNetwork> {
    corpus
        .iter()
        .map(|r| {
            minimalize_routed(&r.network, None)
                .expect("corpus graphs are in class")
                .restrict_to_systems()
        })
        .collect()
}

/// Small in-class networks with the given demands and at most `max_edges`
/// edges, sized for the exhaustive oracle.
pub fn oracle_corpus(seed: u64, count: usize, demands: &[u32], max_edges: usize) -> Vec<Network> {
    let mut r = rng(seed);
    let min = demands.iter().copied().max().unwrap_or(1) as usize + 1;
    (0..count)
        .map(|_| {
            draw(&mut r, |r| {
                let n = r.gen_range(min..=min + 5);
                let p = r.gen_range(0.2..0.5);
                let g = random_network(r, demands, n, p)?;
                (g.edge_count() <= max_edges).then_some(g)
            })
        })
        .collect()
}

/// Single-pair networks with demand in `1..=3`.
pub fn single_pair_corpus(seed: u64, count: usize) -> Vec<Network> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let d = r.gen_range(1..=3);
            draw(&mut r, |r| {
                let n = r.gen_range(d as usize + 1..=12);
                let p = r.gen_range(0.2..0.6);
                random_network(r, &[d], n, p)
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::min_vertex_cut;

    #[test]
    fn corpus_is_deterministic() {
        assert_eq!(two_pair_corpus(3, 6, 3), two_pair_corpus(3, 6, 3));
        assert_ne!(two_pair_corpus(3, 6, 3), two_pair_corpus(4, 6, 3));
    }

    #[test]
    fn corpus_graphs_are_system_unions_in_class() {
        for r in two_pair_corpus(1, 12, 3) {
            assert!(r.is_system_union());
            assert!(in_class(&r.network));
        }
    }

    #[test]
    fn oracle_corpus_respects_limits() {
        for g in oracle_corpus(2, 5, &[2, 2], 22) {
            assert!(g.edge_count() <= 22);
            assert_eq!(min_vertex_cut(&g, 0).unwrap().value, 2);
            assert_eq!(min_vertex_cut(&g, 1).unwrap().value, 2);
        }
    }
}
