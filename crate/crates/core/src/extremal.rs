//! Generators for extremal networks and the recursive hub bound for three or
//! more pairs.
//!
//! Vertex ids are allocated terminals first (`S1, R1, S2, R2, ...`), then
//! interior vertices in construction order.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeId, Network, Path, PathSystem, RoutedNetwork, Step, VertexId};

/// Lays out paths given as vertex sequences. Consecutive vertices reuse an
/// existing edge not yet used by the same system, otherwise a new edge is
/// added.
struct Layout {
    g: Network,
    systems: Vec<Vec<Vec<Step>>>,
}

impl Layout {
    fn new(g: Network) -> Self {
        let n = g.pairs().len();
        Layout {
            g,
            systems: vec![Vec::new(); n],
        }
    }

    fn route(&mut self, system: usize, seq: &[VertexId]) {
        let used: BTreeSet<EdgeId> = self.systems[system]
            .iter()
            .flatten()
            .map(|s| s.edge)
            .collect();
        let mut steps = Vec::with_capacity(seq.len() - 1);
        for w in seq.windows(2) {
            let (a, b) = (w[0], w[1]);
            let existing = self.g.incident(a).find_map(|e| {
                if used.contains(&e.id) {
                    None
                } else if e.u == a && e.v == b {
                    Some(Step { edge: e.id, forward: true })
                } else if !e.directed && e.v == a && e.u == b {
                    Some(Step { edge: e.id, forward: false })
                } else {
                    None
                }
            });
            let step = match existing {
                Some(s) => s,
                None => {
                    let id = self.g.connect(a, b).expect("generator vertices are distinct");
                    Step {
                        edge: id,
                        forward: self.g.edge(id).expect("just added").u == a,
                    }
                }
            };
            steps.push(step);
        }
        self.systems[system].push(steps);
    }

    fn finish(self) -> RoutedNetwork {
        let Layout { g, systems } = self;
        let systems = systems
            .into_iter()
            .enumerate()
            .map(|(i, paths)| PathSystem::from_steps(&g, i, paths).expect("generator paths are valid"))
            .collect();
        RoutedNetwork::new(g, systems).expect("generator output is valid")
    }
}

fn terminals(g: &mut Network, demands: &[u32]) -> Vec<(VertexId, VertexId)> {
    demands
        .iter()
        .map(|&d| {
            let s = g.add_vertex();
            let r = g.add_vertex();
            g.add_pair(s, r, d);
            (s, r)
        })
        .collect()
}

/// The tight two-pair construction with `2·c1·c2` hubs: path `i` of the
/// first pair and path `j` of the second meet at `lambda(i,j)`, share one
/// edge, and part at `mu(i,j)`. Along each first-pair path the meetings come
/// in increasing `j`, along each second-pair path in increasing `i`.
pub fn grid_graph(c1: u32, c2: u32) -> Result<RoutedNetwork> {
    if c1 == 0 || c2 == 0 {
        return Err(Error::OutOfContract("grid_graph needs positive demands".into()));
    }
    let mut g = Network::new();
    let t = terminals(&mut g, &[c1, c2]);
    let (c1, c2) = (c1 as usize, c2 as usize);
    let mut lambda = vec![vec![VertexId(0); c2]; c1];
    let mut mu = lambda.clone();
    for i in 0..c1 {
        for j in 0..c2 {
            lambda[i][j] = g.add_vertex();
            mu[i][j] = g.add_vertex();
        }
    }
    let mut lay = Layout::new(g);
    for i in 0..c1 {
        let mut seq = vec![t[0].0];
        for j in 0..c2 {
            seq.extend([lambda[i][j], mu[i][j]]);
        }
        seq.push(t[0].1);
        lay.route(0, &seq);
    }
    for j in 0..c2 {
        let mut seq = vec![t[1].0];
        for i in 0..c1 {
            seq.extend([lambda[i][j], mu[i][j]]);
        }
        seq.push(t[1].1);
        lay.route(1, &seq);
    }
    Ok(lay.finish())
}

/// The construction for demands `(c1, c2, 1, ..., 1)` with `n` unit pairs
/// and `2(c1·c2 + n)` hubs: the grid, with each unit pair's path sharing one
/// edge (`gamma -> delta`) with the first path of the first pair, before the
/// grid meetings. With `n = 0` this is exactly [`grid_graph`].
pub fn ones_graph(c1: u32, c2: u32, n: u32) -> Result<RoutedNetwork> {
    let demands: Vec<u32> = [c1, c2].into_iter().chain((0..n).map(|_| 1)).collect();
    ones_like(c1, c2, &demands, &vec![1; n as usize])
}

/// Shared body of [`ones_graph`] and [`witness_222`]: `groups[k]` unit
/// paths go to extra pair `k`, each meeting the first path of the first pair.
fn ones_like(c1: u32, c2: u32, demands: &[u32], groups: &[u32]) -> Result<RoutedNetwork> {
    if c1 == 0 || c2 == 0 {
        return Err(Error::OutOfContract("ones_graph needs positive demands".into()));
    }
    let mut g = Network::new();
    let t = terminals(&mut g, &demands[..2]);
    let (c1, c2) = (c1 as usize, c2 as usize);
    let mut lambda = vec![vec![VertexId(0); c2]; c1];
    let mut mu = lambda.clone();
    for i in 0..c1 {
        for j in 0..c2 {
            lambda[i][j] = g.add_vertex();
            mu[i][j] = g.add_vertex();
        }
    }
    let extra = terminals(&mut g, &demands[2..]);
    // (pair index, gamma, delta) in order along the first path
    let mut meets = Vec::new();
    for (k, &count) in groups.iter().enumerate() {
        for _ in 0..count {
            let gamma = g.add_vertex();
            let delta = g.add_vertex();
            meets.push((k + 2, gamma, delta));
        }
    }
    let mut lay = Layout::new(g);
    for i in 0..c1 {
        let mut seq = vec![t[0].0];
        if i == 0 {
            for &(_, gamma, delta) in &meets {
                seq.extend([gamma, delta]);
            }
        }
        for j in 0..c2 {
            seq.extend([lambda[i][j], mu[i][j]]);
        }
        seq.push(t[0].1);
        lay.route(0, &seq);
    }
    for j in 0..c2 {
        let mut seq = vec![t[1].0];
        for i in 0..c1 {
            seq.extend([lambda[i][j], mu[i][j]]);
        }
        seq.push(t[1].1);
        lay.route(1, &seq);
    }
    for &(pair, gamma, delta) in &meets {
        let (s, r) = extra[pair - 2];
        lay.route(pair, &[s, gamma, delta, r]);
    }
    Ok(lay.finish())
}

/// A minimal network with demands `(2, 2, 2)` and 12 hubs: the
/// `(2, 2, 1, 1)` construction with its two unit pairs merged into one pair
/// of demand 2.
pub fn witness_222() -> RoutedNetwork {
    ones_like(2, 2, &[2, 2, 2], &[2]).expect("fixed parameters")
}

/// A minimal `(2, 2, 2)` network in which the third pair can be routed in
/// two ways. Interior vertices `a, b, c, d` have ids 6 to 9. Edge ids 0 to 7
/// are the third pair's edges: `S3->a, S3->b, a-c, b-c, a-d, b-d, c->R3,
/// d->R3`. Its two routings are `{0 2 6, 1 5 7}` and `{0 4 7, 1 3 6}`.
pub fn reroutable_witness() -> RoutedNetwork {
    let mut g = Network::new();
    let t = terminals(&mut g, &[2, 2, 2]);
    let [a, b, c, d] = [(); 4].map(|_| g.add_vertex());
    let ((s1, r1), (s2, r2), (s3, r3)) = (t[0], t[1], t[2]);
    let list = [
        (s3, a),
        (s3, b),
        (a, c),
        (b, c),
        (a, d),
        (b, d),
        (c, r3),
        (d, r3),
        (s1, c),
        (a, r1),
        (s1, b),
        (d, r1),
        (s2, a),
        (d, r2),
        (s2, c),
        (b, r2),
    ];
    for (k, &(u, v)) in list.iter().enumerate() {
        let directed = g.is_terminal(u) || g.is_terminal(v);
        g.insert_edge(Edge { id: EdgeId(k as u32), u, v, directed })
            .expect("distinct endpoints");
    }
    let system = |g: &Network, i: usize, seqs: &[&[VertexId]]| {
        let paths = seqs.iter().map(|s| Path::through(g, s).expect("edges exist")).collect();
        PathSystem::new(g, i, paths).expect("disjoint paths")
    };
    let systems = vec![
        system(&g, 0, &[&[s1, c, a, r1], &[s1, b, d, r1]]),
        system(&g, 1, &[&[s2, a, d, r2], &[s2, c, b, r2]]),
        system(&g, 2, &[&[s3, a, c, r3], &[s3, b, d, r3]]),
    ];
    RoutedNetwork::new(g, systems).expect("valid witness")
}

/// The worked two-pair example: a naturally oriented minimal `(2, 2)`
/// network with 16 edges and 8 hubs. Edge `k` here is `e(k+1)` of the
/// description:
///
/// * first pair: `e1 e3 e7 e9 e13` and `e4 e8 e10 e14 e16`
/// * second pair: `e2 e3 e6 e8 e12` and `e5 e9 e11 e14 e15`
///
/// Interior vertices `a, b, c, d, x, y, r, s` have ids 4 to 11.
pub fn worked_example() -> RoutedNetwork {
    let mut g = Network::new();
    let t = terminals(&mut g, &[2, 2]);
    let ((s1, r1), (s2, r2)) = (t[0], t[1]);
    let [a, b, c, d, x, y, r, s] = [(); 8].map(|_| g.add_vertex());
    let list = [
        (s1, a),
        (s2, a),
        (a, b),
        (s1, x),
        (s2, c),
        (b, x),
        (b, c),
        (x, y),
        (c, d),
        (y, r),
        (d, r),
        (y, r2),
        (d, r1),
        (r, s),
        (s, r2),
        (s, r1),
    ];
    for (k, &(u, v)) in list.iter().enumerate() {
        let directed = g.is_terminal(u) || g.is_terminal(v);
        g.insert_edge(Edge { id: EdgeId(k as u32), u, v, directed })
            .expect("distinct endpoints");
    }
    let system = |g: &Network, i: usize, seqs: &[&[VertexId]]| {
        let paths = seqs.iter().map(|s| Path::through(g, s).expect("edges exist")).collect();
        PathSystem::new(g, i, paths).expect("disjoint paths")
    };
    let systems = vec![
        system(&g, 0, &[&[s1, a, b, c, d, r1], &[s1, x, y, r, s, r1]]),
        system(&g, 1, &[&[s2, a, b, x, y, r2], &[s2, c, d, r, s, r2]]),
    ];
    RoutedNetwork::new(g, systems).expect("valid example")
}

/// Recursive upper bound on the worst-case minimum hub count for the given
/// demands, evaluated in the given order (the last demand is the
/// distinguished one):
///
/// * one pair: 0
/// * two pairs: `2·C1·C2`
/// * `k >= 3` pairs: `N1 + N2 + (k-1)·N1·(Ck + N2)`, where `N1` is the bound
///   for the first `k-1` demands and `N2` sums the bounds obtained by
///   dropping each of the first `k-1` demands in turn.
pub fn finiteness_bound(demands: &[u32]) -> Result<BigUint> {
    if demands.is_empty() {
        return Err(Error::OutOfContract("finiteness_bound needs at least one demand".into()));
    }
    let mut memo = HashMap::new();
    Ok(bound(demands, &mut memo))
}

fn bound(c: &[u32], memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
    if let Some(v) = memo.get(c) {
        return v.clone();
    }
    let k = c.len();
    let value = match k {
        1 => BigUint::from(0u32),
        2 => BigUint::from(2u32) * c[0] * c[1],
        _ => {
            let n1 = bound(&c[..k - 1], memo);
            let mut n2 = BigUint::from(0u32);
            for i in 0..k - 1 {
                let rest: Vec<u32> = c
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &x)| x)
                    .collect();
                n2 += bound(&rest, memo);
            }
            let ck = BigUint::from(c[k - 1]);
            &n1 + &n2 + BigUint::from(k as u64 - 1) * &n1 * (ck + &n2)
        }
    };
    memo.insert(c.to_vec(), value.clone());
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::in_class;
    use crate::graph::{classify_edges, hub_count};
    use crate::minimality::{is_minimal, is_reroutable};

    #[test]
    fn grid_hubs_and_class() {
        for (c1, c2) in [(1, 1), (2, 2), (3, 3), (2, 4)] {
            let r = grid_graph(c1, c2).unwrap();
            assert_eq!(hub_count(&r.network).0 as u32, 2 * c1 * c2);
            assert!(in_class(&r.network));
            assert!(r.is_system_union());
        }
    }

    #[test]
    fn grid_2_2_has_four_public_edges() {
        let r = grid_graph(2, 2).unwrap();
        let classes = classify_edges(&r.network, &r.systems).unwrap();
        let public = classes.values().filter(|&&c| c == crate::EdgeClass::Public).count();
        assert_eq!(public, 4);
    }

    #[test]
    fn small_grids_are_minimal() {
        assert!(is_minimal(&grid_graph(1, 1).unwrap().network).unwrap());
        assert!(is_minimal(&grid_graph(3, 3).unwrap().network).unwrap());
    }

    #[test]
    fn ones_with_no_unit_pairs_is_the_grid() {
        assert_eq!(ones_graph(3, 2, 0).unwrap(), grid_graph(3, 2).unwrap());
    }

    #[test]
    fn ones_2_2_2_has_12_hubs() {
        let r = ones_graph(2, 2, 2).unwrap();
        assert_eq!(hub_count(&r.network).0, 12);
        assert!(is_minimal(&r.network).unwrap());
    }

    #[test]
    fn witness_222_is_minimal_with_12_hubs() {
        let r = witness_222();
        assert_eq!(r.network.demands(), vec![2, 2, 2]);
        assert_eq!(hub_count(&r.network).0, 12);
        assert!(in_class(&r.network));
        assert!(is_minimal(&r.network).unwrap());
    }

    #[test]
    fn reroutable_witness_is_minimal_and_reroutable() {
        let r = reroutable_witness();
        assert!(is_minimal(&r.network).unwrap());
        assert!(is_reroutable(&r.network, &r.systems, 2));
        let other = vec![
            Path::from_steps(&r.network, steps(&[0, 4, 7])).unwrap(),
            Path::from_steps(&r.network, steps(&[1, 3, 6])).unwrap(),
        ];
        PathSystem::new(&r.network, 2, other).unwrap();
    }

    fn steps(ids: &[u32]) -> Vec<Step> {
        // the a-c, b-c, a-d, b-d edges are stored in the direction used here
        ids.iter()
            .map(|&i| Step { edge: EdgeId(i), forward: true })
            .collect()
    }

    #[test]
    fn worked_example_public_edges() {
        let r = worked_example();
        let classes = classify_edges(&r.network, &r.systems).unwrap();
        let public: Vec<u32> = classes
            .iter()
            .filter(|(_, &c)| c == crate::EdgeClass::Public)
            .map(|(e, _)| e.0 + 1)
            .collect();
        assert_eq!(public, vec![3, 8, 9, 14]);
        assert!(is_minimal(&r.network).unwrap());
    }

    #[test]
    fn finiteness_bound_values() {
        assert_eq!(finiteness_bound(&[5]).unwrap(), BigUint::from(0u32));
        assert_eq!(finiteness_bound(&[3, 4]).unwrap(), BigUint::from(24u32));
        assert_eq!(finiteness_bound(&[2, 2, 2]).unwrap(), BigUint::from(312u32));
        assert!(finiteness_bound(&[]).is_err());
    }
}
