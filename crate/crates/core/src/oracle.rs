//! Exhaustive ground truth for small instances: every path system of a
//! pair, and the minimum hub count over all in-class subgraphs.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::cuts::{in_class, meets_demands};
use crate::extremal::finiteness_bound;
use crate::error::GraphError;
use crate::graph::{hub_count, EdgeId, Network, Path, PathSystem, Step, VertexId};

/// Largest interior vertex count accepted by [`enumerate_path_systems`].
pub const MAX_INTERIOR_VERTICES: usize = 20;
/// Default limit on non-mandatory edges for [`min_hub_subgraph`].
pub const MAX_FREE_EDGES: usize = 24;
/// Largest number of simple paths collected for one pair.
pub const MAX_SIMPLE_PATHS: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("size-guard: {what} is {got}, limit {limit}")]
    SizeGuard {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("not-in-class: the oracle needs an in-class network")]
    NotInClass,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl OracleError {
    pub fn name(&self) -> &'static str {
        match self {
            OracleError::SizeGuard { .. } => "size-guard",
            OracleError::NotInClass => "not-in-class",
            OracleError::Graph(e) => e.name(),
        }
    }
}

fn guard(what: &'static str, got: usize, limit: usize) -> Result<(), OracleError> {
    if got > limit {
        Err(OracleError::SizeGuard { what, got, limit })
    } else {
        Ok(())
    }
}

/// All simple source-to-sink paths of the pair, as step lists, in
/// lexicographic order of their edge sequences.
fn simple_paths(g: &Network, pair_index: usize) -> Result<Vec<Vec<Step>>, OracleError> {
    let pair = *g.pair(pair_index)?;
    let mut out = Vec::new();
    let mut visited = BTreeSet::from([pair.source]);
    let mut steps = Vec::new();
    fn dfs(
        g: &Network,
        at: VertexId,
        sink: VertexId,
        visited: &mut BTreeSet<VertexId>,
        steps: &mut Vec<Step>,
        out: &mut Vec<Vec<Step>>,
    ) -> Result<(), OracleError> {
        let mut next: Vec<(EdgeId, bool, VertexId)> = g
            .incident(at)
            .filter_map(|e| {
                let forward = e.u == at;
                if e.directed && !forward {
                    return None;
                }
                Some((e.id, forward, e.opposite(at)?))
            })
            .collect();
        next.sort();
        for (edge, forward, to) in next {
            if to == sink {
                let mut p = steps.clone();
                p.push(Step { edge, forward });
                out.push(p);
                guard("simple path count", out.len(), MAX_SIMPLE_PATHS)?;
                continue;
            }
            if g.is_terminal(to) || visited.contains(&to) {
                continue;
            }
            visited.insert(to);
            steps.push(Step { edge, forward });
            dfs(g, to, sink, visited, steps, out)?;
            steps.pop();
            visited.remove(&to);
        }
        Ok(())
    }
    dfs(g, pair.source, pair.sink, &mut visited, &mut steps, &mut out)?;
    Ok(out)
}

/// Every set of `demand` pairwise internally vertex-disjoint paths for the
/// pair. Systems come out in lexicographic order of their (sorted) paths.
pub fn enumerate_path_systems(g: &Network, pair_index: usize) -> Result<Vec<PathSystem>, OracleError> {
    guard(
        "interior vertex count",
        g.interior_vertices().count(),
        MAX_INTERIOR_VERTICES,
    )?;
    let demand = g.pair(pair_index)?.demand as usize;
    let paths: Vec<(Vec<Step>, BTreeSet<VertexId>)> = simple_paths(g, pair_index)?
        .into_iter()
        .map(|steps| {
            let p = Path::from_steps(g, steps.clone()).expect("enumerated path is valid");
            let inner = p.inner_vertices().iter().copied().collect();
            (steps, inner)
        })
        .collect();

    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn pick(
        g: &Network,
        pair_index: usize,
        paths: &[(Vec<Step>, BTreeSet<VertexId>)],
        from: usize,
        demand: usize,
        used: &mut BTreeSet<VertexId>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<PathSystem>,
    ) -> Result<(), OracleError> {
        if chosen.len() == demand {
            let ps = chosen
                .iter()
                .map(|&k| Path::from_steps(g, paths[k].0.clone()))
                .collect::<Result<Vec<_>, _>>()?;
            out.push(PathSystem::new(g, pair_index, ps)?);
            return Ok(());
        }
        for k in from..paths.len() {
            let (steps, inner) = &paths[k];
            // parallel direct edges are distinct paths; shared edges are not
            let clash = chosen.iter().any(|&c| paths[c].0.iter().any(|s| steps.iter().any(|t| t.edge == s.edge)));
            if clash || !inner.is_disjoint(used) {
                continue;
            }
            used.extend(inner.iter().copied());
            chosen.push(k);
            pick(g, pair_index, paths, k + 1, demand, used, chosen, out)?;
            chosen.pop();
            for v in inner {
                used.remove(v);
            }
        }
        Ok(())
    }
    let mut used = BTreeSet::new();
    pick(g, pair_index, &paths, 0, demand, &mut used, &mut chosen, &mut out)?;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    /// Edge set of the chosen minimum-hub subgraph (ties broken by the
    /// lexicographically smallest sorted edge list).
    pub min_hub_edges: Vec<EdgeId>,
    #[serde(skip)]
    pub min_hub_subgraph: Network,
    pub min_hubs: usize,
    pub num_minimal_subgraphs: usize,
    /// Edges whose single deletion already leaves the class.
    pub mandatory_edges: usize,
    /// Whether the full edge set is itself one of the minimal subgraphs.
    pub full_graph_minimal: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn subgraph(g: &Network, keep: &BTreeSet<EdgeId>) -> Network {
    let mut h = g.clone();
    for e in g.edge_ids() {
        if !keep.contains(&e) {
            h.remove_edge(e);
        }
    }
    h
}

struct Search<'a> {
    g: &'a Network,
    order: Vec<EdgeId>,
    best: Option<(usize, Vec<EdgeId>)>,
    count: usize,
    full_minimal: bool,
}

impl Search<'_> {
    /// `kept` holds the mandatory edges and every free edge kept so far,
    /// `undecided` the free edges after position `k`.
    fn visit(&mut self, k: usize, kept: &mut BTreeSet<EdgeId>, undecided: &mut BTreeSet<EdgeId>) {
        let kept_only = subgraph(self.g, kept);
        if meets_demands(&kept_only) {
            // any minimal subgraph containing `kept` must equal it
            self.leaf(kept, &kept_only);
            return;
        }
        if k == self.order.len() {
            return;
        }
        let e = self.order[k];
        undecided.remove(&e);

        let without: BTreeSet<EdgeId> = kept.union(undecided).copied().collect();
        if meets_demands(&subgraph(self.g, &without)) {
            self.visit(k + 1, kept, undecided);
        }

        kept.insert(e);
        if !self.kept_edge_redundant(kept) {
            self.visit(k + 1, kept, undecided);
        }
        kept.remove(&e);
        undecided.insert(e);
    }

    /// A kept edge whose deletion from the kept-only graph still meets the
    /// demands rules out every minimal completion.
    fn kept_edge_redundant(&self, kept: &BTreeSet<EdgeId>) -> bool {
        let h = subgraph(self.g, kept);
        kept.iter().any(|&e| meets_demands(&h.without_edge(e)))
    }

    fn leaf(&mut self, kept: &BTreeSet<EdgeId>, h: &Network) {
        if kept.iter().any(|&e| meets_demands(&h.without_edge(e))) {
            return;
        }
        self.count += 1;
        if kept.len() == self.g.edge_count() {
            self.full_minimal = true;
        }
        let hubs = hub_count(h).0;
        let edges: Vec<EdgeId> = kept.iter().copied().collect();
        let better = match &self.best {
            None => true,
            Some((b, be)) => hubs < *b || (hubs == *b && edges < *be),
        };
        if better {
            self.best = Some((hubs, edges));
        }
    }
}

/// Minimum hub count over all in-class subgraphs of `g`, found by
/// enumerating every minimal subgraph. `max_edges` overrides the limit on
/// edges that are not mandatory.
pub fn min_hub_subgraph(g: &Network, max_edges: Option<usize>) -> Result<OracleReport, OracleError> {
    let start = Instant::now();
    if !in_class(g) {
        return Err(OracleError::NotInClass);
    }
    let mandatory: BTreeSet<EdgeId> = g
        .edge_ids()
        .filter(|&e| !meets_demands(&g.without_edge(e)))
        .collect();
    let mut free: Vec<EdgeId> = g.edge_ids().filter(|e| !mandatory.contains(e)).collect();
    guard("non-mandatory edge count", free.len(), max_edges.unwrap_or(MAX_FREE_EDGES))?;
    // deleting edges at busy vertices first reaches small subgraphs sooner
    let weight = |e: EdgeId| {
        let ed = g.edge(e).expect("edge exists");
        g.degree(ed.u) + g.degree(ed.v)
    };
    free.sort_by_key(|&e| (std::cmp::Reverse(weight(e)), e));

    let mut search = Search {
        g,
        order: free.clone(),
        best: None,
        count: 0,
        full_minimal: false,
    };
    let mut kept = mandatory.clone();
    let mut undecided: BTreeSet<EdgeId> = free.into_iter().collect();
    search.visit(0, &mut kept, &mut undecided);

    let (min_hubs, edges) = search.best.expect("an in-class network has a minimal subgraph");
    let mut sub = subgraph(g, &edges.iter().copied().collect());
    sub.remove_isolated();
    Ok(OracleReport {
        min_hub_edges: edges,
        min_hub_subgraph: sub,
        min_hubs,
        num_minimal_subgraphs: search.count,
        mandatory_edges: mandatory.len(),
        full_graph_minimal: search.full_minimal,
        elapsed: start.elapsed(),
    })
}

/// The known worst-case value for the demand signature of `g`.
///
/// One pair: 0. Two pairs: `2·C1·C2`. Two pairs plus `n` unit pairs:
/// `2(C1·C2 + n)`. Three pairs of demand 2: 12. Anything else falls back to
/// the recursive finiteness bound.
pub fn theoretical_value(demands: &[u32]) -> Result<u128, OracleError> {
    let mut d = demands.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let value = match d.as_slice() {
        [] => return Err(OracleError::Graph(GraphError::NoSuchPair(0))),
        [_] => 0,
        [c1, c2] => 2 * u128::from(*c1) * u128::from(*c2),
        [2, 2, 2] => 12,
        [c1, c2, rest @ ..] if rest.iter().all(|&c| c == 1) => {
            2 * (u128::from(*c1) * u128::from(*c2) + rest.len() as u128)
        }
        _ => {
            let b = finiteness_bound(demands).map_err(|_| OracleError::NotInClass)?;
            u128::try_from(b).unwrap_or(u128::MAX)
        }
    };
    Ok(value)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub demands: Vec<u32>,
    pub min_hubs: usize,
    pub bound: u128,
    pub holds: bool,
}

/// Runs the oracle and compares its minimum with [`theoretical_value`].
pub fn check_bound(g: &Network, max_edges: Option<usize>) -> Result<BoundCheck, OracleError> {
    let report = min_hub_subgraph(g, max_edges)?;
    let demands = g.demands();
    let bound = theoretical_value(&demands)?;
    Ok(BoundCheck {
        holds: report.min_hubs as u128 <= bound,
        demands,
        min_hubs: report.min_hubs,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{grid_graph, reroutable_witness};
    use crate::minimality::is_minimal;

    #[test]
    fn grid_has_one_system_per_pair() {
        let g = grid_graph(2, 2).unwrap().network;
        for i in 0..2 {
            assert_eq!(enumerate_path_systems(&g, i).unwrap().len(), 1);
        }
    }

    #[test]
    fn reroutable_witness_has_two_third_systems() {
        let g = reroutable_witness().network;
        assert!(enumerate_path_systems(&g, 2).unwrap().len() >= 2);
    }

    #[test]
    fn disconnected_pair_has_no_system() {
        let mut g = Network::new();
        let s = g.add_vertex();
        let r = g.add_vertex();
        g.add_pair(s, r, 1);
        assert!(enumerate_path_systems(&g, 0).unwrap().is_empty());
    }

    #[test]
    fn grid_minimum_is_eight() {
        let g = grid_graph(2, 2).unwrap().network;
        let rep = min_hub_subgraph(&g, None).unwrap();
        assert_eq!(rep.min_hubs, 8);
        assert_eq!(rep.num_minimal_subgraphs, 1);
        assert!(rep.full_graph_minimal);
        assert!(check_bound(&g, None).unwrap().holds);
    }

    #[test]
    fn parallel_chords_keep_the_grid_minimum() {
        let mut g = grid_graph(2, 2).unwrap().network;
        let interior: Vec<(VertexId, VertexId)> = g
            .edges()
            .filter(|e| !e.directed)
            .map(|e| (e.u, e.v))
            .take(2)
            .collect();
        for (u, v) in interior {
            g.connect(u, v).unwrap();
        }
        let rep = min_hub_subgraph(&g, None).unwrap();
        assert_eq!(rep.min_hubs, 8);
        assert!(!rep.full_graph_minimal);
        assert!(!is_minimal(&g).unwrap());
        assert!(is_minimal(&rep.min_hub_subgraph).unwrap());
    }

    #[test]
    fn shortcut_chords_can_lower_the_minimum() {
        let mut g = grid_graph(2, 2).unwrap().network;
        let inner: Vec<VertexId> = g.interior_vertices().collect();
        g.connect(inner[0], inner[7]).unwrap();
        g.connect(inner[1], inner[6]).unwrap();
        let rep = min_hub_subgraph(&g, None).unwrap();
        assert_eq!(rep.min_hubs, 4);
        assert!(in_class(&rep.min_hub_subgraph));
        assert!(is_minimal(&rep.min_hub_subgraph).unwrap());
        assert_eq!(hub_count(&rep.min_hub_subgraph).0, 4);
    }

    #[test]
    fn single_pair_needs_no_hubs() {
        let mut g = Network::new();
        let [s, r, a, b, c] = [(); 5].map(|_| g.add_vertex());
        g.add_pair(s, r, 2);
        for (x, y) in [(s, a), (s, b), (a, c), (b, c), (a, r), (b, r), (c, r)] {
            g.connect(x, y).unwrap();
        }
        assert_eq!(min_hub_subgraph(&g, None).unwrap().min_hubs, 0);
    }

    #[test]
    fn guards_are_errors() {
        let g = grid_graph(5, 5).unwrap().network;
        assert_eq!(
            enumerate_path_systems(&g, 0).unwrap_err().name(),
            "size-guard"
        );
        let mut g = grid_graph(2, 2).unwrap().network;
        let inner: Vec<VertexId> = g.interior_vertices().collect();
        g.connect(inner[0], inner[7]).unwrap();
        assert_eq!(min_hub_subgraph(&g, Some(0)).unwrap_err().name(), "size-guard");
    }

    #[test]
    fn theoretical_values() {
        assert_eq!(theoretical_value(&[4]).unwrap(), 0);
        assert_eq!(theoretical_value(&[2, 3]).unwrap(), 12);
        assert_eq!(theoretical_value(&[1, 3, 1, 2]).unwrap(), 16);
        assert_eq!(theoretical_value(&[2, 2, 2]).unwrap(), 12);
        assert_eq!(theoretical_value(&[2, 2, 3]).unwrap(), u128::try_from(finiteness_bound(&[2, 2, 3]).unwrap()).unwrap());
    }
}
