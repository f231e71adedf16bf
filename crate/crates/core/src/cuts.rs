//! Minimum vertex cuts and maximal sets of vertex-disjoint paths.

use crate::error::GraphError;
use crate::flow::{self, EdgeCapacity, SplitNetwork};
use crate::graph::{Network, PathSystem, VertexId};

/// A minimum separator between a pair's source and sink.
///
/// `value` counts the interior vertices in `separator` plus every edge that
/// joins the source directly to the sink (such an edge is a path with no
/// interior vertex and can only be cut by removing the edge itself).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub value: u32,
    pub separator: Vec<VertexId>,
    pub direct_edges: usize,
}

/// Exact minimum interior-vertex cut between the source and sink of
/// `pair_index`. Interior edges may be crossed both ways, terminal edges
/// only in their fixed direction.
pub fn min_vertex_cut(g: &Network, pair_index: usize) -> Result<CutResult, GraphError> {
    g.pair(pair_index)?;
    let mut net = SplitNetwork::build(g, pair_index, EdgeCapacity::Unbounded);
    let value = net.max_flow(None);
    let (separator, direct_edges) = net.min_cut();
    debug_assert_eq!(separator.len() + direct_edges, value as usize);
    Ok(CutResult {
        value,
        separator,
        direct_edges,
    })
}

/// `k` pairwise internally vertex-disjoint paths for the pair, if the cut
/// allows it. Paths come out ordered by the id of their first edge.
pub fn vertex_disjoint_paths(
    g: &Network,
    pair_index: usize,
    k: u32,
) -> Result<Option<PathSystem>, GraphError> {
    g.pair(pair_index)?;
    let mut net = SplitNetwork::build(g, pair_index, EdgeCapacity::Unbounded);
    if net.max_flow(Some(k)) < k {
        return Ok(None);
    }
    let paths = net.decompose(g);
    PathSystem::with_any_count(g, pair_index, paths).map(Some)
}

/// Whether the cut between the pair reaches at least `k`.
pub fn cut_at_least(g: &Network, pair_index: usize, k: u32) -> bool {
    flow::max_flow(g, pair_index, Some(k)) >= k
}

/// Membership in the class: every pair's minimum vertex cut equals its
/// demand.
pub fn in_class(g: &Network) -> bool {
    (0..g.pairs().len()).all(|i| {
        let d = g.pairs()[i].demand;
        flow::max_flow(g, i, Some(d + 1)) == d
    })
}

/// Membership test for subgraphs of an in-class graph: cuts there can only
/// shrink, so reaching every demand is enough.
pub fn meets_demands(g: &Network) -> bool {
    (0..g.pairs().len()).all(|i| cut_at_least(g, i, g.pairs()[i].demand))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeId;

    fn relay(n_relays: usize) -> Network {
        let mut g = Network::new();
        let s = g.add_vertex();
        let r = g.add_vertex();
        g.add_pair(s, r, 1);
        let mut prev = s;
        for _ in 0..n_relays {
            let x = g.add_vertex();
            g.connect(prev, x).unwrap();
            prev = x;
        }
        g.connect(prev, r).unwrap();
        g
    }

    #[test]
    fn single_relay_cut_is_one() {
        let g = relay(1);
        let cut = min_vertex_cut(&g, 0).unwrap();
        assert_eq!(cut.value, 1);
        assert_eq!(cut.separator, vec![VertexId(2)]);
        assert!(in_class(&g));
    }

    #[test]
    fn disconnected_pair_has_zero_cut() {
        let mut g = relay(1);
        g.remove_edge(EdgeId(0));
        let cut = min_vertex_cut(&g, 0).unwrap();
        assert_eq!(cut.value, 0);
        assert!(cut.separator.is_empty());
        assert!(vertex_disjoint_paths(&g, 0, 1).unwrap().is_none());
    }

    #[test]
    fn direct_edges_count_one_each() {
        let mut g = relay(0);
        let (s, r) = (VertexId(0), VertexId(1));
        g.connect(s, r).unwrap();
        g.set_demand(0, 2);
        let cut = min_vertex_cut(&g, 0).unwrap();
        assert_eq!(cut.value, 2);
        assert_eq!(cut.direct_edges, 2);
        assert!(in_class(&g));
    }

    #[test]
    fn terminal_edges_are_one_way() {
        // S -> a <- b <- R is not traversable from S to R
        let mut g = Network::new();
        let s = g.add_vertex();
        let r = g.add_vertex();
        g.add_pair(s, r, 1);
        let a = g.add_vertex();
        g.connect(s, a).unwrap();
        g.connect(a, r).unwrap();
        g.remove_edge(EdgeId(1));
        g.insert_edge(crate::graph::Edge {
            id: EdgeId(5),
            u: a,
            v: s,
            directed: true,
        })
        .unwrap();
        assert_eq!(min_vertex_cut(&g, 0).unwrap().value, 0);
    }

    #[test]
    fn one_more_than_the_cut_is_absent() {
        let mut g = Network::new();
        let s = g.add_vertex();
        let r = g.add_vertex();
        g.add_pair(s, r, 2);
        for _ in 0..2 {
            let x = g.add_vertex();
            g.connect(s, x).unwrap();
            g.connect(x, r).unwrap();
        }
        assert!(vertex_disjoint_paths(&g, 0, 2).unwrap().is_some());
        assert!(vertex_disjoint_paths(&g, 0, 3).unwrap().is_none());
    }
}
