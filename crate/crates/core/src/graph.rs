//! Mixed multigraph with source/sink pairs, plus the path systems drawn on it.
//!
//! Interior edges are undirected. Edges touching a terminal are directed away
//! from sources and into sinks. Parallel edges are allowed, self-loops are not.
//! Vertex and edge ids are never reused once deleted, so ids stay meaningful
//! across subgraph operations. All iteration is in ascending id order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An edge `u - v`. When `directed`, it may only be traversed from `u` to `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub directed: bool,
}

impl Edge {
    /// The endpoint opposite to `x`, if `x` is an endpoint.
    pub fn opposite(&self, x: VertexId) -> Option<VertexId> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }

    /// `(tail, head)` when traversed in the given direction.
    pub fn oriented(&self, forward: bool) -> (VertexId, VertexId) {
        if forward {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }
}

/// A source/sink pair and its required minimum vertex cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pair {
    pub source: VertexId,
    pub sink: VertexId,
    pub demand: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Terminal {
    Source(usize),
    Sink(usize),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Network {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, Edge>,
    incidence: BTreeMap<VertexId, BTreeSet<EdgeId>>,
    pairs: Vec<Pair>,
    next_vertex: u32,
    next_edge: u32,
}

impl Network {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let id = VertexId(self.next_vertex);
        self.vertices.insert(id);
        self.incidence.insert(id, BTreeSet::new());
        self.next_vertex += 1;
        id
    }

    pub fn insert_vertex(&mut self, id: VertexId) -> Result<(), GraphError> {
        if !self.vertices.insert(id) {
            return Err(GraphError::DuplicateVertex(id));
        }
        self.incidence.insert(id, BTreeSet::new());
        self.next_vertex = self.next_vertex.max(id.0 + 1);
        Ok(())
    }

    /// Adds a source/sink pair and returns its index.
    pub fn add_pair(&mut self, source: VertexId, sink: VertexId, demand: u32) -> usize {
        self.pairs.push(Pair {
            source,
            sink,
            demand,
        });
        self.pairs.len() - 1
    }

    /// Adds an edge with the direction implied by its endpoints: directed when
    /// it touches a terminal (oriented out of sources and into sinks),
    /// undirected otherwise.
    pub fn connect(&mut self, a: VertexId, b: VertexId) -> Result<EdgeId, GraphError> {
        let (u, v, directed) = match (self.terminal(a), self.terminal(b)) {
            (None, None) => (a, b, false),
            (Some(Terminal::Sink(_)), _) | (_, Some(Terminal::Source(_))) => (b, a, true),
            _ => (a, b, true),
        };
        let id = EdgeId(self.next_edge);
        self.insert_edge(Edge { id, u, v, directed })?;
        Ok(id)
    }

    /// Inserts an edge exactly as given. Only local checks are made here;
    /// call [`Network::validate`] for the terminal invariants.
    pub fn insert_edge(&mut self, edge: Edge) -> Result<(), GraphError> {
        if edge.u == edge.v {
            return Err(GraphError::SelfLoop(edge.id, edge.u));
        }
        for x in [edge.u, edge.v] {
            if !self.vertices.contains(&x) {
                return Err(GraphError::UnknownVertex(edge.id, x));
            }
        }
        if self.edges.contains_key(&edge.id) {
            return Err(GraphError::DuplicateEdge(edge.id));
        }
        self.edges.insert(edge.id, edge);
        self.incidence.entry(edge.u).or_default().insert(edge.id);
        self.incidence.entry(edge.v).or_default().insert(edge.id);
        self.next_edge = self.next_edge.max(edge.id.0 + 1);
        Ok(())
    }

    pub fn remove_edge(&mut self, id: EdgeId) -> Option<Edge> {
        let edge = self.edges.remove(&id)?;
        for x in [edge.u, edge.v] {
            if let Some(set) = self.incidence.get_mut(&x) {
                set.remove(&id);
            }
        }
        Some(edge)
    }

    /// Removes a vertex together with its incident edges.
    pub fn remove_vertex(&mut self, v: VertexId) -> Vec<Edge> {
        let incident: Vec<EdgeId> = self
            .incidence
            .get(&v)
            .map(|s| s.iter().copied().collect())
            .unwrap_or_default();
        let removed = incident
            .into_iter()
            .filter_map(|e| self.remove_edge(e))
            .collect();
        self.vertices.remove(&v);
        self.incidence.remove(&v);
        removed
    }

    /// Drops non-terminal vertices with no incident edges.
    pub fn remove_isolated(&mut self) {
        let isolated: Vec<VertexId> = self
            .vertices
            .iter()
            .copied()
            .filter(|&v| self.degree(v) == 0 && self.terminal(v).is_none())
            .collect();
        for v in isolated {
            self.remove_vertex(v);
        }
    }

    pub fn without_edge(&self, id: EdgeId) -> Network {
        let mut g = self.clone();
        g.remove_edge(id);
        g
    }

    pub fn next_vertex_id(&self) -> VertexId {
        VertexId(self.next_vertex)
    }

    pub fn next_edge_id(&self) -> EdgeId {
        EdgeId(self.next_edge)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.values()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.get(&id)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn pair(&self, index: usize) -> Result<&Pair, GraphError> {
        self.pairs.get(index).ok_or(GraphError::NoSuchPair(index))
    }

    pub fn set_demand(&mut self, pair: usize, demand: u32) {
        self.pairs[pair].demand = demand;
    }

    pub fn demands(&self) -> Vec<u32> {
        self.pairs.iter().map(|p| p.demand).collect()
    }

    /// Incident edges of `v` in ascending id order.
    pub fn incident(&self, v: VertexId) -> impl Iterator<Item = &Edge> + '_ {
        self.incidence
            .get(&v)
            .into_iter()
            .flatten()
            .map(move |id| &self.edges[id])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn terminal(&self, v: VertexId) -> Option<Terminal> {
        self.pairs.iter().enumerate().find_map(|(i, p)| {
            if p.source == v {
                Some(Terminal::Source(i))
            } else if p.sink == v {
                Some(Terminal::Sink(i))
            } else {
                None
            }
        })
    }

    pub fn is_terminal(&self, v: VertexId) -> bool {
        self.terminal(v).is_some()
    }

    /// Non-terminal vertices in ascending id order.
    pub fn interior_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(move |&v| !self.is_terminal(v))
    }

    /// Non-terminal vertices of degree at least three.
    pub fn hubs(&self) -> BTreeSet<VertexId> {
        self.interior_vertices()
            .filter(|&v| self.degree(v) >= 3)
            .collect()
    }

    /// Checks every structural invariant of the model.
    pub fn validate(&self) -> Result<(), GraphError> {
        let mut seen = BTreeSet::new();
        for (i, p) in self.pairs.iter().enumerate() {
            if p.source == p.sink {
                return Err(GraphError::DegeneratePair(i));
            }
            if p.demand == 0 {
                return Err(GraphError::ZeroDemand(i));
            }
            for t in [p.source, p.sink] {
                if !self.vertices.contains(&t) {
                    return Err(GraphError::UnknownVertex(EdgeId(u32::MAX), t));
                }
                if !seen.insert(t) {
                    return Err(GraphError::SharedTerminal(t));
                }
            }
        }
        for e in self.edges.values() {
            if e.u == e.v {
                return Err(GraphError::SelfLoop(e.id, e.u));
            }
            let tu = self.terminal(e.u);
            let tv = self.terminal(e.v);
            if let Some(Terminal::Source(_)) = tv {
                return Err(GraphError::SourceIncomingEdge(e.id, e.v));
            }
            if let Some(Terminal::Sink(_)) = tu {
                return Err(GraphError::SinkOutgoingEdge(e.id, e.u));
            }
            let touches_terminal = tu.is_some() || tv.is_some();
            if touches_terminal && !e.directed {
                // an undirected edge at a source can also be entered
                return match (tu, tv) {
                    (Some(Terminal::Source(_)), _) => {
                        Err(GraphError::SourceIncomingEdge(e.id, e.u))
                    }
                    (_, Some(Terminal::Sink(_))) => Err(GraphError::SinkOutgoingEdge(e.id, e.v)),
                    _ => Err(GraphError::TerminalEdgeUndirected(e.id)),
                };
            }
            if !touches_terminal && e.directed {
                return Err(GraphError::InteriorEdgeDirected(e.id));
            }
        }
        Ok(())
    }
}

/// Number of hubs: non-terminal vertices of degree at least three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HubCount(pub usize);

impl fmt::Display for HubCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn hub_count(g: &Network) -> HubCount {
    HubCount(g.hubs().len())
}

/// One traversal of an edge; `forward` means from `u` to `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Step {
    pub edge: EdgeId,
    pub forward: bool,
}

/// A simple path, stored both as edge steps and as the vertex sequence
/// (`vertices.len() == steps.len() + 1`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    steps: Vec<Step>,
    vertices: Vec<VertexId>,
}

impl Path {
    /// Builds a path from its steps, checking continuity, simplicity and
    /// that directed edges are only traversed forward.
    pub fn from_steps(g: &Network, steps: Vec<Step>) -> Result<Path, GraphError> {
        let first = steps.first().ok_or(GraphError::EmptyPath)?;
        let e0 = g.edge(first.edge).ok_or(GraphError::UnknownEdge(first.edge))?;
        let mut vertices = vec![e0.oriented(first.forward).0];
        let mut seen: BTreeSet<VertexId> = vertices.iter().copied().collect();
        for s in &steps {
            let e = g.edge(s.edge).ok_or(GraphError::UnknownEdge(s.edge))?;
            if e.directed && !s.forward {
                return Err(GraphError::AgainstDirection(s.edge));
            }
            let (tail, head) = e.oriented(s.forward);
            let last = *vertices.last().expect("non-empty");
            if tail != last {
                return Err(GraphError::BrokenPath(s.edge, last));
            }
            if !seen.insert(head) {
                return Err(GraphError::NonSimplePath(head));
            }
            vertices.push(head);
        }
        Ok(Path { steps, vertices })
    }

    /// Builds a path from a vertex sequence, choosing at each hop the
    /// lowest-id edge between consecutive vertices that may be traversed in
    /// that direction.
    pub fn through(g: &Network, vertices: &[VertexId]) -> Result<Path, GraphError> {
        let mut steps = Vec::with_capacity(vertices.len().saturating_sub(1));
        for w in vertices.windows(2) {
            let step = g
                .incident(w[0])
                .find_map(|e| {
                    if e.u == w[0] && e.v == w[1] {
                        Some(Step {
                            edge: e.id,
                            forward: true,
                        })
                    } else if !e.directed && e.v == w[0] && e.u == w[1] {
                        Some(Step {
                            edge: e.id,
                            forward: false,
                        })
                    } else {
                        None
                    }
                })
                .ok_or(GraphError::BrokenPath(EdgeId(u32::MAX), w[0]))?;
            steps.push(step);
        }
        Path::from_steps(g, steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn tail(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn head(&self) -> VertexId {
        *self.vertices.last().expect("paths are non-empty")
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.steps.iter().map(|s| s.edge)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Interior vertices (everything but the two endpoints).
    pub fn inner_vertices(&self) -> &[VertexId] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

/// A set of `demand` internally vertex-disjoint source-to-sink paths for one
/// pair, with the natural orientation each path induces on its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystem {
    pair_index: usize,
    paths: Vec<Path>,
    orientation: BTreeMap<EdgeId, bool>,
    owner: BTreeMap<EdgeId, usize>,
    through: BTreeMap<VertexId, usize>,
}

impl PathSystem {
    pub fn new(g: &Network, pair_index: usize, paths: Vec<Path>) -> Result<Self, GraphError> {
        let pair = *g.pair(pair_index)?;
        if paths.len() != pair.demand as usize {
            return Err(GraphError::WrongPathCount {
                pair: pair_index,
                got: paths.len(),
                demand: pair.demand,
            });
        }
        Self::with_any_count(g, pair_index, paths)
    }

    /// Like [`PathSystem::new`] but accepts any number of paths.
    pub fn with_any_count(
        g: &Network,
        pair_index: usize,
        paths: Vec<Path>,
    ) -> Result<Self, GraphError> {
        let pair = *g.pair(pair_index)?;
        let mut orientation = BTreeMap::new();
        let mut owner = BTreeMap::new();
        let mut through = BTreeMap::new();
        for (k, p) in paths.iter().enumerate() {
            if p.tail() != pair.source || p.head() != pair.sink {
                return Err(GraphError::WrongEndpoints(pair_index));
            }
            for s in p.steps() {
                if orientation.insert(s.edge, s.forward).is_some() {
                    return Err(GraphError::RepeatedEdge(pair_index, s.edge));
                }
                owner.insert(s.edge, k);
            }
            for &v in p.inner_vertices() {
                if through.insert(v, k).is_some() {
                    return Err(GraphError::PathsIntersect(pair_index, v));
                }
            }
        }
        Ok(PathSystem {
            pair_index,
            paths,
            orientation,
            owner,
            through,
        })
    }

    pub fn from_steps(
        g: &Network,
        pair_index: usize,
        paths: Vec<Vec<Step>>,
    ) -> Result<Self, GraphError> {
        let paths = paths
            .into_iter()
            .map(|steps| Path::from_steps(g, steps))
            .collect::<Result<Vec<_>, _>>()?;
        PathSystem::new(g, pair_index, paths)
    }

    pub fn pair_index(&self) -> usize {
        self.pair_index
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    /// Natural direction of `e` in this system (`true` = from `u` to `v`).
    pub fn orientation(&self, e: EdgeId) -> Option<bool> {
        self.orientation.get(&e).copied()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.orientation.contains_key(&e)
    }

    /// Index of the path using edge `e`.
    pub fn path_of_edge(&self, e: EdgeId) -> Option<usize> {
        self.owner.get(&e).copied()
    }

    /// Index of the path passing through interior vertex `v`.
    pub fn path_through(&self, v: VertexId) -> Option<usize> {
        self.through.get(&v).copied()
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.orientation.keys().copied().collect()
    }

    /// `(tail, head)` of `e` under the natural orientation.
    pub fn oriented(&self, g: &Network, e: EdgeId) -> Option<(VertexId, VertexId)> {
        let fwd = self.orientation(e)?;
        Some(g.edge(e)?.oriented(fwd))
    }

    pub fn to_steps(&self) -> Vec<Vec<Step>> {
        self.paths.iter().map(|p| p.steps().to_vec()).collect()
    }

    /// Re-validates the system against another network containing the
    /// same edges (used after edge-id-preserving subgraph operations).
    pub fn rebind(&self, g: &Network) -> Result<Self, GraphError> {
        PathSystem::from_steps(g, self.pair_index, self.to_steps())
    }
}

/// A network together with one path system per pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoutedNetwork {
    pub network: Network,
    pub systems: Vec<PathSystem>,
}

impl RoutedNetwork {
    pub fn new(network: Network, systems: Vec<PathSystem>) -> Result<Self, GraphError> {
        network.validate()?;
        if systems.len() != network.pairs().len() {
            return Err(GraphError::SystemCount {
                expected: network.pairs().len(),
                got: systems.len(),
            });
        }
        for (i, s) in systems.iter().enumerate() {
            if s.pair_index() != i {
                return Err(GraphError::NoSuchPair(s.pair_index()));
            }
        }
        Ok(RoutedNetwork { network, systems })
    }

    /// True when every edge lies on some system path.
    pub fn is_system_union(&self) -> bool {
        self.network
            .edge_ids()
            .all(|e| self.systems.iter().any(|s| s.contains_edge(e)))
    }

    /// Keeps only the edges used by the systems (and drops isolated
    /// non-terminal vertices).
    pub fn restrict_to_systems(&self) -> RoutedNetwork {
        let mut g = self.network.clone();
        let unused: Vec<EdgeId> = g
            .edge_ids()
            .filter(|&e| !self.systems.iter().any(|s| s.contains_edge(e)))
            .collect();
        for e in unused {
            g.remove_edge(e);
        }
        g.remove_isolated();
        let systems = self
            .systems
            .iter()
            .map(|s| s.rebind(&g).expect("system edges were kept"))
            .collect();
        RoutedNetwork {
            network: g,
            systems,
        }
    }
}

/// Role of an edge relative to two path systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeClass {
    /// Used by both systems.
    Public,
    /// Used by exactly one system; carries that system's index (0 or 1).
    Private(usize),
    Unused,
}

/// Tags each edge as public, private (with owner) or unused. Defined for
/// exactly two systems.
pub fn classify_edges(
    g: &Network,
    systems: &[PathSystem],
) -> Result<BTreeMap<EdgeId, EdgeClass>, GraphError> {
    if systems.len() != 2 {
        return Err(GraphError::SystemCount {
            expected: 2,
            got: systems.len(),
        });
    }
    for s in systems {
        let mut seen = BTreeSet::new();
        for e in s.paths().iter().flat_map(Path::edges) {
            if !seen.insert(e) {
                return Err(GraphError::RepeatedEdge(s.pair_index(), e));
            }
            if g.edge(e).is_none() {
                return Err(GraphError::UnknownEdge(e));
            }
        }
    }
    Ok(g
        .edge_ids()
        .map(|e| {
            let class = match (systems[0].contains_edge(e), systems[1].contains_edge(e)) {
                (true, true) => EdgeClass::Public,
                (true, false) => EdgeClass::Private(0),
                (false, true) => EdgeClass::Private(1),
                (false, false) => EdgeClass::Unused,
            };
            (e, class)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(len: usize) -> (Network, Vec<VertexId>) {
        let mut g = Network::new();
        let s = g.add_vertex();
        let r = g.add_vertex();
        g.add_pair(s, r, 1);
        let mut vs = vec![s];
        for _ in 0..len {
            vs.push(g.add_vertex());
        }
        vs.push(r);
        for w in vs.windows(2) {
            g.connect(w[0], w[1]).unwrap();
        }
        (g, vs)
    }

    #[test]
    fn connect_orients_terminal_edges() {
        let (g, vs) = chain(2);
        let e0 = g.edge(EdgeId(0)).unwrap();
        assert!(e0.directed);
        assert_eq!((e0.u, e0.v), (vs[0], vs[1]));
        assert!(!g.edge(EdgeId(1)).unwrap().directed);
        let last = g.edge(EdgeId(2)).unwrap();
        assert_eq!(last.v, vs[3]);
        g.validate().unwrap();
    }

    #[test]
    fn self_loops_are_rejected() {
        let mut g = Network::new();
        let a = g.add_vertex();
        assert_eq!(g.connect(a, a).unwrap_err().name(), "self-loop");
    }

    #[test]
    fn source_with_incoming_edge_is_invalid() {
        let (mut g, vs) = chain(1);
        g.insert_edge(Edge {
            id: EdgeId(9),
            u: vs[1],
            v: vs[0],
            directed: true,
        })
        .unwrap();
        assert_eq!(g.validate().unwrap_err().name(), "source-incoming-edge");
    }

    #[test]
    fn ids_are_not_reused_after_deletion() {
        let (mut g, vs) = chain(1);
        g.remove_edge(EdgeId(1));
        let e = g.connect(vs[1], vs[2]).unwrap();
        assert_eq!(e, EdgeId(2));
        g.remove_vertex(vs[1]);
        assert_eq!(g.add_vertex(), VertexId(3));
    }

    #[test]
    fn bare_chain_has_no_hubs() {
        let (g, _) = chain(5);
        assert_eq!(hub_count(&g), HubCount(0));
    }

    #[test]
    fn path_rejects_backwards_terminal_edge() {
        let (g, _) = chain(1);
        let err = Path::from_steps(
            &g,
            vec![Step {
                edge: EdgeId(0),
                forward: false,
            }],
        )
        .unwrap_err();
        assert_eq!(err.name(), "against-direction");
    }

    #[test]
    fn path_system_checks_disjointness() {
        let mut g = Network::new();
        let s = g.add_vertex();
        let r = g.add_vertex();
        g.add_pair(s, r, 2);
        let a = g.add_vertex();
        g.connect(s, a).unwrap();
        g.connect(s, a).unwrap();
        g.connect(a, r).unwrap();
        g.connect(a, r).unwrap();
        let p1 = Path::through(&g, &[s, a, r]).unwrap();
        let p2 = Path::from_steps(
            &g,
            vec![
                Step { edge: EdgeId(1), forward: true },
                Step { edge: EdgeId(3), forward: true },
            ],
        )
        .unwrap();
        let err = PathSystem::new(&g, 0, vec![p1, p2]).unwrap_err();
        assert_eq!(err.name(), "paths-intersect");
    }

    #[test]
    fn classify_needs_two_systems() {
        let (g, vs) = chain(1);
        let p = Path::through(&g, &vs).unwrap();
        let sys = PathSystem::new(&g, 0, vec![p]).unwrap();
        assert_eq!(
            classify_edges(&g, std::slice::from_ref(&sys)).unwrap_err().name(),
            "system-count"
        );
    }
}
