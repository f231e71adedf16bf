use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{Representation, RepresentationError};
use crate::graph::{EdgeClass, EdgeId, VertexId};

/// Terminal pair of an alternating path, named by its start and end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PathKind {
    S1S2,
    S1R1,
    R2S2,
    R2R1,
}

/// A maximal path of private edges. It starts at the first source or the
/// second sink (its anchor), and "right" means farther from the anchor.
///
/// Every inner vertex is the tail of both its path edges (upper deck) or
/// the head of both (lower deck).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlternatingPath {
    pub kind: PathKind,
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
    pub upper: Vec<VertexId>,
    pub lower: Vec<VertexId>,
    pub choke: Option<VertexId>,
}

impl AlternatingPath {
    /// Distance from the anchor, counted in edges.
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    pub fn is_right_of(&self, a: VertexId, b: VertexId) -> bool {
        matches!((self.position(a), self.position(b)), (Some(x), Some(y)) if x > y)
    }

    /// Edge `a` is right of edge `b` when it has an endpoint right of both
    /// endpoints of `b`.
    pub fn edge_is_right_of(&self, a: EdgeId, b: EdgeId) -> bool {
        match (
            self.edges.iter().position(|&e| e == a),
            self.edges.iter().position(|&e| e == b),
        ) {
            (Some(x), Some(y)) => x > y,
            _ => false,
        }
    }

    /// Inner vertices; in a representation these are all hubs.
    pub fn hubs(&self) -> &[VertexId] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub paths: Vec<AlternatingPath>,
    /// Number of paths joining the two sources (equal to the number joining
    /// the two sinks).
    pub delta: usize,
}

impl Decomposition {
    /// Counts in the order S1S2, R2R1, S1R1, R2S2.
    pub fn kind_counts(&self) -> [usize; 4] {
        let count = |k| self.paths.iter().filter(|p| p.kind == k).count();
        [
            count(PathKind::S1S2),
            count(PathKind::R2R1),
            count(PathKind::S1R1),
            count(PathKind::R2S2),
        ]
    }

    /// Index of the path containing `v` as an inner vertex.
    pub fn path_of_vertex(&self, v: VertexId) -> Option<usize> {
        self.paths.iter().position(|p| p.hubs().contains(&v))
    }

    pub fn path_of_edge(&self, e: EdgeId) -> Option<usize> {
        self.paths.iter().position(|p| p.edges.contains(&e))
    }
}

fn violation(msg: impl Into<String>) -> RepresentationError {
    RepresentationError::DecompositionViolation(msg.into())
}

/// Splits the private edges of a representation into alternating paths and
/// checks the structure: the paths partition the private edges, there are
/// as many as the two demands together, consecutive edges belong to
/// different systems, edges of one system on a path come from different
/// paths of that system, and the kind counts match.
pub fn decompose_private(rep: &Representation) -> Result<Decomposition, RepresentationError> {
    let g = &rep.graph;
    let classes = crate::graph::classify_edges(g, &rep.systems)
        .map_err(|e| RepresentationError::InvalidInput(e.to_string()))?;
    let owner: BTreeMap<EdgeId, usize> = classes
        .iter()
        .filter_map(|(&e, &c)| match c {
            EdgeClass::Private(o) => Some((e, o)),
            _ => None,
        })
        .collect();
    let orient = |e: EdgeId| rep.systems[owner[&e]].oriented(g, e).expect("owned edge");
    let private_at = |v: VertexId| -> Vec<EdgeId> {
        g.incident(v).map(|e| e.id).filter(|e| owner.contains_key(e)).collect()
    };

    let (p1, p2) = (g.pairs()[0], g.pairs()[1]);
    let (s1, r1, s2, r2) = (p1.source, p1.sink, p2.source, p2.sink);
    let starts: Vec<(VertexId, EdgeId)> = private_at(s1)
        .into_iter()
        .map(|e| (s1, e))
        .chain(private_at(r2).into_iter().map(|e| (r2, e)))
        .collect();

    let mut used = BTreeSet::new();
    let mut paths = Vec::new();
    for (anchor, first) in starts {
        let mut vertices = vec![anchor];
        let mut edges = Vec::new();
        let mut cur = anchor;
        let mut e = first;
        loop {
            if !used.insert(e) {
                return Err(violation(format!("edge {e} reached twice")));
            }
            edges.push(e);
            let next = g.edge(e).and_then(|ed| ed.opposite(cur)).expect("incident edge");
            vertices.push(next);
            if g.is_terminal(next) {
                break;
            }
            let at = private_at(next);
            if at.len() != 2 {
                return Err(violation(format!(
                    "vertex {next} has {} private edges",
                    at.len()
                )));
            }
            e = if at[0] == e { at[1] } else { at[0] };
            cur = next;
        }
        let end = *vertices.last().expect("non-empty");
        let kind = match (anchor == s1, end) {
            (true, x) if x == s2 => PathKind::S1S2,
            (true, x) if x == r1 => PathKind::S1R1,
            (false, x) if x == s2 => PathKind::R2S2,
            (false, x) if x == r1 => PathKind::R2R1,
            _ => return Err(violation(format!("path from {anchor} ends at {end}"))),
        };
        paths.push(build_path(kind, edges, vertices, &owner, &orient, rep)?);
    }
    if used.len() != owner.len() {
        return Err(violation("some private edges lie on no alternating path"));
    }

    let demands = (p1.demand as usize, p2.demand as usize);
    if paths.len() != demands.0 + demands.1 {
        return Err(violation(format!(
            "{} alternating paths, expected {}",
            paths.len(),
            demands.0 + demands.1
        )));
    }
    let d = Decomposition { paths, delta: 0 };
    let [ss, rr, sr, rs] = d.kind_counts();
    if ss != rr || ss > demands.0 || ss > demands.1 || sr != demands.0 - ss || rs != demands.1 - ss
    {
        return Err(violation(format!(
            "kind counts (S1S2 {ss}, R2R1 {rr}, S1R1 {sr}, R2S2 {rs}) do not fit demands {demands:?}"
        )));
    }
    Ok(Decomposition { delta: ss, ..d })
}

fn build_path(
    kind: PathKind,
    edges: Vec<EdgeId>,
    vertices: Vec<VertexId>,
    owner: &BTreeMap<EdgeId, usize>,
    orient: &dyn Fn(EdgeId) -> (VertexId, VertexId),
    rep: &Representation,
) -> Result<AlternatingPath, RepresentationError> {
    for w in edges.windows(2) {
        if owner[&w[0]] == owner[&w[1]] {
            return Err(violation(format!(
                "edges {} and {} are adjacent and owned by the same system",
                w[0], w[1]
            )));
        }
    }
    let mut parents = BTreeSet::new();
    for &e in &edges {
        let o = owner[&e];
        let parent = rep.systems[o].path_of_edge(e).expect("owned edge");
        if !parents.insert((o, parent)) {
            return Err(violation(format!(
                "two edges of system {o} path {parent} on one alternating path"
            )));
        }
    }
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for k in 1..vertices.len() - 1 {
        let v = vertices[k];
        let (a, b) = (orient(edges[k - 1]), orient(edges[k]));
        match (a.0 == v && b.0 == v, a.1 == v && b.1 == v) {
            (true, false) => upper.push(v),
            (false, true) => lower.push(v),
            _ => {
                return Err(violation(format!(
                    "vertex {v} is head of one path edge and tail of the other"
                )))
            }
        }
    }
    let decks_ok = match kind {
        PathKind::S1S2 => lower.len() == upper.len() + 1,
        PathKind::R2R1 => upper.len() == lower.len() + 1,
        PathKind::S1R1 | PathKind::R2S2 => upper.len() == lower.len(),
    };
    if !decks_ok {
        return Err(violation(format!(
            "{kind:?} path has {} upper and {} lower vertices",
            upper.len(),
            lower.len()
        )));
    }
    let choke = match kind {
        PathKind::S1S2 => lower.last().copied(),
        PathKind::R2R1 => upper.last().copied(),
        _ => None,
    };
    Ok(AlternatingPath {
        kind,
        edges,
        vertices,
        upper,
        lower,
        choke,
    })
}
