//! Canonical degree-3 form of a minimal two-pair network and its
//! decomposition into alternating paths.
//!
//! The transformation runs in three stages: relay vertices (degree 2) are
//! contracted, every crossing vertex (degree 4) is split into two vertices
//! joined by a new shared edge, and every shared edge that the two systems
//! traverse in opposite directions is rewired so that both agree.

mod decompose;
mod steps;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, Network, PathSystem, RoutedNetwork, Step, VertexId};

pub use decompose::{decompose_private, AlternatingPath, Decomposition, PathKind};
pub use steps::{match_directions, match_directions_ordered, remove_relays, stretch_crossings};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepresentationError {
    #[error("degenerate-relay: relay vertex {0} has both edges to the same neighbour")]
    DegenerateRelay(VertexId),
    #[error("unexpected-degree-4: vertex {0} has degree 4 but is not a crossing")]
    UnexpectedDegree4(VertexId),
    #[error("decomposition-violation: {0}")]
    DecompositionViolation(String),
    #[error("invalid-input: {0}")]
    InvalidInput(String),
}

impl RepresentationError {
    pub fn name(&self) -> &'static str {
        match self {
            RepresentationError::DegenerateRelay(_) => "degenerate-relay",
            RepresentationError::UnexpectedDegree4(_) => "unexpected-degree-4",
            RepresentationError::DecompositionViolation(_) => "decomposition-violation",
            RepresentationError::InvalidInput(_) => "invalid-input",
        }
    }
}

/// Where each vertex and edge of a transformed network came from.
///
/// `edges` maps a new edge to the original edges it replaces: several for a
/// contracted relay chain, none for the shared edge created at a crossing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub vertices: BTreeMap<VertexId, VertexId>,
    pub edges: BTreeMap<EdgeId, Vec<EdgeId>>,
}

impl Provenance {
    pub fn identity(g: &Network) -> Self {
        Provenance {
            vertices: g.vertices().map(|v| (v, v)).collect(),
            edges: g.edge_ids().map(|e| (e, vec![e])).collect(),
        }
    }
}

/// An intermediate result of the transformation: a two-pair network with
/// its systems and provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    pub routed: RoutedNetwork,
    pub provenance: Provenance,
}

impl Stage {
    /// Starts a transformation. The network must have exactly two pairs and
    /// be the union of its two systems.
    pub fn new(routed: RoutedNetwork) -> Result<Stage, RepresentationError> {
        if routed.network.pairs().len() != 2 || routed.systems.len() != 2 {
            return Err(RepresentationError::InvalidInput(
                "representations are defined for exactly two pairs".into(),
            ));
        }
        if !routed.is_system_union() {
            return Err(RepresentationError::InvalidInput(
                "every edge must lie on a system path".into(),
            ));
        }
        let provenance = Provenance::identity(&routed.network);
        Ok(Stage { routed, provenance })
    }

    fn paths(&self) -> Vec<Vec<Vec<Step>>> {
        self.routed.systems.iter().map(PathSystem::to_steps).collect()
    }

    fn rebuild(
        g: Network,
        paths: Vec<Vec<Vec<Step>>>,
        provenance: Provenance,
    ) -> Result<Stage, RepresentationError> {
        let systems = paths
            .into_iter()
            .enumerate()
            .map(|(i, p)| PathSystem::from_steps(&g, i, p))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| RepresentationError::InvalidInput(e.to_string()))?;
        let routed = RoutedNetwork::new(g, systems)
            .map_err(|e| RepresentationError::InvalidInput(e.to_string()))?;
        Ok(Stage { routed, provenance })
    }

    pub fn hub_count(&self) -> usize {
        crate::graph::hub_count(&self.routed.network).0
    }
}

/// Hub counts after each stage of the transformation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StageHubs {
    pub original: usize,
    pub relay_free: usize,
    pub stretched: usize,
    pub matched: usize,
}

impl StageHubs {
    /// Relay removal and direction matching keep the hub count, crossing
    /// stretches can only add hubs.
    pub fn relation_holds(&self) -> bool {
        self.original == self.relay_free
            && self.relay_free <= self.stretched
            && self.stretched == self.matched
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub graph: Network,
    pub systems: Vec<PathSystem>,
    pub provenance: Provenance,
    pub naturally_oriented: bool,
    pub stage_hubs: StageHubs,
}

impl Representation {
    pub fn routed(&self) -> RoutedNetwork {
        RoutedNetwork {
            network: self.graph.clone(),
            systems: self.systems.clone(),
        }
    }

    pub fn hub_count(&self) -> usize {
        crate::graph::hub_count(&self.graph).0
    }

    /// `(tail, head)` of `e` under the natural orientation of whichever
    /// system uses it (the first system wins on shared edges).
    pub fn oriented(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.systems.iter().find_map(|s| s.oriented(&self.graph, e))
    }

    pub fn is_public(&self, e: EdgeId) -> bool {
        self.systems.iter().all(|s| s.contains_edge(e))
    }

    /// Structural invariants that do not need flow computations: every
    /// non-terminal has degree 3 with one shared edge and one private edge
    /// per system, and every shared edge is traversed the same way by both
    /// systems. Returns the violations found.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for v in self.graph.interior_vertices() {
            let deg = self.graph.degree(v);
            if deg != 3 {
                out.push(format!("vertex {v} has degree {deg}"));
                continue;
            }
            let mut public = 0;
            let mut private = [0; 2];
            for e in self.graph.incident(v) {
                match (self.systems[0].contains_edge(e.id), self.systems[1].contains_edge(e.id)) {
                    (true, true) => public += 1,
                    (true, false) => private[0] += 1,
                    (false, true) => private[1] += 1,
                    (false, false) => out.push(format!("edge {} is unused", e.id)),
                }
            }
            if public != 1 || private != [1, 1] {
                out.push(format!("vertex {v} does not have one shared and two private edges"));
            }
        }
        if !self.naturally_oriented {
            out.push("some shared edge has inconsistent directions".into());
        }
        out
    }
}

fn naturally_oriented(g: &Network, systems: &[PathSystem]) -> bool {
    g.edge_ids().all(|e| {
        match (systems[0].orientation(e), systems[1].orientation(e)) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    })
}

/// Full transformation with shared edges processed in ascending id order.
pub fn to_representation(routed: &RoutedNetwork) -> Result<Representation, RepresentationError> {
    to_representation_ordered(routed, None)
}

/// As [`to_representation`]; a seed shuffles the order in which
/// inconsistent shared edges are rewired.
pub fn to_representation_ordered(
    routed: &RoutedNetwork,
    seed: Option<u64>,
) -> Result<Representation, RepresentationError> {
    let s0 = Stage::new(routed.clone())?;
    let s1 = remove_relays(&s0)?;
    let s2 = stretch_crossings(&s1)?;
    let s3 = match_directions_ordered(&s2, seed)?;
    let stage_hubs = StageHubs {
        original: s0.hub_count(),
        relay_free: s1.hub_count(),
        stretched: s2.hub_count(),
        matched: s3.hub_count(),
    };
    let Stage { routed, provenance } = s3;
    let naturally_oriented = naturally_oriented(&routed.network, &routed.systems);
    Ok(Representation {
        graph: routed.network,
        systems: routed.systems,
        provenance,
        naturally_oriented,
        stage_hubs,
    })
}

/// Id-free description of a two-pair network with systems, used to compare
/// results that differ only in the ids of newly created edges: the sorted
/// list of `(tail, head, on first system, on second system)`.
pub fn structural_signature(r: &RoutedNetwork) -> Vec<(VertexId, VertexId, bool, bool)> {
    let mut sig: Vec<_> = r
        .network
        .edges()
        .map(|e| {
            let (t, h) = r
                .systems
                .iter()
                .find_map(|s| s.oriented(&r.network, e.id))
                .unwrap_or((e.u, e.v));
            (t, h, r.systems[0].contains_edge(e.id), r.systems[1].contains_edge(e.id))
        })
        .collect();
    sig.sort();
    sig
}

/// Vertices of the network visited by a step list, in order.
fn step_vertices(g: &Network, steps: &[Step]) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(steps.len() + 1);
    for (k, s) in steps.iter().enumerate() {
        let (t, h) = g.edge(s.edge).expect("system edge exists").oriented(s.forward);
        if k == 0 {
            out.push(t);
        }
        out.push(h);
    }
    out
}

fn sorted_union(a: &[EdgeId], b: &[EdgeId]) -> Vec<EdgeId> {
    let set: BTreeSet<EdgeId> = a.iter().chain(b).copied().collect();
    set.into_iter().collect()
}

#[cfg(test)]
mod tests;
