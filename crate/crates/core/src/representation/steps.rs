use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{sorted_union, step_vertices, RepresentationError, Stage};
use crate::graph::{Edge, EdgeId, Network, Step, VertexId};

/// Inserts an edge oriented `tail -> head`; directed iff it touches a
/// terminal. Returns a forward step over it.
fn add_oriented(g: &mut Network, tail: VertexId, head: VertexId) -> Step {
    let id = g.next_edge_id();
    let directed = g.is_terminal(tail) || g.is_terminal(head);
    g.insert_edge(Edge {
        id,
        u: tail,
        v: head,
        directed,
    })
    .expect("endpoints exist and differ");
    Step {
        edge: id,
        forward: true,
    }
}

/// Contracts every non-terminal vertex of degree 2 into a single edge,
/// lowest vertex id first. Paths through the vertex are rewritten over the
/// new edge.
pub fn remove_relays(stage: &Stage) -> Result<Stage, RepresentationError> {
    let mut g = stage.routed.network.clone();
    let mut paths = stage.paths();
    let mut prov = stage.provenance.clone();
    loop {
        let relay = g.interior_vertices().find(|&v| g.degree(v) == 2);
        let Some(v) = relay else { break };
        let inc: Vec<Edge> = g.incident(v).copied().collect();
        let (e1, e2) = (inc[0], inc[1]);
        let u1 = e1.opposite(v).expect("incident");
        let u2 = e2.opposite(v).expect("incident");
        if u1 == u2 {
            return Err(RepresentationError::DegenerateRelay(v));
        }
        // (system, path, index of the first of the two steps, tail)
        let mut hits = Vec::new();
        for (s, sys) in paths.iter().enumerate() {
            for (p, steps) in sys.iter().enumerate() {
                if let Some(k) = steps.iter().position(|st| st.edge == e1.id || st.edge == e2.id) {
                    let tail = step_vertices(&g, &steps[k..k + 1])[0];
                    hits.push((s, p, k, tail));
                }
            }
        }
        let (tail, head) = match hits.first() {
            Some(&(_, _, _, t)) => (t, if t == u1 { u2 } else { u1 }),
            None => (u1, u2),
        };
        g.remove_edge(e1.id);
        g.remove_edge(e2.id);
        g.remove_vertex(v);
        let (tail, head) = if hits.is_empty()
            && (g.terminal(tail).is_some_and(|t| matches!(t, crate::graph::Terminal::Sink(_)))
                || g.terminal(head).is_some_and(|t| matches!(t, crate::graph::Terminal::Source(_))))
        {
            (head, tail)
        } else {
            (tail, head)
        };
        let step = add_oriented(&mut g, tail, head);
        for (s, p, k, t) in hits {
            let forward = t == tail;
            paths[s][p].splice(
                k..k + 2,
                [Step {
                    edge: step.edge,
                    forward,
                }],
            );
        }
        let merged = sorted_union(
            &prov.edges.remove(&e1.id).unwrap_or_default(),
            &prov.edges.remove(&e2.id).unwrap_or_default(),
        );
        prov.edges.insert(step.edge, merged);
        prov.vertices.remove(&v);
    }
    Stage::rebuild(g, paths, prov)
}

/// Where a vertex sits on one system: path index, and the steps entering
/// and leaving it.
fn passage(
    g: &Network,
    sys: &[Vec<Step>],
    v: VertexId,
) -> Option<(usize, usize, VertexId, VertexId)> {
    sys.iter().enumerate().find_map(|(p, steps)| {
        let vs = step_vertices(g, steps);
        let k = vs.iter().position(|&x| x == v)?;
        (k > 0 && k + 1 < vs.len()).then(|| (p, k, vs[k - 1], vs[k + 1]))
    })
}

/// Splits every crossing vertex (degree 4, two edges per system, none
/// shared) into `v1 -> v2` joined by a new shared edge. `v1` takes both
/// predecessors, `v2` both successors. Vertices are processed in ascending
/// id order.
pub fn stretch_crossings(stage: &Stage) -> Result<Stage, RepresentationError> {
    let mut g = stage.routed.network.clone();
    let mut paths = stage.paths();
    let mut prov = stage.provenance.clone();
    let crossings: Vec<VertexId> = g.interior_vertices().filter(|&v| g.degree(v) == 4).collect();
    for v in crossings {
        let (Some(phi), Some(psi)) = (passage(&g, &paths[0], v), passage(&g, &paths[1], v)) else {
            return Err(RepresentationError::UnexpectedDegree4(v));
        };
        let (pp, kp, u1, u2) = phi;
        let (qp, kq, u3, u4) = psi;
        let old = [
            paths[0][pp][kp - 1].edge,
            paths[0][pp][kp].edge,
            paths[1][qp][kq - 1].edge,
            paths[1][qp][kq].edge,
        ];
        let distinct_edges = old.iter().collect::<std::collections::BTreeSet<_>>().len() == 4;
        let distinct_nbrs = [u1, u2, u3, u4]
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len()
            == 4;
        if !distinct_edges || !distinct_nbrs {
            return Err(RepresentationError::UnexpectedDegree4(v));
        }
        for e in old {
            g.remove_edge(e);
        }
        g.remove_vertex(v);
        let v1 = g.add_vertex();
        let v2 = g.add_vertex();
        let shared = add_oriented(&mut g, v1, v2);
        let a1 = add_oriented(&mut g, u1, v1);
        let a3 = add_oriented(&mut g, u3, v1);
        let a2 = add_oriented(&mut g, v2, u2);
        let a4 = add_oriented(&mut g, v2, u4);
        paths[0][pp].splice(kp - 1..kp + 1, [a1, shared, a2]);
        paths[1][qp].splice(kq - 1..kq + 1, [a3, shared, a4]);
        let origin = prov.vertices.remove(&v).unwrap_or(v);
        prov.vertices.insert(v1, origin);
        prov.vertices.insert(v2, origin);
        let mut take = |e: EdgeId| prov.edges.remove(&e).unwrap_or_default();
        let from = [take(old[0]), take(old[1]), take(old[2]), take(old[3])];
        prov.edges.insert(shared.edge, Vec::new());
        prov.edges.insert(a1.edge, from[0].clone());
        prov.edges.insert(a2.edge, from[1].clone());
        prov.edges.insert(a3.edge, from[2].clone());
        prov.edges.insert(a4.edge, from[3].clone());
    }
    Stage::rebuild(g, paths, prov)
}

/// Rewires every shared edge that the two systems traverse in opposite
/// directions, in ascending edge id order.
pub fn match_directions(stage: &Stage) -> Result<Stage, RepresentationError> {
    match_directions_ordered(stage, None)
}

/// As [`match_directions`]; a seed shuffles the processing order.
///
/// For a shared edge traversed `u -> v` by the first system and
/// `w3 -> v -> u -> w4` by the second, the edges `(w3, v)` and `(u, w4)` are
/// replaced by `(w3, u)` and `(v, w4)`, so the second system now runs
/// `w3 -> u -> v -> w4`.
pub fn match_directions_ordered(
    stage: &Stage,
    seed: Option<u64>,
) -> Result<Stage, RepresentationError> {
    let mut g = stage.routed.network.clone();
    let mut paths = stage.paths();
    let mut prov = stage.provenance.clone();
    let [phi, psi] = [&stage.routed.systems[0], &stage.routed.systems[1]];
    let mut todo: Vec<EdgeId> = g
        .edge_ids()
        .filter(|&e| matches!((phi.orientation(e), psi.orientation(e)), (Some(a), Some(b)) if a != b))
        .collect();
    if let Some(seed) = seed {
        todo.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    for e in todo {
        let phi_forward = phi.orientation(e).expect("shared edge");
        let (p, k) = paths[1]
            .iter()
            .enumerate()
            .find_map(|(p, steps)| steps.iter().position(|s| s.edge == e).map(|k| (p, k)))
            .expect("shared edge lies on the second system");
        let steps = &paths[1][p];
        if k == 0 || k + 1 >= steps.len() {
            return Err(RepresentationError::InvalidInput(format!(
                "shared edge {e} touches a terminal"
            )));
        }
        let vs = step_vertices(&g, &steps[k - 1..k + 2]);
        let (w3, v, u, w4) = (vs[0], vs[1], vs[2], vs[3]);
        let (in_edge, out_edge) = (steps[k - 1].edge, steps[k + 1].edge);
        g.remove_edge(in_edge);
        g.remove_edge(out_edge);
        let a = add_oriented(&mut g, w3, u);
        let b = add_oriented(&mut g, v, w4);
        paths[1][p].splice(
            k - 1..k + 2,
            [
                a,
                Step {
                    edge: e,
                    forward: phi_forward,
                },
                b,
            ],
        );
        let from_in = prov.edges.remove(&in_edge).unwrap_or_default();
        let from_out = prov.edges.remove(&out_edge).unwrap_or_default();
        prov.edges.insert(a.edge, from_in);
        prov.edges.insert(b.edge, from_out);
    }
    Stage::rebuild(g, paths, prov)
}
