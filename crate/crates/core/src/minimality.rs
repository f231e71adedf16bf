//! Minimality of networks, and the three equivalent characterizations for
//! two pairs: edge-minimality, non-reroutability and absence of consistent
//! cycles.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cuts::{in_class, meets_demands};
use crate::error::{Error, Result};
use crate::flow::{EdgeCapacity, SplitNetwork};
use crate::graph::{EdgeClass, EdgeId, Network, PathSystem, RoutedNetwork, Step, VertexId};

/// A cycle that traverses every edge of the tagged system in its natural
/// direction. Other edges may be crossed either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistentCycle {
    pub steps: Vec<Step>,
    pub system_tag: usize,
}

impl ConsistentCycle {
    /// Checks closure, simplicity, direction consistency, that no terminal
    /// is visited, and that every vertex on a tagged path is entered or
    /// left along a tagged edge.
    pub fn is_valid(&self, g: &Network, systems: &[PathSystem]) -> bool {
        if self.steps.is_empty() {
            return false;
        }
        let mut seen_v = BTreeSet::new();
        let mut seen_e = BTreeSet::new();
        let mut prev_head = None;
        let mut first_tail = None;
        for s in &self.steps {
            let Some(e) = g.edge(s.edge) else {
                return false;
            };
            if e.directed && !s.forward {
                return false;
            }
            if let Some(fwd) = systems[self.system_tag].orientation(s.edge) {
                if fwd != s.forward {
                    return false;
                }
            }
            let (t, h) = e.oriented(s.forward);
            if g.is_terminal(t) || !seen_e.insert(s.edge) || !seen_v.insert(t) {
                return false;
            }
            if let Some(ph) = prev_head {
                if ph != t {
                    return false;
                }
            }
            first_tail.get_or_insert(t);
            prev_head = Some(h);
        }
        let sys = &systems[self.system_tag];
        let n = self.steps.len();
        let passes_on_tagged_edge = (0..n).all(|k| {
            let (a, b) = (self.steps[k], self.steps[(k + 1) % n]);
            let v = g.edge(a.edge).expect("checked").oriented(a.forward).1;
            sys.path_through(v).is_none() || sys.contains_edge(a.edge) || sys.contains_edge(b.edge)
        });
        prev_head == first_tail && passes_on_tagged_edge
    }
}

/// Looks for a cycle consistent with `systems[tag]`, avoiding terminals.
///
/// A vertex on a tagged path must be entered or left along a tagged edge;
/// passing through it on two other edges does not count (such a cycle
/// gives no second path system, since the vertex is already in use).
///
/// Each tagged vertex `v` becomes two nodes: `In(v)`, reached by its tagged
/// in-edge, and `Out(v)`, which leaves by its tagged out-edge, joined by an
/// arc `In(v) -> Out(v)`. A free edge `{x, y}` gives arcs from the `In`
/// side of one end to the `Out` side of the other. Free edges between
/// untagged vertices stay two-way; a cycle among them is returned at once,
/// otherwise their trees are contracted and the result searched for a
/// directed cycle.
pub fn find_consistent_cycle(
    g: &Network,
    systems: &[PathSystem],
    tag: usize,
) -> Option<ConsistentCycle> {
    let sys = &systems[tag];
    let tagged = |v: VertexId| sys.path_through(v).is_some();
    let verts: Vec<VertexId> = g.interior_vertices().collect();
    let mut free_adj: BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> =
        verts.iter().map(|&v| (v, Vec::new())).collect();
    let mut uf = UnionFind::new(&verts);
    let mut arcs: Vec<Arc> = verts
        .iter()
        .filter(|&&v| tagged(v))
        .map(|&v| Arc {
            from: End::In(v),
            to: End::Out(v),
            step: None,
            tail: v,
            head: v,
        })
        .collect();
    for e in g.edges() {
        if g.is_terminal(e.u) || g.is_terminal(e.v) {
            continue;
        }
        if let Some(fwd) = sys.orientation(e.id) {
            let (t, h) = e.oriented(fwd);
            arcs.push(Arc {
                from: End::Out(t),
                to: End::In(h),
                step: Some(Step { edge: e.id, forward: fwd }),
                tail: t,
                head: h,
            });
            continue;
        }
        match (tagged(e.u), tagged(e.v)) {
            (false, false) => {
                if uf.find(e.u) == uf.find(e.v) {
                    // the free edge closes a cycle inside the forest
                    let mut steps = forest_path(g, &free_adj, e.v, e.u);
                    steps.push(Step { edge: e.id, forward: true });
                    return Some(ConsistentCycle { steps, system_tag: tag });
                }
                uf.union(e.u, e.v);
                free_adj.get_mut(&e.u).unwrap().push((e.id, e.v));
                free_adj.get_mut(&e.v).unwrap().push((e.id, e.u));
            }
            (tu, tv) => {
                let side = |v: VertexId, t: bool, leaving: bool| match (t, leaving) {
                    (false, _) => End::Tree(v),
                    (true, true) => End::In(v),
                    (true, false) => End::Out(v),
                };
                for (x, tx, y, ty, forward) in [(e.u, tu, e.v, tv, true), (e.v, tv, e.u, tu, false)] {
                    arcs.push(Arc {
                        from: side(x, tx, true),
                        to: side(y, ty, false),
                        step: Some(Step { edge: e.id, forward }),
                        tail: x,
                        head: y,
                    });
                }
            }
        }
    }

    let node = |uf: &mut UnionFind, end: End| match end {
        End::Tree(v) => End::Tree(uf.find(v)),
        other => other,
    };
    let mut out: BTreeMap<End, Vec<usize>> = BTreeMap::new();
    for (i, a) in arcs.iter().enumerate() {
        let from = node(&mut uf, a.from);
        out.entry(from).or_default().push(i);
    }
    let mut cycle = find_node_cycle(&out, &arcs, &mut uf)?;
    shortcut_split_vertices(&mut cycle, &arcs);

    let mut steps = Vec::new();
    for (k, &i) in cycle.iter().enumerate() {
        let next = cycle[(k + 1) % cycle.len()];
        steps.extend(arcs[i].step);
        if matches!(arcs[i].to, End::Tree(_)) {
            steps.extend(forest_path(g, &free_adj, arcs[i].head, arcs[next].tail));
        }
    }
    Some(ConsistentCycle { steps, system_tag: tag })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum End {
    Tree(VertexId),
    In(VertexId),
    Out(VertexId),
}

struct Arc {
    from: End,
    to: End,
    step: Option<Step>,
    tail: VertexId,
    head: VertexId,
}

/// Where `In(v)` and `Out(v)` both occur but not back to back, the cycle
/// visits `v` twice; the stretch between them is replaced by the arc
/// `In(v) -> Out(v)`.
fn shortcut_split_vertices(cycle: &mut Vec<usize>, arcs: &[Arc]) {
    loop {
        let n = cycle.len();
        let found = (0..n).find_map(|i| {
            let End::In(v) = arcs[cycle[i]].to else { return None };
            let j = (1..n).map(|d| (i + d) % n).find(|&j| arcs[cycle[j]].from == End::Out(v))?;
            (arcs[cycle[(i + 1) % n]].to != End::Out(v)).then_some((i, j, v))
        });
        let Some((i, j, v)) = found else { return };
        let internal = arcs
            .iter()
            .position(|a| a.from == End::In(v) && a.to == End::Out(v))
            .expect("tagged vertex has an internal arc");
        // keep arcs j, j+1, ..., i (cyclically), then the internal arc
        let mut kept = Vec::new();
        let mut k = j;
        loop {
            kept.push(cycle[k]);
            if k == i {
                break;
            }
            k = (k + 1) % n;
        }
        kept.push(internal);
        *cycle = kept;
    }
}

/// Directed cycle in the contracted digraph, returned as arc indices.
fn find_node_cycle(
    out: &BTreeMap<End, Vec<usize>>,
    arcs: &[Arc],
    uf: &mut UnionFind,
) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Open,
        Done,
    }
    let canon = |uf: &mut UnionFind, e: End| match e {
        End::Tree(v) => End::Tree(uf.find(v)),
        other => other,
    };
    let mut mark: BTreeMap<End, Mark> = BTreeMap::new();
    let roots: Vec<End> = out.keys().copied().collect();
    for root in roots {
        if mark.contains_key(&root) {
            continue;
        }
        // iterative DFS; stack holds (node, next arc position, arc used to enter)
        let mut stack: Vec<(End, usize, Option<usize>)> = vec![(root, 0, None)];
        mark.insert(root, Mark::Open);
        while let Some(&mut (c, ref mut pos, _)) = stack.last_mut() {
            let list = out.get(&c).map(Vec::as_slice).unwrap_or(&[]);
            if *pos == list.len() {
                mark.insert(c, Mark::Done);
                stack.pop();
                continue;
            }
            let a = list[*pos];
            *pos += 1;
            let next = canon(uf, arcs[a].to);
            match mark.get(&next) {
                None => {
                    mark.insert(next, Mark::Open);
                    stack.push((next, 0, Some(a)));
                }
                Some(Mark::Open) => {
                    let start = stack.iter().position(|f| f.0 == next).unwrap();
                    let mut cyc: Vec<usize> = stack[start + 1..].iter().filter_map(|f| f.2).collect();
                    cyc.push(a);
                    return Some(cyc);
                }
                Some(Mark::Done) => {}
            }
        }
    }
    None
}

/// The unique path between two vertices of the same free-edge tree.
fn forest_path(
    g: &Network,
    adj: &BTreeMap<VertexId, Vec<(EdgeId, VertexId)>>,
    from: VertexId,
    to: VertexId,
) -> Vec<Step> {
    let mut pred: BTreeMap<VertexId, (EdgeId, VertexId)> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    let mut seen = BTreeSet::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &(e, y) in &adj[&x] {
            if seen.insert(y) {
                pred.insert(y, (e, x));
                queue.push_back(y);
            }
        }
    }
    let mut steps = Vec::new();
    let mut x = to;
    while x != from {
        let (e, p) = pred[&x];
        steps.push(Step {
            edge: e,
            forward: g.edge(e).map(|ed| ed.u == p).unwrap_or(true),
        });
        x = p;
    }
    steps.reverse();
    steps
}

struct UnionFind {
    parent: BTreeMap<VertexId, VertexId>,
}

impl UnionFind {
    fn new(vs: &[VertexId]) -> Self {
        UnionFind {
            parent: vs.iter().map(|&v| (v, v)).collect(),
        }
    }

    fn find(&mut self, v: VertexId) -> VertexId {
        let p = self.parent[&v];
        if p == v {
            return v;
        }
        let r = self.find(p);
        self.parent.insert(v, r);
        r
    }

    fn union(&mut self, a: VertexId, b: VertexId) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent.insert(ra.max(rb), ra.min(rb));
        }
    }
}

/// True iff the pair admits a set of vertex-disjoint paths other than
/// `systems[pair_index]`.
///
/// The given system is loaded as a unit flow on the vertex-split network;
/// another system exists exactly when some residual cycle runs through the
/// reverse of a loaded arc.
pub fn is_reroutable(g: &Network, systems: &[PathSystem], pair_index: usize) -> bool {
    let mut net = SplitNetwork::build(g, pair_index, EdgeCapacity::Unit);
    net.load_paths(systems[pair_index].paths());
    net.has_alternative_flow()
}

/// Minimality by definition: in class, and deleting any single edge leaves
/// the class.
pub fn is_minimal(g: &Network) -> Result<bool> {
    if !in_class(g) {
        return Err(Error::NotInClass("is_minimal requires an in-class network".into()));
    }
    Ok(g.edge_ids().all(|e| !meets_demands(&g.without_edge(e))))
}

/// Deletes edges while membership holds, sweeping in ascending id order and
/// restarting after each deletion. Isolated non-terminal vertices are
/// dropped from the result.
pub fn minimalize(g: &Network) -> Result<Network> {
    minimalize_with(g, None)
}

/// As [`minimalize`], with an optional seed that shuffles the sweep order to
/// sample a different minimal subgraph.
pub fn minimalize_with(g: &Network, seed: Option<u64>) -> Result<Network> {
    if !in_class(g) {
        return Err(Error::NotInClass("minimalize requires an in-class network".into()));
    }
    let mut order: Vec<EdgeId> = g.edge_ids().collect();
    if let Some(seed) = seed {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut cur = g.clone();
    'sweep: loop {
        for &e in &order {
            if cur.edge(e).is_none() {
                continue;
            }
            let cand = cur.without_edge(e);
            if meets_demands(&cand) {
                cur = cand;
                continue 'sweep;
            }
        }
        break;
    }
    cur.remove_isolated();
    Ok(cur)
}

/// A minimal sub-network together with path systems that cover it.
pub fn minimalize_routed(g: &Network, seed: Option<u64>) -> Result<RoutedNetwork> {
    let m = minimalize_with(g, seed)?;
    route(&m)
}

/// Computes one path system per pair (lowest-id decomposition).
pub fn route(g: &Network) -> Result<RoutedNetwork> {
    let systems = (0..g.pairs().len())
        .map(|i| {
            let d = g.pairs()[i].demand;
            crate::cuts::vertex_disjoint_paths(g, i, d)?
                .ok_or_else(|| Error::NotInClass(format!("pair {i} cannot route its demand")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RoutedNetwork::new(g.clone(), systems)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CharacterizationReport {
    pub minimal: bool,
    pub non_reroutable: bool,
    pub no_consistent_cycle: bool,
    pub agree: bool,
}

/// Evaluates the three minimality characterizations on a two-pair network
/// that is the union of its two systems.
pub fn characterization_agreement(g: &Network, systems: &[PathSystem]) -> Result<CharacterizationReport> {
    if g.pairs().len() != 2 || systems.len() != 2 {
        return Err(Error::OutOfContract(format!(
            "the three characterizations coincide only for two pairs; got {}",
            g.pairs().len()
        )));
    }
    let minimal = is_minimal(g)?;
    let non_reroutable = !is_reroutable(g, systems, 0) && !is_reroutable(g, systems, 1);
    let no_consistent_cycle =
        find_consistent_cycle(g, systems, 0).is_none() && find_consistent_cycle(g, systems, 1).is_none();
    Ok(CharacterizationReport {
        minimal,
        non_reroutable,
        no_consistent_cycle,
        agree: minimal == non_reroutable && non_reroutable == no_consistent_cycle,
    })
}

/// A private edge of `systems[owner]` whose deletion keeps the network in
/// class, scanning in ascending id order.
pub fn deletable_private_edge(
    g: &Network,
    systems: &[PathSystem],
    owner: usize,
) -> Result<Option<EdgeId>> {
    let classes = crate::graph::classify_edges(g, systems)?;
    Ok(classes
        .iter()
        .filter(|&(_, &c)| c == EdgeClass::Private(owner))
        .map(|(&e, _)| e)
        .find(|&e| in_class(&g.without_edge(e))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{grid_graph, reroutable_witness, worked_example};

    /// The 2x2 grid with one extra edge between two interior vertices that
    /// were not adjacent.
    fn padded_grid() -> Network {
        let mut g = grid_graph(2, 2).unwrap().network;
        let inner: Vec<VertexId> = g.interior_vertices().collect();
        let (a, b) = inner
            .iter()
            .flat_map(|&a| inner.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| a < b && g.incident(a).all(|e| e.opposite(a) != Some(b)))
            .unwrap();
        g.connect(a, b).unwrap();
        g
    }

    #[test]
    fn grid_characterizations_agree_on_minimal() {
        let r = grid_graph(2, 3).unwrap();
        let report = characterization_agreement(&r.network, &r.systems).unwrap();
        assert!(report.minimal && report.non_reroutable && report.no_consistent_cycle);
    }

    #[test]
    fn extra_edge_is_removed_by_minimalize() {
        let g = padded_grid();
        assert!(!is_minimal(&g).unwrap());
        let m = minimalize(&g).unwrap();
        assert!(is_minimal(&m).unwrap());
        assert!(m.edge_count() < g.edge_count());
    }

    /// φ: S1 a c b R1 and ψ: S2 a b R2; φ could skip `c` by using `a-b`.
    fn detour() -> RoutedNetwork {
        let mut g = Network::new();
        let [s1, r1, s2, r2, a, b, c] = [(); 7].map(|_| g.add_vertex());
        g.add_pair(s1, r1, 1);
        g.add_pair(s2, r2, 1);
        for (x, y) in [(s1, a), (a, c), (c, b), (b, r1), (s2, a), (a, b), (b, r2)] {
            g.connect(x, y).unwrap();
        }
        let phi = PathSystem::new(&g, 0, vec![crate::graph::Path::through(&g, &[s1, a, c, b, r1]).unwrap()]).unwrap();
        let psi = PathSystem::new(&g, 1, vec![crate::graph::Path::through(&g, &[s2, a, b, r2]).unwrap()]).unwrap();
        RoutedNetwork::new(g, vec![phi, psi]).unwrap()
    }

    #[test]
    fn detour_fails_all_three_characterizations() {
        let r = detour();
        let report = characterization_agreement(&r.network, &r.systems).unwrap();
        assert!(!report.minimal && !report.non_reroutable && !report.no_consistent_cycle);
        assert!(report.agree);
        assert!(is_reroutable(&r.network, &r.systems, 0));
        assert!(is_reroutable(&r.network, &r.systems, 1));
        let c = find_consistent_cycle(&r.network, &r.systems, 0).unwrap();
        assert!(c.is_valid(&r.network, &r.systems));
        assert!(deletable_private_edge(&r.network, &r.systems, 0).unwrap().is_some());
    }

    /// Minimal and non-reroutable, yet the cycle 6 8 4 7 follows both
    /// systems' directions. It passes vertex 7 of the path 0 7 1 on two
    /// second-system edges, so it does not count.
    fn cycle_through_busy_vertex() -> RoutedNetwork {
        let mut g = Network::new();
        let v: Vec<VertexId> = (0..10).map(|_| g.add_vertex()).collect();
        g.add_pair(v[0], v[1], 3);
        g.add_pair(v[2], v[3], 2);
        for (a, b) in [(4, 7), (4, 8), (6, 7), (6, 8), (0, 6), (0, 7), (0, 9), (4, 1), (9, 1), (7, 1), (2, 4), (2, 8), (6, 3), (8, 3)] {
            g.connect(v[a], v[b]).unwrap();
        }
        g.remove_vertex(v[5]);
        let path = |g: &Network, seq: &[usize]| {
            crate::graph::Path::through(g, &seq.iter().map(|&k| v[k]).collect::<Vec<_>>()).unwrap()
        };
        let phi = PathSystem::new(&g, 0, vec![path(&g, &[0, 6, 8, 4, 1]), path(&g, &[0, 7, 1]), path(&g, &[0, 9, 1])]).unwrap();
        let psi = PathSystem::new(&g, 1, vec![path(&g, &[2, 4, 7, 6, 3]), path(&g, &[2, 8, 3])]).unwrap();
        RoutedNetwork::new(g, vec![phi, psi]).unwrap()
    }

    #[test]
    fn cycle_through_a_busy_vertex_does_not_count() {
        let r = cycle_through_busy_vertex();
        let report = characterization_agreement(&r.network, &r.systems).unwrap();
        assert!(report.minimal && report.non_reroutable && report.no_consistent_cycle, "{report:?}");
        let steps = [(3, true), (1, false), (0, true), (2, false)]
            .map(|(e, forward)| Step { edge: EdgeId(e), forward });
        let literal = ConsistentCycle { steps: steps.to_vec(), system_tag: 0 };
        assert!(!literal.is_valid(&r.network, &r.systems));
    }

    #[test]
    fn three_pair_agreement_is_out_of_contract() {
        let r = reroutable_witness();
        assert!(matches!(
            characterization_agreement(&r.network, &r.systems),
            Err(Error::OutOfContract(_))
        ));
        assert!(is_minimal(&r.network).unwrap());
        assert!(is_reroutable(&r.network, &r.systems, 2));
    }

    #[test]
    fn minimalize_is_a_fixed_point_on_minimal_input() {
        let r = worked_example();
        let m = minimalize(&r.network).unwrap();
        assert_eq!(m.edge_count(), r.network.edge_count());
        assert_eq!(deletable_private_edge(&r.network, &r.systems, 0).unwrap(), None);
    }

    #[test]
    fn seeded_minimalize_stays_in_class() {
        let g = padded_grid();
        for seed in 0..5 {
            let m = minimalize_with(&g, Some(seed)).unwrap();
            assert!(is_minimal(&m).unwrap());
        }
    }

    #[test]
    fn out_of_class_is_rejected() {
        let mut g = grid_graph(2, 2).unwrap().network;
        g.set_demand(0, 5);
        assert!(matches!(is_minimal(&g), Err(Error::NotInClass(_))));
    }
}
