//! Integral max flow on the vertex-split network of one source/sink pair.
//!
//! Every vertex other than the pair's own terminals becomes `in -> out` with
//! capacity 1. Each interior edge becomes two opposite arcs, each directed
//! edge one arc. Adjacency is built in ascending edge id order and augmenting
//! paths are found by BFS, so results are deterministic.

use std::collections::{BTreeMap, VecDeque};

use crate::graph::{Network, Path, Step, VertexId};

const UNBOUNDED: u32 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ArcKind {
    Split(VertexId),
    Edge(Step),
    Residual,
}

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u32,
    kind: ArcKind,
}

/// How edge arcs are capacitated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum EdgeCapacity {
    /// Edge arcs are uncapacitated except direct source-to-sink edges, which
    /// carry one unit each. Minimum cuts then consist of vertices and direct
    /// edges only.
    Unbounded,
    /// Every arc carries one unit. Flows are in bijection with sets of edge
    /// traversals, which makes residual cycles meaningful.
    Unit,
}

pub(crate) struct SplitNetwork {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    index: BTreeMap<VertexId, usize>,
    vertices: Vec<VertexId>,
    source: usize,
    sink: usize,
    direct_edges: usize,
}

impl SplitNetwork {
    pub(crate) fn build(g: &Network, pair: usize, caps: EdgeCapacity) -> SplitNetwork {
        let p = g.pairs()[pair];
        let vertices: Vec<VertexId> = g.vertices().collect();
        let index: BTreeMap<VertexId, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut net = SplitNetwork {
            arcs: Vec::new(),
            adj: vec![Vec::new(); 2 * vertices.len()],
            source: 2 * index[&p.source] + 1,
            sink: 2 * index[&p.sink],
            index,
            vertices,
            direct_edges: 0,
        };
        for i in 0..net.vertices.len() {
            let v = net.vertices[i];
            if v != p.source && v != p.sink {
                net.add_arc(2 * i, 2 * i + 1, 1, ArcKind::Split(v));
            }
        }
        for e in g.edges() {
            let direct = (e.u == p.source && e.v == p.sink) || (e.v == p.source && e.u == p.sink);
            let cap = match caps {
                EdgeCapacity::Unit => 1,
                EdgeCapacity::Unbounded if direct => 1,
                EdgeCapacity::Unbounded => UNBOUNDED,
            };
            if direct {
                net.direct_edges += 1;
            }
            let (iu, iv) = (net.index[&e.u], net.index[&e.v]);
            net.add_arc(
                2 * iu + 1,
                2 * iv,
                cap,
                ArcKind::Edge(Step {
                    edge: e.id,
                    forward: true,
                }),
            );
            if !e.directed {
                net.add_arc(
                    2 * iv + 1,
                    2 * iu,
                    cap,
                    ArcKind::Edge(Step {
                        edge: e.id,
                        forward: false,
                    }),
                );
            }
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32, kind: ArcKind) {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap, kind });
        self.arcs.push(Arc {
            to: from,
            cap: 0,
            kind: ArcKind::Residual,
        });
        self.adj[from].push(id);
        self.adj[to].push(id + 1);
    }

    /// Flow currently on forward arc `a` (even index).
    fn flow(&self, a: usize) -> u32 {
        self.arcs[a ^ 1].cap
    }

    fn push(&mut self, a: usize, amount: u32) {
        self.arcs[a].cap -= amount;
        self.arcs[a ^ 1].cap += amount;
    }

    /// Augments until `limit` units flow or no augmenting path remains.
    pub(crate) fn max_flow(&mut self, limit: Option<u32>) -> u32 {
        let mut total = 0;
        let n = self.adj.len();
        while limit.is_none_or(|l| total < l) {
            let mut pred: Vec<Option<usize>> = vec![None; n];
            let mut seen = vec![false; n];
            seen[self.source] = true;
            let mut queue = VecDeque::from([self.source]);
            while let Some(x) = queue.pop_front() {
                if x == self.sink {
                    break;
                }
                for &a in &self.adj[x] {
                    let arc = &self.arcs[a];
                    if arc.cap > 0 && !seen[arc.to] {
                        seen[arc.to] = true;
                        pred[arc.to] = Some(a);
                        queue.push_back(arc.to);
                    }
                }
            }
            if !seen[self.sink] {
                break;
            }
            // every augmenting path crosses a unit arc, so push one unit
            let mut x = self.sink;
            while let Some(a) = pred[x] {
                self.push(a, 1);
                x = self.arcs[a ^ 1].to;
            }
            total += 1;
        }
        total
    }

    /// Vertices whose split arc crosses the residual cut after a max flow,
    /// and the number of direct source-to-sink edges.
    pub(crate) fn min_cut(&self) -> (Vec<VertexId>, usize) {
        let reach = self.reachable(self.source, None);
        let mut sep: Vec<VertexId> = self
            .vertices
            .iter()
            .enumerate()
            .filter(|&(i, _)| reach[2 * i] && !reach[2 * i + 1])
            .map(|(_, &v)| v)
            .collect();
        sep.sort();
        (sep, self.direct_edges)
    }

    fn reachable(&self, from: usize, skip_arc: Option<usize>) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[from] = true;
        let mut stack = vec![from];
        while let Some(x) = stack.pop() {
            for &a in &self.adj[x] {
                if Some(a) == skip_arc {
                    continue;
                }
                let arc = &self.arcs[a];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    stack.push(arc.to);
                }
            }
        }
        seen
    }

    /// Splits the current flow into source-to-sink paths, following the
    /// lowest edge id at the source. Flow circulations that never touch
    /// the source are ignored.
    pub(crate) fn decompose(&self, g: &Network) -> Vec<Path> {
        let mut paths = Vec::new();
        let mut used = vec![false; self.arcs.len()];
        for &a0 in &self.adj[self.source] {
            if a0 % 2 == 1 || self.flow(a0) == 0 {
                continue;
            }
            let mut steps = Vec::new();
            let mut a = a0;
            loop {
                used[a] = true;
                if let ArcKind::Edge(step) = self.arcs[a].kind {
                    steps.push(step);
                }
                let x = self.arcs[a].to;
                if x == self.sink {
                    break;
                }
                let next = self.adj[x]
                    .iter()
                    .copied()
                    .find(|&b| b % 2 == 0 && !used[b] && self.flow(b) > 0)
                    .expect("flow conservation");
                a = next;
            }
            paths.push(Path::from_steps(g, steps).expect("flow paths are simple"));
        }
        paths
    }

    /// Loads a flow from explicit source-to-sink paths on a unit network.
    pub(crate) fn load_paths(&mut self, paths: &[Path]) {
        let mut by_step: BTreeMap<Step, usize> = BTreeMap::new();
        let mut by_split: BTreeMap<VertexId, usize> = BTreeMap::new();
        for a in (0..self.arcs.len()).step_by(2) {
            match self.arcs[a].kind {
                ArcKind::Edge(s) => {
                    by_step.insert(s, a);
                }
                ArcKind::Split(v) => {
                    by_split.insert(v, a);
                }
                ArcKind::Residual => {}
            }
        }
        for p in paths {
            for s in p.steps() {
                self.push(by_step[s], 1);
            }
            for v in p.inner_vertices() {
                self.push(by_split[v], 1);
            }
        }
    }

    /// True if some residual cycle passes through the reverse of a loaded
    /// flow arc, i.e. a different integral flow of the same value exists.
    pub(crate) fn has_alternative_flow(&self) -> bool {
        (0..self.arcs.len()).step_by(2).any(|a| {
            if self.flow(a) == 0 {
                return false;
            }
            let tail = self.arcs[a ^ 1].to;
            let head = self.arcs[a].to;
            // cycle: tail ~> head in the residual graph, then head -> tail
            self.reachable(tail, Some(a))[head]
        })
    }
}

pub(crate) fn max_flow(g: &Network, pair: usize, limit: Option<u32>) -> u32 {
    SplitNetwork::build(g, pair, EdgeCapacity::Unbounded).max_flow(limit)
}
