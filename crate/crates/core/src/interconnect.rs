//! The interconnecting-path search on a representation.
//!
//! Each iteration starts a path at an unoccupied lower vertex, extends it
//! forward along the natural orientation until it is blocked at the choke
//! vertex of a path joining the two sinks, then extends the path ending at
//! the start vertex backward until it is blocked at the choke vertex of a
//! path joining the two sources. When an extension reaches a choke vertex
//! that still has unoccupied vertices on its left, the paths crossing the
//! gap are switched so that every path keeps using distinct alternating
//! paths. The state machine below follows the published pseudocode step by
//! step; variable names match it.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeClass, EdgeId, VertexId};
use crate::representation::{decompose_private, Decomposition, PathKind, Representation, RepresentationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterconnectError {
    #[error("algorithm-stuck at {step}: {detail}")]
    AlgorithmStuck { step: &'static str, detail: String },
    #[error(transparent)]
    Representation(#[from] RepresentationError),
}

impl InterconnectError {
    pub fn name(&self) -> &'static str {
        match self {
            InterconnectError::AlgorithmStuck { .. } => "algorithm-stuck",
            InterconnectError::Representation(e) => e.name(),
        }
    }
}

fn stuck(step: &'static str, detail: impl Into<String>) -> InterconnectError {
    InterconnectError::AlgorithmStuck {
        step,
        detail: detail.into(),
    }
}

/// A directed path in the naturally oriented representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IPath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl IPath {
    fn edge(e: EdgeId, tail: VertexId, head: VertexId) -> Self {
        IPath {
            vertices: vec![tail, head],
            edges: vec![e],
        }
    }

    pub fn tail(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn head(&self) -> VertexId {
        *self.vertices.last().expect("non-empty")
    }

    fn position(&self, x: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&y| y == x)
    }

    /// `P[t(P), x]`.
    fn prefix_to(&self, x: VertexId) -> Option<IPath> {
        let k = self.position(x)?;
        Some(IPath {
            vertices: self.vertices[..=k].to_vec(),
            edges: self.edges[..k].to_vec(),
        })
    }

    /// `P[y, h(P)]`.
    fn suffix_from(&self, y: VertexId) -> Option<IPath> {
        let k = self.position(y)?;
        Some(IPath {
            vertices: self.vertices[k..].to_vec(),
            edges: self.edges[k..].to_vec(),
        })
    }

    fn append(&mut self, e: EdgeId, head: VertexId) {
        self.edges.push(e);
        self.vertices.push(head);
    }

    fn prepend(&mut self, e: EdgeId, tail: VertexId) {
        self.edges.insert(0, e);
        self.vertices.insert(0, tail);
    }

    /// `a ∘ e ∘ b` where `e` runs from `h(a)` to `t(b)`.
    fn join(a: IPath, e: EdgeId, b: IPath) -> IPath {
        let mut out = a;
        out.edges.push(e);
        out.edges.extend(b.edges);
        out.vertices.extend(b.vertices);
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    Forward,
    Backward,
}

/// One event per executed step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum TraceEvent {
    Init {
        delta: usize,
        chokes: Vec<(usize, VertexId)>,
    },
    Start {
        iteration: usize,
        v: VertexId,
        f: EdgeId,
        u: VertexId,
    },
    PrependPrivate {
        e: EdgeId,
        head: VertexId,
    },
    PrependPublic {
        f: EdgeId,
        u: VertexId,
    },
    ChokeBlocked {
        phase: Phase,
        path: usize,
        choke: VertexId,
    },
    /// A choke vertex moved left. `d` is the number of paths in the set that
    /// were rebuilt; `disjoint` records whether the set together with the
    /// current path was pairwise vertex-disjoint afterwards.
    Switch {
        phase: Phase,
        path: usize,
        old_choke: VertexId,
        new_choke: VertexId,
        old_position: usize,
        new_position: usize,
        d: usize,
        disjoint: bool,
    },
    BackwardStart {
        v: VertexId,
    },
    AppendPrivate {
        e: EdgeId,
        tail: VertexId,
    },
    AppendPublic {
        f: EdgeId,
        w: VertexId,
    },
    IterationEnd {
        iteration: usize,
        stop_path: usize,
    },
    Terminate {
        paths: usize,
    },
}

/// What each iteration stopped at.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IterationRecord {
    pub iteration: usize,
    pub start: VertexId,
    /// The sink-to-sink alternating path where the forward extension stopped.
    pub stop_path: usize,
    pub stop_hubs: usize,
    /// Whether every hub of `stop_path` was occupied when the iteration ended.
    pub stop_occupied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InterconnectRun {
    pub delta: usize,
    pub occupied: BTreeSet<VertexId>,
    /// Current choke vertex per alternating path (by decomposition index).
    pub chokes: Vec<Option<VertexId>>,
    pub paths: Vec<IPath>,
    pub iterations: Vec<IterationRecord>,
    pub trace: Vec<TraceEvent>,
    pub steps: usize,
}

struct Index {
    orient: BTreeMap<EdgeId, (VertexId, VertexId)>,
    public_out: BTreeMap<VertexId, EdgeId>,
    public_in: BTreeMap<VertexId, EdgeId>,
    /// (vertex, owning system) -> private edge at that vertex
    private: BTreeMap<(VertexId, usize), EdgeId>,
    path_of: BTreeMap<VertexId, usize>,
}

impl Index {
    fn new(rep: &Representation, dec: &Decomposition) -> Result<Index, InterconnectError> {
        let classes = crate::graph::classify_edges(&rep.graph, &rep.systems)
            .map_err(|e| RepresentationError::InvalidInput(e.to_string()))?;
        let mut idx = Index {
            orient: BTreeMap::new(),
            public_out: BTreeMap::new(),
            public_in: BTreeMap::new(),
            private: BTreeMap::new(),
            path_of: BTreeMap::new(),
        };
        for (&e, &class) in &classes {
            let (t, h) = rep
                .oriented(e)
                .ok_or_else(|| RepresentationError::InvalidInput(format!("edge {e} is unused")))?;
            idx.orient.insert(e, (t, h));
            match class {
                EdgeClass::Public => {
                    idx.public_out.insert(t, e);
                    idx.public_in.insert(h, e);
                }
                EdgeClass::Private(o) => {
                    for x in [t, h] {
                        if !rep.graph.is_terminal(x) {
                            idx.private.insert((x, o), e);
                        }
                    }
                }
                EdgeClass::Unused => {}
            }
        }
        for (k, p) in dec.paths.iter().enumerate() {
            for &v in p.hubs() {
                idx.path_of.insert(v, k);
            }
        }
        Ok(idx)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Step2,
    Step3A,
    Step3B,
    Step4,
    Step5A,
    Step5B,
    Step6,
}

/// Runs the search with the lowest-id choice of start vertex.
pub fn run_interconnect(rep: &Representation) -> Result<InterconnectRun, InterconnectError> {
    run_interconnect_seeded(rep, None)
}

/// Runs the search; a seed makes the start vertex of each iteration a
/// random unoccupied lower vertex instead of the lowest-id one.
pub fn run_interconnect_seeded(
    rep: &Representation,
    seed: Option<u64>,
) -> Result<InterconnectRun, InterconnectError> {
    let dec = decompose_private(rep)?;
    run_on(rep, &dec, seed)
}

fn pairwise_disjoint<'a>(paths: impl Iterator<Item = &'a IPath>) -> bool {
    let mut seen = BTreeSet::new();
    for p in paths {
        for &v in &p.vertices {
            if !seen.insert(v) {
                return false;
            }
        }
    }
    true
}

pub fn run_on(
    rep: &Representation,
    dec: &Decomposition,
    seed: Option<u64>,
) -> Result<InterconnectRun, InterconnectError> {
    let idx = Index::new(rep, dec)?;
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let delta = dec.delta;
    let alt = &dec.paths;

    // STEP 1
    let mut run = InterconnectRun {
        delta,
        occupied: BTreeSet::new(),
        chokes: alt.iter().map(|p| p.choke).collect(),
        paths: Vec::new(),
        iterations: Vec::new(),
        trace: Vec::new(),
        steps: 0,
    };
    run.trace.push(TraceEvent::Init {
        delta,
        chokes: run
            .chokes
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.map(|c| (k, c)))
            .collect(),
    });
    if delta == 0 {
        run.trace.push(TraceEvent::Terminate { paths: 0 });
        return Ok(run);
    }
    let budget = 10 * rep.graph.edge_count() * delta;
    let lower: Vec<VertexId> = {
        let mut l: Vec<VertexId> = alt.iter().flat_map(|p| p.lower.iter().copied()).collect();
        l.sort();
        l
    };

    let mut n = 1;
    let mut v = VertexId(0);
    let mut u = VertexId(0);
    let mut w = VertexId(0);
    // h(e) in the forward phase, t(e) in the backward phase
    let mut e_end = VertexId(0);
    let mut p = IPath {
        vertices: Vec::new(),
        edges: Vec::new(),
    };
    let mut stop_path = None;
    let mut state = State::Step2;

    loop {
        run.steps += 1;
        if run.steps > budget {
            return Err(stuck("budget", format!("exceeded {budget} steps")));
        }
        match state {
            State::Step2 => {
                let free: Vec<VertexId> =
                    lower.iter().copied().filter(|x| !run.occupied.contains(x)).collect();
                v = match rng.as_mut() {
                    Some(r) => *free.choose(r).ok_or_else(|| stuck("STEP 2", "no unoccupied lower vertex"))?,
                    None => *free.first().ok_or_else(|| stuck("STEP 2", "no unoccupied lower vertex"))?,
                };
                run.occupied.insert(v);
                let f = *idx
                    .public_out
                    .get(&v)
                    .ok_or_else(|| stuck("STEP 2", format!("no public edge leaves {v}")))?;
                u = idx.orient[&f].1;
                run.occupied.insert(u);
                p = IPath::edge(f, v, u);
                stop_path = None;
                run.trace.push(TraceEvent::Start { iteration: n, v, f, u });
                state = State::Step3A;
            }
            State::Step3A => {
                let l = *idx
                    .path_of
                    .get(&u)
                    .ok_or_else(|| stuck("STEP 3(A)", format!("{u} is on no alternating path")))?;
                let path = &alt[l];
                if path.kind == PathKind::R2R1 && run.chokes[l] == Some(u) {
                    let pu = path.position(u).expect("on path");
                    let x0 = path
                        .upper
                        .iter()
                        .copied()
                        .filter(|x| !run.occupied.contains(x))
                        .max_by_key(|&x| path.position(x));
                    let Some(x0) = x0 else {
                        run.trace.push(TraceEvent::ChokeBlocked {
                            phase: Phase::Forward,
                            path: l,
                            choke: u,
                        });
                        stop_path = Some(l);
                        state = State::Step4;
                        continue;
                    };
                    let p0 = path.position(x0).expect("on path");
                    if p0 >= pu {
                        return Err(stuck("STEP 3(A)", format!("unoccupied upper {x0} right of choke {u}")));
                    }
                    // x0 y0 x1 y1 ... xd yd u
                    let sub = &path.vertices[p0..=pu];
                    let d = (sub.len() - 1) / 2 - 1;
                    let edge_at = |k: usize| path.edges[p0 + k];
                    let xs = |i: usize| sub[2 * i];
                    let ys = |i: usize| sub[2 * i + 1];
                    let y0 = ys(0);
                    if d == 0 {
                        run.chokes[l] = Some(x0);
                        run.occupied.insert(y0);
                        let e = edge_at(1);
                        p.append(e, y0);
                    } else {
                        let mut old = Vec::with_capacity(d);
                        for i in 1..=d {
                            let target = edge_at(2 * i);
                            let k = run
                                .paths
                                .iter()
                                .position(|q| q.edges.contains(&target))
                                .ok_or_else(|| stuck("STEP 3(A)", format!("no path uses edge {target}")))?;
                            old.push(run.paths.remove(k));
                        }
                        run.chokes[l] = Some(x0);
                        run.occupied.insert(y0);
                        let e = edge_at(1);
                        let hat = p.clone();
                        let cut = |q: &IPath, x: VertexId, tail: bool| {
                            if tail { q.prefix_to(x) } else { q.suffix_from(x) }
                                .ok_or_else(|| stuck("STEP 3(A)", format!("path misses {x}")))
                        };
                        p = cut(&old[0], xs(1), true)?;
                        p.append(e, y0);
                        let mut rebuilt = Vec::with_capacity(d);
                        for i in 1..d {
                            rebuilt.push(IPath::join(
                                cut(&old[i], xs(i + 1), true)?,
                                edge_at(2 * i + 1),
                                cut(&old[i - 1], ys(i), false)?,
                            ));
                        }
                        rebuilt.push(IPath::join(
                            cut(&hat, u, true)?,
                            edge_at(2 * d + 1),
                            cut(&old[d - 1], ys(d), false)?,
                        ));
                        run.paths.extend(rebuilt);
                    }
                    let disjoint = pairwise_disjoint(run.paths.iter().chain([&p]));
                    run.trace.push(TraceEvent::Switch {
                        phase: Phase::Forward,
                        path: l,
                        old_choke: u,
                        new_choke: x0,
                        old_position: pu,
                        new_position: p0,
                        d,
                        disjoint,
                    });
                    e_end = y0;
                } else {
                    let owner = match path.kind {
                        PathKind::S1S2 | PathKind::S1R1 => 1,
                        PathKind::R2S2 | PathKind::R2R1 => 0,
                    };
                    let e = *idx
                        .private
                        .get(&(u, owner))
                        .ok_or_else(|| stuck("STEP 3(A)", format!("no private edge at {u}")))?;
                    let (t, h) = idx.orient[&e];
                    if t != u {
                        return Err(stuck("STEP 3(A)", format!("{u} is not the tail of {e}")));
                    }
                    run.occupied.insert(h);
                    p.append(e, h);
                    run.trace.push(TraceEvent::PrependPrivate { e, head: h });
                    e_end = h;
                }
                state = State::Step3B;
            }
            State::Step3B => {
                let f = *idx
                    .public_out
                    .get(&e_end)
                    .ok_or_else(|| stuck("STEP 3(B)", format!("no public edge leaves {e_end}")))?;
                u = idx.orient[&f].1;
                run.occupied.insert(u);
                p.append(f, u);
                run.trace.push(TraceEvent::PrependPublic { f, u });
                state = State::Step3A;
            }
            State::Step4 => {
                run.paths.push(std::mem::replace(
                    &mut p,
                    IPath {
                        vertices: Vec::new(),
                        edges: Vec::new(),
                    },
                ));
                let k = run
                    .paths
                    .iter()
                    .position(|q| q.tail() == v)
                    .ok_or_else(|| stuck("STEP 4", format!("no path starts at {v}")))?;
                p = run.paths.remove(k);
                w = v;
                run.trace.push(TraceEvent::BackwardStart { v });
                state = State::Step5A;
            }
            State::Step5A => {
                let l = *idx
                    .path_of
                    .get(&w)
                    .ok_or_else(|| stuck("STEP 5(A)", format!("{w} is on no alternating path")))?;
                let path = &alt[l];
                if path.kind == PathKind::S1S2 && run.chokes[l] == Some(w) {
                    let pw = path.position(w).expect("on path");
                    let y0 = path
                        .lower
                        .iter()
                        .copied()
                        .filter(|y| !run.occupied.contains(y))
                        .max_by_key(|&y| path.position(y));
                    let Some(y0) = y0 else {
                        run.trace.push(TraceEvent::ChokeBlocked {
                            phase: Phase::Backward,
                            path: l,
                            choke: w,
                        });
                        state = State::Step6;
                        continue;
                    };
                    let p0 = path.position(y0).expect("on path");
                    if p0 >= pw {
                        return Err(stuck("STEP 5(A)", format!("unoccupied lower {y0} right of choke {w}")));
                    }
                    // y0 x0 y1 x1 ... yd xd w
                    let sub = &path.vertices[p0..=pw];
                    let d = (sub.len() - 1) / 2 - 1;
                    let edge_at = |k: usize| path.edges[p0 + k];
                    let ys = |i: usize| sub[2 * i];
                    let xs = |i: usize| sub[2 * i + 1];
                    let x0 = xs(0);
                    if d == 0 {
                        run.chokes[l] = Some(y0);
                        run.occupied.insert(x0);
                        let e = edge_at(1);
                        p.prepend(e, x0);
                    } else {
                        let mut old = Vec::with_capacity(d);
                        for i in 1..=d {
                            let target = edge_at(2 * i);
                            let k = run
                                .paths
                                .iter()
                                .position(|q| q.edges.contains(&target))
                                .ok_or_else(|| stuck("STEP 5(A)", format!("no path uses edge {target}")))?;
                            old.push(run.paths.remove(k));
                        }
                        run.chokes[l] = Some(y0);
                        run.occupied.insert(x0);
                        let e = edge_at(1);
                        let hat = p.clone();
                        let cut = |q: &IPath, x: VertexId, tail: bool| {
                            if tail { q.prefix_to(x) } else { q.suffix_from(x) }
                                .ok_or_else(|| stuck("STEP 5(A)", format!("path misses {x}")))
                        };
                        p = cut(&old[0], ys(1), false)?;
                        p.prepend(e, x0);
                        let mut rebuilt = Vec::with_capacity(d);
                        for i in 1..d {
                            rebuilt.push(IPath::join(
                                cut(&old[i - 1], xs(i), true)?,
                                edge_at(2 * i + 1),
                                cut(&old[i], ys(i + 1), false)?,
                            ));
                        }
                        rebuilt.push(IPath::join(
                            cut(&old[d - 1], xs(d), true)?,
                            edge_at(2 * d + 1),
                            cut(&hat, w, false)?,
                        ));
                        run.paths.extend(rebuilt);
                    }
                    let disjoint = pairwise_disjoint(run.paths.iter().chain([&p]));
                    run.trace.push(TraceEvent::Switch {
                        phase: Phase::Backward,
                        path: l,
                        old_choke: w,
                        new_choke: y0,
                        old_position: pw,
                        new_position: p0,
                        d,
                        disjoint,
                    });
                    e_end = x0;
                } else {
                    let owner = match path.kind {
                        PathKind::R2S2 | PathKind::R2R1 => 0,
                        PathKind::S1S2 | PathKind::S1R1 => 1,
                    };
                    let e = *idx
                        .private
                        .get(&(w, owner))
                        .ok_or_else(|| stuck("STEP 5(A)", format!("no private edge at {w}")))?;
                    let (t, h) = idx.orient[&e];
                    if h != w {
                        return Err(stuck("STEP 5(A)", format!("{w} is not the head of {e}")));
                    }
                    run.occupied.insert(t);
                    p.prepend(e, t);
                    run.trace.push(TraceEvent::AppendPrivate { e, tail: t });
                    e_end = t;
                }
                state = State::Step5B;
            }
            State::Step5B => {
                let f = *idx
                    .public_in
                    .get(&e_end)
                    .ok_or_else(|| stuck("STEP 5(B)", format!("no public edge enters {e_end}")))?;
                w = idx.orient[&f].0;
                run.occupied.insert(w);
                p.prepend(f, w);
                run.trace.push(TraceEvent::AppendPublic { f, w });
                state = State::Step5A;
            }
            State::Step6 => {
                let l = stop_path.ok_or_else(|| stuck("STEP 6", "forward phase did not stop at a choke"))?;
                let hubs = alt[l].hubs();
                run.iterations.push(IterationRecord {
                    iteration: n,
                    start: v,
                    stop_path: l,
                    stop_hubs: hubs.len(),
                    stop_occupied: hubs.iter().all(|h| run.occupied.contains(h)),
                });
                run.trace.push(TraceEvent::IterationEnd {
                    iteration: n,
                    stop_path: l,
                });
                // the path of the last iteration is kept as well, so the set
                // ends with one path per iteration
                run.paths.push(std::mem::replace(
                    &mut p,
                    IPath {
                        vertices: Vec::new(),
                        edges: Vec::new(),
                    },
                ));
                if n == delta {
                    run.trace.push(TraceEvent::Terminate {
                        paths: run.paths.len(),
                    });
                    return Ok(run);
                }
                n += 1;
                state = State::Step2;
            }
        }
    }
}

/// One named postcondition of a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub delta: usize,
    pub hubs: usize,
    pub bound: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Checks the postconditions of a run:
///
/// * `distinct-alternating-paths`: the private edges of each path lie on
///   pairwise different alternating paths;
/// * `path-count`: one path per source-to-source alternating path, at most
///   the smaller demand;
/// * `endpoints`: each path is a directed path from a lower vertex of a
///   source-to-source alternating path to an upper vertex of a sink-to-sink
///   one, all distinct;
/// * `hub-coverage`: every hub lies on exactly one path;
/// * `hub-bound`: `hubs <= 2Δ(C1+C2-Δ) <= 2·C1·C2`;
/// * `iteration-bound`: the alternating path where iteration `t` stopped
///   has at most `2t-1` hubs, all occupied by the end of the iteration;
/// * `switch-disjoint`: after each switch the paths were vertex-disjoint;
/// * `choke-leftward`: choke vertices only move toward the anchor.
pub fn verify_run(rep: &Representation, run: &InterconnectRun) -> Result<VerifyReport, InterconnectError> {
    let dec = decompose_private(rep)?;
    let idx = Index::new(rep, &dec)?;
    let delta = dec.delta;
    let (c1, c2) = (rep.graph.pairs()[0].demand as usize, rep.graph.pairs()[1].demand as usize);
    let hubs = rep.graph.hubs();
    let bound = 2 * delta * (c1 + c2 - delta);
    let mut checks = Vec::new();
    let mut check = |name, passed, detail: String| checks.push(Check { name, passed, detail });

    let mut bad = Vec::new();
    for (k, p) in run.paths.iter().enumerate() {
        let mut seen = BTreeSet::new();
        for &e in &p.edges {
            if let Some(l) = dec.path_of_edge(e) {
                if !seen.insert(l) {
                    bad.push(format!("path {k} uses alternating path {l} twice"));
                }
            }
        }
    }
    check("distinct-alternating-paths", bad.is_empty(), bad.join("; "));

    check(
        "path-count",
        run.paths.len() == delta && delta <= c1.min(c2),
        format!("{} paths, delta {delta}", run.paths.len()),
    );

    let mut bad = Vec::new();
    let mut starts = BTreeSet::new();
    let mut ends = BTreeSet::new();
    for (k, p) in run.paths.iter().enumerate() {
        let directed = p.edges.iter().enumerate().all(|(i, e)| {
            idx.orient.get(e) == Some(&(p.vertices[i], p.vertices[i + 1]))
        });
        if !directed {
            bad.push(format!("path {k} is not a directed path"));
        }
        let s = dec.path_of_vertex(p.tail());
        let t = dec.path_of_vertex(p.head());
        let start_ok = s.is_some_and(|l| {
            dec.paths[l].kind == PathKind::S1S2 && dec.paths[l].lower.contains(&p.tail())
        });
        let end_ok = t.is_some_and(|l| {
            dec.paths[l].kind == PathKind::R2R1 && dec.paths[l].upper.contains(&p.head())
        });
        if !start_ok || !end_ok {
            bad.push(format!("path {k} has wrong endpoints"));
        }
        if !starts.insert(s) || !ends.insert(t) {
            bad.push(format!("path {k} shares an end alternating path"));
        }
    }
    check("endpoints", bad.is_empty(), bad.join("; "));

    let mut count: BTreeMap<VertexId, usize> = BTreeMap::new();
    for p in &run.paths {
        for &v in &p.vertices {
            *count.entry(v).or_default() += 1;
        }
    }
    let uncovered: Vec<String> = hubs
        .iter()
        .filter(|h| count.get(h).copied().unwrap_or(0) != 1)
        .map(|h| h.to_string())
        .collect();
    check(
        "hub-coverage",
        uncovered.is_empty(),
        if uncovered.is_empty() {
            String::new()
        } else {
            format!("hubs not on exactly one path: {}", uncovered.join(", "))
        },
    );

    check(
        "hub-bound",
        hubs.len() <= bound && bound <= 2 * c1 * c2,
        format!("{} hubs, 2Δ(C1+C2-Δ) = {bound}, 2·C1·C2 = {}", hubs.len(), 2 * c1 * c2),
    );

    let bad: Vec<String> = run
        .iterations
        .iter()
        .filter(|r| r.stop_hubs > 2 * r.iteration - 1 || !r.stop_occupied)
        .map(|r| format!("iteration {}: {} hubs, occupied {}", r.iteration, r.stop_hubs, r.stop_occupied))
        .collect();
    check(
        "iteration-bound",
        bad.is_empty() && run.iterations.len() == delta,
        bad.join("; "),
    );

    let mut switches = 0;
    let mut split = 0;
    let mut rightward = 0;
    for ev in &run.trace {
        if let TraceEvent::Switch {
            disjoint,
            old_position,
            new_position,
            ..
        } = ev
        {
            switches += 1;
            split += usize::from(!disjoint);
            rightward += usize::from(new_position >= old_position);
        }
    }
    check(
        "switch-disjoint",
        split == 0,
        format!("{split} of {switches} switches left overlapping paths"),
    );
    check(
        "choke-leftward",
        rightward == 0,
        format!("{rightward} of {switches} choke moves were not leftward"),
    );

    Ok(VerifyReport {
        delta,
        hubs: hubs.len(),
        bound,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{grid_graph, worked_example};
    use crate::representation::to_representation;

    #[test]
    fn grid_runs_cover_every_hub() {
        for c1 in 1..=4 {
            for c2 in 1..=4 {
                let rep = to_representation(&grid_graph(c1, c2).unwrap()).unwrap();
                let run = run_interconnect(&rep).unwrap();
                let report = verify_run(&rep, &run).unwrap();
                assert!(report.passed(), "grid {c1}x{c2}: {:?}", report.failures());
                assert_eq!(run.paths.len(), c1.min(c2) as usize);
                assert_eq!(report.hubs, report.bound);
            }
        }
    }

    #[test]
    fn grid_2_2_occupies_all_eight_hubs() {
        let rep = to_representation(&grid_graph(2, 2).unwrap()).unwrap();
        let run = run_interconnect(&rep).unwrap();
        assert_eq!(run.paths.len(), 2);
        assert_eq!(run.occupied.len(), 8);
    }

    #[test]
    fn worked_example_needs_two_paths() {
        let rep = to_representation(&worked_example()).unwrap();
        let run = run_interconnect(&rep).unwrap();
        let report = verify_run(&rep, &run).unwrap();
        assert!(report.passed(), "{:?}", report.failures());
        assert_eq!(run.delta, 2);
        assert_eq!(run.occupied.len(), 8);
    }

    #[test]
    fn seeded_choices_keep_postconditions() {
        let rep = to_representation(&grid_graph(3, 4).unwrap()).unwrap();
        for seed in 0..10 {
            let run = run_interconnect_seeded(&rep, Some(seed)).unwrap();
            assert!(verify_run(&rep, &run).unwrap().passed());
        }
    }

    #[test]
    fn trace_serializes_as_tagged_json() {
        let rep = to_representation(&grid_graph(1, 1).unwrap()).unwrap();
        let run = run_interconnect(&rep).unwrap();
        let line = serde_json::to_string(&run.trace[0]).unwrap();
        assert!(line.starts_with("{\"step\":\"init\""), "{line}");
    }
}
