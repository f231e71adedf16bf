//! The acceptance suite: ten criteria, each a pass/fail result with a
//! pinned time limit. Used by `hubnet verify-all` and the `acceptance` test
//! target.

use std::cell::OnceCell;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde::Serialize;

use crate::cuts::in_class;
use crate::extremal::{finiteness_bound, grid_graph, ones_graph, witness_222};
use crate::graph::{hub_count, RoutedNetwork};
use crate::interconnect::{run_interconnect, verify_run};
use crate::minimality::{deletable_private_edge, is_minimal, is_reroutable, minimalize, route, characterization_agreement};
use crate::oracle::{check_bound, enumerate_path_systems, min_hub_subgraph};
use crate::random::{minimal_corpus, oracle_corpus, single_pair_corpus, two_pair_corpus};
use crate::representation::{decompose_private, structural_signature, to_representation, Representation};

pub const DEFAULT_SEED: u64 = 7;

/// Corpus sizes and time limits. The defaults are the acceptance values.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub corpus: usize,
    pub max_demand: u32,
    pub oracle_pairs: usize,
    pub oracle_triples: usize,
    pub single_pair: usize,
    pub oracle_max_edges: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            corpus: 500,
            max_demand: 3,
            oracle_pairs: 200,
            oracle_triples: 50,
            single_pair: 100,
            oracle_max_edges: 22,
        }
    }
}

impl SuiteConfig {
    pub fn with_seed(seed: u64) -> Self {
        SuiteConfig {
            seed,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub limit: Duration,
}

impl CriterionResult {
    /// The display line followed by the elapsed and allowed time.
    pub fn timed(&self) -> String {
        format!(
            "{self} ({:.2}s, limit {}s)",
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        )
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

/// Shared inputs, built on first use.
pub struct Suite {
    pub config: SuiteConfig,
    corpus: OnceCell<Vec<RoutedNetwork>>,
    minimal: OnceCell<Vec<RoutedNetwork>>,
    reps: OnceCell<Result<Vec<Representation>, String>>,
}

/// Outcome of one criterion body: failures found and a summary line.
struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new(failures: Vec<String>, summary: impl Into<String>) -> Self {
        Outcome {
            failures,
            summary: summary.into(),
        }
    }
}

fn first_failures(failures: &[String]) -> String {
    let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
    format!("{} failure(s): {}", failures.len(), shown.join("; "))
}

impl Suite {
    pub fn new(config: SuiteConfig) -> Self {
        Suite {
            config,
            corpus: OnceCell::new(),
            minimal: OnceCell::new(),
            reps: OnceCell::new(),
        }
    }

    fn corpus(&self) -> &[RoutedNetwork] {
        self.corpus
            .get_or_init(|| two_pair_corpus(self.config.seed, self.config.corpus, self.config.max_demand))
    }

    fn minimal(&self) -> &[RoutedNetwork] {
        self.minimal.get_or_init(|| minimal_corpus(self.corpus()))
    }

    fn representations(&self) -> Result<&[Representation], String> {
        self.reps
            .get_or_init(|| {
                self.minimal()
                    .iter()
                    .enumerate()
                    .map(|(k, r)| to_representation(r).map_err(|e| format!("instance {k}: {e}")))
                    .collect()
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    pub const IDS: [u32; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];

    pub fn run(&self, id: u32) -> CriterionResult {
        let (name, limit_secs, body): (&'static str, u64, fn(&Suite) -> Outcome) = match id {
            1 => ("two-pair grids are tight", 5, Suite::grids),
            2 => ("interconnecting paths bound the hubs", 60, Suite::interconnect),
            3 => ("minimality characterizations agree", 60, Suite::characterizations),
            4 => ("private edges decompose into alternating paths", 60, Suite::decomposition),
            5 => ("unit-pair extensions are tight", 60, Suite::ones),
            6 => ("three pairs of demand two need at most 12 hubs", 600, Suite::triples),
            7 => ("oracle agrees with fast predicates", 600, Suite::oracle_agreement),
            8 => ("single pairs need no hubs", 60, Suite::single_pair),
            9 => ("finiteness bound values", 5, Suite::finiteness),
            10 => ("representation keeps the hub relation", 60, Suite::hub_relation),
            _ => panic!("no criterion {id}"),
        };
        let start = Instant::now();
        let outcome = body(self);
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit_secs);
        let in_time = elapsed <= limit;
        let mut detail = if outcome.failures.is_empty() {
            outcome.summary
        } else {
            first_failures(&outcome.failures)
        };
        if !in_time {
            detail.push_str(&format!(" (over the {limit_secs}s limit)"));
        }
        CriterionResult {
            id,
            name,
            passed: outcome.failures.is_empty() && in_time,
            detail,
            elapsed,
            limit,
        }
    }

    pub fn run_all(&self) -> Vec<CriterionResult> {
        Self::IDS.iter().map(|&id| self.run(id)).collect()
    }

    fn grids(&self) -> Outcome {
        let mut failures = Vec::new();
        for c1 in 1..=5 {
            for c2 in 1..=5 {
                let g = match grid_graph(c1, c2) {
                    Ok(r) => r.network,
                    Err(e) => {
                        failures.push(format!("grid({c1},{c2}): {e}"));
                        continue;
                    }
                };
                let hubs = hub_count(&g).0;
                let ok = in_class(&g)
                    && is_minimal(&g).unwrap_or(false)
                    && hubs == 2 * (c1 * c2) as usize;
                if !ok {
                    failures.push(format!("grid({c1},{c2}) has {hubs} hubs"));
                }
            }
        }
        Outcome::new(failures, "25 grids in class, minimal, 2·C1·C2 hubs")
    }

    fn interconnect(&self) -> Outcome {
        let reps = match self.representations() {
            Ok(r) => r,
            Err(e) => return Outcome::new(vec![e], ""),
        };
        let mut failures = Vec::new();
        let mut tight = 0;
        for (k, rep) in reps.iter().enumerate() {
            let report = run_interconnect(rep)
                .map_err(|e| e.to_string())
                .and_then(|run| verify_run(rep, &run).map_err(|e| e.to_string()));
            match report {
                Ok(r) if r.passed() => tight += usize::from(r.hubs == r.bound),
                Ok(r) => {
                    let note = if is_minimal(&rep.graph).unwrap_or(true) {
                        ""
                    } else {
                        " (representation not minimal)"
                    };
                    failures.push(format!(
                        "instance {k}: {}, {} hubs, bound {}{note}",
                        r.failures().iter().map(|c| c.name).collect::<Vec<_>>().join(","),
                        r.hubs,
                        r.bound
                    ))
                }
                Err(e) => failures.push(format!("instance {k}: {e}")),
            }
        }
        Outcome::new(
            failures,
            format!("{} representations verified, {tight} tight", reps.len()),
        )
    }

    fn characterizations(&self) -> Outcome {
        let mut failures = Vec::new();
        let mut reroutable = 0;
        let mut non_minimal = 0;
        for (label, set) in [("corpus", self.corpus()), ("minimal", self.minimal())] {
            for (k, r) in set.iter().enumerate() {
                let report = match characterization_agreement(&r.network, &r.systems) {
                    Ok(x) => x,
                    Err(e) => {
                        failures.push(format!("{label} {k}: {e}"));
                        continue;
                    }
                };
                if !report.agree {
                    failures.push(format!("{label} {k}: {report:?}"));
                }
                non_minimal += usize::from(!report.minimal);
                for owner in 0..2 {
                    if is_reroutable(&r.network, &r.systems, owner) {
                        reroutable += 1;
                        match deletable_private_edge(&r.network, &r.systems, owner) {
                            Ok(Some(_)) => {}
                            _ => failures.push(format!("{label} {k}: pair {owner} reroutable, no deletable private edge")),
                        }
                    }
                }
            }
        }
        Outcome::new(
            failures,
            format!(
                "{} instances agree ({non_minimal} non-minimal, {reroutable} reroutable systems each with a deletable private edge)",
                self.corpus().len() + self.minimal().len()
            ),
        )
    }

    fn decomposition(&self) -> Outcome {
        let reps = match self.representations() {
            Ok(r) => r,
            Err(e) => return Outcome::new(vec![e], ""),
        };
        let mut failures = Vec::new();
        for (k, rep) in reps.iter().enumerate() {
            let violations = rep.violations();
            if !violations.is_empty() {
                failures.push(format!("instance {k}: {}", violations.join(", ")));
                continue;
            }
            let (c1, c2) = (rep.graph.pairs()[0].demand as usize, rep.graph.pairs()[1].demand as usize);
            match decompose_private(rep) {
                Ok(d) => {
                    let delta = d.delta;
                    if d.paths.len() != c1 + c2 || d.kind_counts() != [delta, delta, c1 - delta, c2 - delta] {
                        failures.push(format!("instance {k}: counts {:?}", d.kind_counts()));
                    }
                }
                Err(e) => failures.push(format!("instance {k}: {e}")),
            }
        }
        Outcome::new(failures, format!("{} decompositions have C1+C2 paths and the expected kinds", reps.len()))
    }

    fn ones(&self) -> Outcome {
        let mut failures = Vec::new();
        let mut cases = 0;
        for c1 in 1..=4 {
            for c2 in 1..=4 {
                for n in 0..=3 {
                    cases += 1;
                    let g = match ones_graph(c1, c2, n) {
                        Ok(r) => r,
                        Err(e) => {
                            failures.push(format!("ones({c1},{c2},{n}): {e}"));
                            continue;
                        }
                    };
                    let hubs = hub_count(&g.network).0;
                    let expected = 2 * (c1 * c2 + n) as usize;
                    if hubs != expected || !is_minimal(&g.network).unwrap_or(false) {
                        failures.push(format!("ones({c1},{c2},{n}): {hubs} hubs"));
                    }
                    if n == 0 {
                        let grid = grid_graph(c1, c2).expect("grid");
                        if structural_signature(&grid) != structural_signature(&g) {
                            failures.push(format!("ones({c1},{c2},0) differs from the grid"));
                        }
                    }
                }
            }
        }
        Outcome::new(failures, format!("{cases} graphs minimal with 2(C1·C2+n) hubs"))
    }

    fn triples(&self) -> Outcome {
        let mut failures = Vec::new();
        let w = witness_222().network;
        if !(in_class(&w) && is_minimal(&w).unwrap_or(false) && hub_count(&w).0 == 12) {
            failures.push("witness is not a minimal in-class graph with 12 hubs".into());
        }
        let corpus = oracle_corpus(self.config.seed, self.config.oracle_triples, &[2, 2, 2], self.config.oracle_max_edges + 2);
        let mut worst = 0;
        for (k, g) in corpus.iter().enumerate() {
            match check_bound(g, None) {
                Ok(b) if b.holds => worst = worst.max(b.min_hubs),
                Ok(b) => failures.push(format!("instance {k}: {} hubs", b.min_hubs)),
                Err(e) => failures.push(format!("instance {k}: {e}")),
            }
        }
        Outcome::new(
            failures,
            format!("witness verified; {} random graphs, largest minimum {worst} <= 12", corpus.len()),
        )
    }

    fn oracle_agreement(&self) -> Outcome {
        let mut failures = Vec::new();
        let corpus = oracle_corpus(self.config.seed, self.config.oracle_pairs, &[2, 2], self.config.oracle_max_edges);
        let mut worst = 0;
        let mut minimal = 0;
        let mut reroutable = 0;
        for (k, g) in corpus.iter().enumerate() {
            let report = match min_hub_subgraph(g, None) {
                Ok(r) => r,
                Err(e) => {
                    failures.push(format!("instance {k}: {e}"));
                    continue;
                }
            };
            worst = worst.max(report.min_hubs);
            if report.min_hubs > 8 {
                failures.push(format!("instance {k}: {} hubs", report.min_hubs));
            }
            let fast = is_minimal(g).unwrap_or(false);
            let slow = report.full_graph_minimal && report.num_minimal_subgraphs == 1;
            minimal += usize::from(fast);
            if fast != slow {
                failures.push(format!("instance {k}: is_minimal {fast}, enumeration {slow}"));
            }
            let Ok(routed) = route(g) else {
                failures.push(format!("instance {k}: cannot route"));
                continue;
            };
            for i in 0..2 {
                let fast = is_reroutable(g, &routed.systems, i);
                match enumerate_path_systems(g, i) {
                    Ok(all) => {
                        reroutable += usize::from(fast);
                        if fast != (all.len() > 1) {
                            failures.push(format!("instance {k} pair {i}: is_reroutable {fast}, {} systems", all.len()));
                        }
                    }
                    Err(e) => failures.push(format!("instance {k} pair {i}: {e}")),
                }
            }
        }
        Outcome::new(
            failures,
            format!(
                "{} graphs, largest minimum {worst} <= 8, {minimal} minimal, {reroutable} reroutable pairs, all agree",
                corpus.len()
            ),
        )
    }

    fn single_pair(&self) -> Outcome {
        let corpus = single_pair_corpus(self.config.seed, self.config.single_pair);
        let failures = corpus
            .iter()
            .enumerate()
            .filter_map(|(k, g)| match minimalize(g) {
                Ok(m) if hub_count(&m).0 == 0 => None,
                Ok(m) => Some(format!("instance {k}: {} hubs", hub_count(&m).0)),
                Err(e) => Some(format!("instance {k}: {e}")),
            })
            .collect();
        Outcome::new(failures, format!("{} minimalized graphs have 0 hubs", corpus.len()))
    }

    fn finiteness(&self) -> Outcome {
        let mut failures = Vec::new();
        for c in 1..=10u32 {
            if finiteness_bound(&[c]).ok() != Some(BigUint::from(0u32)) {
                failures.push(format!("[{c}]"));
            }
            for c2 in 1..=10u32 {
                if finiteness_bound(&[c, c2]).ok() != Some(BigUint::from(2 * c * c2)) {
                    failures.push(format!("[{c},{c2}]"));
                }
            }
        }
        let b = finiteness_bound(&[2, 2, 2]).ok();
        if !matches!(&b, Some(x) if *x >= BigUint::from(12u32)) {
            failures.push("[2,2,2] below 12".into());
        }
        let shown = b.map(|x| x.to_string()).unwrap_or_default();
        Outcome::new(failures, format!("one and two pairs exact for C <= 10; [2,2,2] gives {shown}"))
    }

    fn hub_relation(&self) -> Outcome {
        let reps = match self.representations() {
            Ok(r) => r,
            Err(e) => return Outcome::new(vec![e], ""),
        };
        let mut grew = 0;
        let failures = reps
            .iter()
            .enumerate()
            .filter_map(|(k, rep)| {
                let h = rep.stage_hubs;
                grew += usize::from(h.stretched > h.relay_free);
                (!h.relation_holds()).then(|| format!("instance {k}: {h:?}"))
            })
            .collect();
        Outcome::new(
            failures,
            format!("{} pipelines keep the relation ({grew} gained hubs at crossings)", reps.len()),
        )
    }
}
