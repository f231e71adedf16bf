use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hubnet::cuts::in_class;
use hubnet::extremal::{grid_graph, ones_graph, reroutable_witness, witness_222, worked_example};
use hubnet::interconnect::{run_interconnect_seeded, verify_run};
use hubnet::io::{parse_document, serialize_network, serialize_routed, Document};
use hubnet::minimality::{is_minimal, is_reroutable, minimalize_routed, route, characterization_agreement};
use hubnet::oracle::{min_hub_subgraph, theoretical_value};
use hubnet::random::random_in_class;
use hubnet::representation::{decompose_private, to_representation};
use hubnet::suite::{Suite, SuiteConfig, DEFAULT_SEED};
use hubnet::{hub_count, Error, RoutedNetwork};

#[derive(Parser)]
#[command(name = "hubnet", version, about = "Minimum hub counts in multi-pair flow networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Grid,
    Ones,
    Witness222,
    Reroutable,
    Example,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated network with its path systems.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 2)]
        c1: u32,
        #[arg(long, default_value_t = 2)]
        c2: u32,
        #[arg(long, default_value_t = 0)]
        n: u32,
        /// Demands for `--family random`, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [2, 2])]
        demands: Vec<u32>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Report the minimality characterizations of a network.
    Check {
        #[arg(long)]
        input: PathBuf,
    },
    /// Delete edges until the network is minimal.
    Minimalize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Shuffle the deletion order instead of ascending edge ids.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Transform a minimal two-pair network into its degree-3 representation.
    Represent {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the interconnecting-path search on the representation.
    Interconnect {
        #[arg(long)]
        input: PathBuf,
        /// Pick start vertices at random instead of lowest id.
        #[arg(long)]
        seed: Option<u64>,
        /// Write the event log as JSON lines (to stdout when no file is given).
        #[arg(long, num_args = 0..=1, default_missing_value = "-")]
        trace: Option<PathBuf>,
    },
    /// Exhaustive minimum-hub search on a small network.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        /// Override the limit on non-mandatory edges.
        #[arg(long)]
        max_edges: Option<usize>,
        /// Write the minimum-hub subgraph here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the acceptance suite and print one line per criterion.
    VerifyAll {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Also write the results as JSON.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Exit status 1: a check failed. Exit status 2: input could not be read.
enum Failure {
    Check(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Io(_) => Failure::Input(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// The document's systems, or freshly routed ones when it has none.
fn read_routed(path: &Path) -> Result<RoutedNetwork, Failure> {
    let doc = read(path)?;
    match doc.systems {
        Some(_) => Ok(doc.routed().expect("systems present")),
        None => Ok(route(&doc.network)?),
    }
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json values serialize"));
}

fn generate(family: Family, c1: u32, c2: u32, n: u32, demands: &[u32], seed: u64, output: Option<&Path>) -> Outcome {
    let routed = match family {
        Family::Grid => grid_graph(c1, c2)?,
        Family::Ones => ones_graph(c1, c2, n)?,
        Family::Witness222 => witness_222(),
        Family::Reroutable => reroutable_witness(),
        Family::Example => worked_example(),
        Family::Random => {
            if demands.is_empty() || demands.contains(&0) {
                return Err(Failure::Input("--demands needs positive values".into()));
            }
            route(&random_in_class(seed, demands))?
        }
    };
    let text = serialize_routed(&routed);
    match output {
        Some(p) => {
            write(p, &text)?;
            println!(
                "wrote {}: {} vertices, {} edges, {} hubs",
                p.display(),
                routed.network.vertex_count(),
                routed.network.edge_count(),
                hub_count(&routed.network).0
            );
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn check(input: &Path) -> Outcome {
    let r = read_routed(input)?;
    let g = &r.network;
    if !in_class(g) {
        return Err(Failure::Check("not-in-class: some pair's vertex cut differs from its demand".into()));
    }
    if g.pairs().len() == 2 {
        let report = characterization_agreement(g, &r.systems)?;
        print_json(&json!({ "pairs": 2, "hubs": hub_count(g).0, "report": report }));
        return if report.agree {
            Ok(())
        } else {
            Err(Failure::Check("the minimality characterizations disagree".into()))
        };
    }
    let minimal = is_minimal(g)?;
    let reroutable: Vec<bool> = (0..g.pairs().len()).map(|i| is_reroutable(g, &r.systems, i)).collect();
    print_json(&json!({
        "pairs": g.pairs().len(),
        "hubs": hub_count(g).0,
        "minimal": minimal,
        "reroutable": reroutable,
    }));
    if minimal && reroutable.iter().any(|&x| x) {
        println!(
            "note: minimal yet reroutable; with {} pairs minimality and non-reroutability are not equivalent",
            g.pairs().len()
        );
    }
    Ok(())
}

fn minimalize(input: &Path, output: Option<&Path>, seed: Option<u64>) -> Outcome {
    let doc = read(input)?;
    let before = hub_count(&doc.network).0;
    let m = minimalize_routed(&doc.network, seed)?;
    let text = serialize_routed(&m);
    match output {
        Some(p) => {
            write(p, &text)?;
            println!(
                "edges {} -> {}, hubs {before} -> {}",
                doc.network.edge_count(),
                m.network.edge_count(),
                hub_count(&m.network).0
            );
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn represent(input: &Path, output: Option<&Path>) -> Outcome {
    let r = read_routed(input)?;
    let rep = to_representation(&r).map_err(Error::from)?;
    let dec = decompose_private(&rep).map_err(Error::from)?;
    let report = json!({
        "hubs": rep.stage_hubs,
        "naturally_oriented": rep.naturally_oriented,
        "delta": dec.delta,
        "kind_counts": { "S1S2": dec.kind_counts()[0], "R2R1": dec.kind_counts()[1],
                         "S1R1": dec.kind_counts()[2], "R2S2": dec.kind_counts()[3] },
        "paths": dec.paths,
    });
    let text = serialize_routed(&rep.routed());
    match output {
        Some(p) => {
            write(p, &text)?;
            print_json(&report);
        }
        None => {
            let doc: serde_json::Value = serde_json::from_str(&text).expect("own output parses");
            print_json(&json!({ "representation": doc, "report": report }));
        }
    }
    let violations = rep.violations();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(violations.join("; ")))
    }
}

fn interconnect(input: &Path, seed: Option<u64>, trace: Option<&Path>) -> Outcome {
    let r = read_routed(input)?;
    let rep = to_representation(&r).map_err(Error::from)?;
    let run = run_interconnect_seeded(&rep, seed).map_err(Error::from)?;
    let verify = verify_run(&rep, &run).map_err(Error::from)?;
    if let Some(p) = trace {
        let lines: String = run
            .trace
            .iter()
            .map(|e| serde_json::to_string(e).expect("events serialize") + "\n")
            .collect();
        if p == Path::new("-") {
            let mut out = std::io::stdout().lock();
            out.write_all(lines.as_bytes())
                .map_err(|e| Failure::Input(e.to_string()))?;
        } else {
            write(p, &lines)?;
        }
    }
    let paths: Vec<_> = run.paths.iter().map(|p| &p.vertices).collect();
    print_json(&json!({
        "delta": run.delta,
        "paths": paths,
        "occupied": run.occupied.len(),
        "hubs": verify.hubs,
        "bound": verify.bound,
        "iterations": run.iterations,
        "checks": verify.checks,
    }));
    let failed: Vec<&str> = verify.failures().iter().map(|c| c.name).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failed checks: {}", failed.join(", "))))
    }
}

fn oracle(input: &Path, max_edges: Option<usize>, output: Option<&Path>) -> Outcome {
    let g = read(input)?.network;
    let report = min_hub_subgraph(&g, max_edges).map_err(Error::from)?;
    let bound = theoretical_value(&g.demands()).map_err(Error::from)?;
    let holds = report.min_hubs as u128 <= bound;
    print_json(&json!({ "report": report, "bound": bound.to_string(), "holds": holds }));
    if let Some(p) = output {
        write(p, &serialize_network(&report.min_hub_subgraph))?;
    }
    if holds {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} hubs exceed the bound {bound}", report.min_hubs)))
    }
}

fn verify_all(seed: u64, output: Option<&Path>) -> Outcome {
    let suite = Suite::new(SuiteConfig::with_seed(seed));
    let results = suite.run_all();
    for r in &results {
        println!("{r}");
    }
    if let Some(p) = output {
        let text = serde_json::to_string_pretty(&results).expect("results serialize") + "\n";
        write(p, &text)?;
    }
    let failed: Vec<String> = results.iter().filter(|r| !r.passed).map(|r| r.id.to_string()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failed criteria: {}", failed.join(", "))))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Generate {
            family,
            c1,
            c2,
            n,
            demands,
            seed,
            output,
        } => generate(family, c1, c2, n, &demands, seed, output.as_deref()),
        Command::Check { input } => check(&input),
        Command::Minimalize { input, output, seed } => minimalize(&input, output.as_deref(), seed),
        Command::Represent { input, output } => represent(&input, output.as_deref()),
        Command::Interconnect { input, seed, trace } => interconnect(&input, seed, trace.as_deref()),
        Command::Oracle {
            input,
            max_edges,
            output,
        } => oracle(&input, max_edges, output.as_deref()),
        Command::VerifyAll { seed, output } => verify_all(seed, output.as_deref()),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
