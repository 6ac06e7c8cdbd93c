//! Batch CLI over the block-graph analysis library: analyze single graphs,
//! generate family members, enumerate the small-graph corpus, run the
//! conjecture sweeps, and dump reduction certificates.
//!
//! Exit codes: 0 success / verified, 1 counterexample found, 2 usage or
//! parse error.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use blockgraph::families::{generate, FamilySpec};
use blockgraph::graph::LoopWeightedGraph;
use blockgraph::io::{parse_edge_list_json, parse_graph6, write_edge_list_json, write_graph6};
use blockgraph::lab::{
    enumerate_tiers, run_conjecture_1, run_conjecture_2, Conjecture1Options, Conjecture2Options,
    ConjectureReport, RunOutcome,
};
use blockgraph::report::{analyze, reduce_report};

#[derive(Parser)]
#[command(name = "blockgraph", version, about = "Exact singularity analysis of block graphs")]
struct Cli {
    /// Worker threads for corpus sweeps (default: all cores).
    #[arg(long, global = true, env = "BLOCKSPEC_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    EdgelistJson,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Graph6,
    EdgelistJson,
}

#[derive(Args)]
struct InputArgs {
    /// Input path, or `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value = "auto")]
    format: InputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph and decide singularity with every applicable engine.
    Analyze(InputArgs),
    /// Build a family member from a JSON spec.
    Generate {
        /// Spec path, or `-` for stdin.
        #[arg(default_value = "-")]
        spec: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: OutputFormat,
    },
    /// Enumerate connected block graphs up to an order, one graph6 line each.
    Enumerate {
        n_max: usize,
        /// Restrict to graphs whose blocks all have order >= 3.
        #[arg(long)]
        k2_forbidden: bool,
        /// Write the lines to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a conjecture sweep and emit its JSON report.
    Conjecture {
        /// 1: nullity of K2-forbidden block graphs; 2: bridged nonsingular parts.
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        id: u8,
        /// Largest vertex count for conjecture 1.
        #[arg(long, default_value_t = 11)]
        n_max: usize,
        /// Largest part order for conjecture 2.
        #[arg(long, default_value_t = 4)]
        parts: usize,
        /// Random sample count for conjecture 2 (omit for the exhaustive sweep).
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Checkpoint file to resume from (created when absent).
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Also write the report here, plus a `.counterexamples.g6` sidecar.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the structural reduction certificate for a graph.
    Reduce(InputArgs),
}

fn read_source(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn parse_graph(text: &str, format: InputFormat) -> Result<LoopWeightedGraph, String> {
    let trimmed = text.trim();
    let format = match format {
        InputFormat::Auto => {
            if trimmed.starts_with('{') {
                InputFormat::EdgelistJson
            } else {
                InputFormat::Graph6
            }
        }
        other => other,
    };
    match format {
        InputFormat::Graph6 => parse_graph6(trimmed).map_err(|e| e.to_string()),
        InputFormat::EdgelistJson => parse_edge_list_json(trimmed).map_err(|e| e.to_string()),
        InputFormat::Auto => unreachable!(),
    }
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| format!("configuring {jobs} worker threads: {e}"))?;
    }

    match cli.command {
        Command::Analyze(input) => {
            let text = read_source(&input.input)?;
            let g = parse_graph(&text, input.format)?;
            let report = analyze(&g, &input.input);
            println!("{}", report.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce(input) => {
            let text = read_source(&input.input)?;
            let g = parse_graph(&text, input.format)?;
            let report = reduce_report(&g, &input.input);
            println!("{}", report.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate { spec, format } => {
            let text = read_source(&spec)?;
            let spec: FamilySpec =
                serde_json::from_str(&text).map_err(|e| format!("parsing spec: {e}"))?;
            let g = generate(&spec).map_err(|e| e.to_string())?;
            match format {
                OutputFormat::Graph6 => {
                    println!("{}", write_graph6(&g).map_err(|e| e.to_string())?)
                }
                OutputFormat::EdgelistJson => println!("{}", write_edge_list_json(&g)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n_max, k2_forbidden, out } => {
            let mut lines = String::new();
            for tier in enumerate_tiers(n_max, k2_forbidden) {
                for g in &tier.graphs {
                    lines.push_str(&write_graph6(g).expect("enumerated graphs are loopless"));
                    lines.push('\n');
                }
            }
            match out {
                Some(path) => std::fs::write(&path, lines)
                    .map_err(|e| format!("writing {}: {e}", path.display()))?,
                None => print!("{lines}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Conjecture { id, n_max, parts, samples, seed, resume, out } => {
            let outcome = match id {
                1 => run_conjecture_1(&Conjecture1Options {
                    n_max,
                    checkpoint: resume,
                    stop_after_tier: None,
                })
                .map_err(|e| format!("conjecture 1 run: {e}"))?,
                2 => run_conjecture_2(&Conjecture2Options {
                    max_part_vertices: parts,
                    exhaustive: samples.is_none(),
                    samples: samples.unwrap_or(0),
                    seed,
                    checkpoint: resume,
                    stop_after_unit: None,
                })
                .map_err(|e| format!("conjecture 2 run: {e}"))?,
                _ => unreachable!("clap range-checked"),
            };
            let report: ConjectureReport = match outcome {
                RunOutcome::Complete(report) => report,
                RunOutcome::Paused { .. } => unreachable!("no stop configured"),
            };
            let json = report.to_json();
            println!("{json}");
            if let Some(path) = out {
                std::fs::write(&path, &json)
                    .map_err(|e| format!("writing {}: {e}", path.display()))?;
                let sidecar = path.with_extension("counterexamples.g6");
                let lines: String = report
                    .counterexamples
                    .iter()
                    .map(|ce| format!("{}\n", ce.graph6))
                    .collect();
                std::fs::write(&sidecar, lines)
                    .map_err(|e| format!("writing {}: {e}", sidecar.display()))?;
            }
            eprintln!(
                "conjecture {id}: {} tested tiers, {} counterexamples, {:.2?}",
                report.tiers.len(),
                report.counterexamples.len(),
                report.elapsed
            );
            if report.counterexamples.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
