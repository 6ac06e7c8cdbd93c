//! Conjecture sweeps over the enumerated corpus, with per-tier JSON
//! checkpoints so interrupted runs resume without repeating work.
//!
//! Conjecture 1: every connected block graph whose blocks all have order
//! at least 3 has nullity at most 1. Conjecture 2: bridging two connected
//! nonsingular block graphs by one edge never creates a singular graph.

use std::io;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use num::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{bridge, LoopWeightedGraph};
use crate::io::{parse_graph6, write_graph6};
use crate::lab::enumerate::{enumerate_block_graphs, extend_tier};
use crate::linalg::{adjacency_matrix, det_graph};
use crate::ratio;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TierSummary {
    pub n: usize,
    pub count: u64,
    pub max_nullity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub nullity: usize,
    pub det: String,
}

/// Outcome of a sweep. `complete` is true only when every graph in scope was
/// tested; a found counterexample does not make a run incomplete. The wall
/// time is kept out of the serialized report so identical runs produce
/// byte-identical JSON.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub conjecture: u8,
    pub n_max: usize,
    pub tiers: Vec<TierSummary>,
    pub counterexamples: Vec<Counterexample>,
    pub complete: bool,
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<Vec<String>>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ConjectureReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CheckpointTier {
    n: usize,
    count: u64,
    max_nullity: usize,
    counterexamples: Vec<Counterexample>,
    graphs_g6: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Checkpoint {
    conjecture: u8,
    n_max: usize,
    seed: Option<u64>,
    tiers: Vec<CheckpointTier>,
}

impl Checkpoint {
    fn load(path: &Path) -> io::Result<Option<Checkpoint>> {
        if !path.exists() {
            return Ok(None);
        }
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text)
            .map(Some)
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))
    }

    fn save(&self, path: &Path) -> io::Result<()> {
        let text = serde_json::to_string(self).expect("checkpoint serialization");
        std::fs::write(path, text)
    }
}

/// Whether a run finished or paused at a checkpoint boundary.
#[derive(Debug, Clone)]
pub enum RunOutcome {
    Complete(ConjectureReport),
    Paused { last_tier: usize },
}

#[derive(Debug, Clone, Default)]
pub struct Conjecture1Options {
    pub n_max: usize,
    /// Checkpoint file; absent tiers are computed and appended.
    pub checkpoint: Option<PathBuf>,
    /// Stop (leaving the checkpoint behind) once this tier is done.
    pub stop_after_tier: Option<usize>,
}

/// Sweeps all connected block graphs with every block of order >= 3, up to
/// `n_max` vertices, recording nullities; nullity >= 2 is a counterexample.
pub fn test_conjecture_1(n_max: usize) -> ConjectureReport {
    match run_conjecture_1(&Conjecture1Options { n_max, ..Default::default() })
        .expect("no checkpoint file configured")
    {
        RunOutcome::Complete(report) => report,
        RunOutcome::Paused { .. } => unreachable!("no stop tier configured"),
    }
}

pub fn run_conjecture_1(opts: &Conjecture1Options) -> io::Result<RunOutcome> {
    let start = Instant::now();
    let mut checkpoint = match &opts.checkpoint {
        Some(path) => Checkpoint::load(path)?.filter(|c| c.conjecture == 1),
        None => None,
    }
    .unwrap_or(Checkpoint { conjecture: 1, n_max: opts.n_max, seed: None, tiers: Vec::new() });
    checkpoint.n_max = opts.n_max;

    let mut substrate: Vec<(usize, Vec<LoopWeightedGraph>)> = Vec::new();
    for tier in &checkpoint.tiers {
        let graphs = tier
            .graphs_g6
            .iter()
            .map(|s| parse_graph6(s).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e)))
            .collect::<io::Result<Vec<_>>>()?;
        substrate.push((tier.n, graphs));
    }

    let first_missing = checkpoint.tiers.len() + 1;
    for n in first_missing..=opts.n_max {
        let graphs = extend_tier(&substrate, n, true);
        // The single-vertex seed is generation substrate, not a tested graph.
        let tested = if n >= 3 { graphs.as_slice() } else { &[] };
        let nullities: Vec<usize> = tested
            .par_iter()
            .map(|g| g.n() - adjacency_matrix(g).rank_exact())
            .collect();
        let counterexamples: Vec<Counterexample> = tested
            .iter()
            .zip(&nullities)
            .filter(|&(_, &nu)| nu >= 2)
            .map(|(g, &nu)| Counterexample {
                graph6: write_graph6(g).expect("loopless"),
                nullity: nu,
                det: "0/1".to_string(),
            })
            .collect();
        let record = CheckpointTier {
            n,
            count: tested.len() as u64,
            max_nullity: nullities.iter().copied().max().unwrap_or(0),
            counterexamples,
            graphs_g6: graphs.iter().map(|g| write_graph6(g).expect("loopless")).collect(),
        };
        substrate.push((n, graphs));
        checkpoint.tiers.push(record);
        if let Some(path) = &opts.checkpoint {
            checkpoint.save(path)?;
        }
        if opts.stop_after_tier == Some(n) && n < opts.n_max {
            return Ok(RunOutcome::Paused { last_tier: n });
        }
    }

    // A checkpoint may hold more tiers than this run asked for; report only
    // the requested range.
    let in_range = |t: &&CheckpointTier| t.n >= 3 && t.n <= opts.n_max;
    let tiers: Vec<TierSummary> = checkpoint
        .tiers
        .iter()
        .filter(in_range)
        .map(|t| TierSummary { n: t.n, count: t.count, max_nullity: t.max_nullity })
        .collect();
    let counterexamples: Vec<Counterexample> = checkpoint
        .tiers
        .iter()
        .filter(in_range)
        .flat_map(|t| t.counterexamples.clone())
        .collect();
    Ok(RunOutcome::Complete(ConjectureReport {
        conjecture: 1,
        n_max: opts.n_max,
        tiers,
        counterexamples,
        complete: true,
        seed: None,
        notes: None,
        elapsed: start.elapsed(),
    }))
}

#[derive(Debug, Clone)]
pub struct Conjecture2Options {
    pub max_part_vertices: usize,
    /// Exhaustive over all part pairs and junction pairs; otherwise a seeded
    /// random sample of the same space.
    pub exhaustive: bool,
    pub samples: u64,
    pub seed: u64,
    pub checkpoint: Option<PathBuf>,
    /// Stop after this many work units (exhaustive mode: one unit per first
    /// part index).
    pub stop_after_unit: Option<usize>,
}

impl Default for Conjecture2Options {
    fn default() -> Self {
        Conjecture2Options {
            max_part_vertices: 4,
            exhaustive: true,
            samples: 0,
            seed: 0,
            checkpoint: None,
            stop_after_unit: None,
        }
    }
}

pub fn test_conjecture_2(max_part_vertices: usize, exhaustive: bool, samples: u64, seed: u64) -> ConjectureReport {
    let opts = Conjecture2Options {
        max_part_vertices,
        exhaustive,
        samples,
        seed,
        ..Default::default()
    };
    match run_conjecture_2(&opts).expect("no checkpoint file configured") {
        RunOutcome::Complete(report) => report,
        RunOutcome::Paused { .. } => unreachable!("no stop unit configured"),
    }
}

fn bridged_result(g1: &LoopWeightedGraph, v1: usize, g2: &LoopWeightedGraph, v2: usize) -> (usize, usize, Option<Counterexample>) {
    let joined = bridge(g1, v1, g2, v2).expect("junctions validated");
    let det = det_graph(&joined);
    let n = joined.n();
    if det.is_zero() {
        let nullity = n - adjacency_matrix(&joined).rank_exact();
        let ce = Counterexample {
            graph6: write_graph6(&joined).expect("loopless"),
            nullity,
            det: ratio::format_pq(&det),
        };
        (n, nullity, Some(ce))
    } else {
        (n, 0, None)
    }
}

pub fn run_conjecture_2(opts: &Conjecture2Options) -> io::Result<RunOutcome> {
    let start = Instant::now();
    // Candidate parts: connected block graphs up to the bound, kept when
    // nonsingular. The singleton graph is in the candidate corpus by
    // deliberate reading but never survives the nonsingularity filter.
    let parts: Vec<LoopWeightedGraph> = enumerate_block_graphs(opts.max_part_vertices, false)
        .filter(|g| !det_graph(g).is_zero())
        .collect();

    let seed = if opts.exhaustive { None } else { Some(opts.seed) };
    let mut checkpoint = match &opts.checkpoint {
        Some(path) => Checkpoint::load(path)?.filter(|c| {
            c.conjecture == 2 && c.n_max == opts.max_part_vertices && c.seed == seed
        }),
        None => None,
    }
    .unwrap_or(Checkpoint {
        conjecture: 2,
        n_max: opts.max_part_vertices,
        seed,
        tiers: Vec::new(),
    });

    // Work units: per first-part index when exhaustive, a single unit of
    // `samples` random draws otherwise. Each finished unit is checkpointed as
    // a pseudo-tier keyed by the unit index.
    let total_units = if opts.exhaustive { parts.len() } else { 1 };
    let first_missing = checkpoint.tiers.len();
    for unit in first_missing..total_units {
        let outcomes: Vec<(usize, usize, Option<Counterexample>)> = if opts.exhaustive {
            let g1 = &parts[unit];
            let mut jobs = Vec::new();
            for (j, g2) in parts.iter().enumerate().skip(unit) {
                for v1 in 0..g1.n() {
                    for v2 in 0..g2.n() {
                        if j == unit && v2 < v1 {
                            continue;
                        }
                        jobs.push((v1, j, v2));
                    }
                }
            }
            jobs.par_iter()
                .map(|&(v1, j, v2)| bridged_result(g1, v1, &parts[j], v2))
                .collect()
        } else {
            use rand_chacha::rand_core::{RngCore, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(opts.seed);
            let mut jobs = Vec::new();
            for _ in 0..opts.samples {
                let i = (rng.next_u64() % parts.len() as u64) as usize;
                let j = (rng.next_u64() % parts.len() as u64) as usize;
                let v1 = (rng.next_u64() % parts[i].n() as u64) as usize;
                let v2 = (rng.next_u64() % parts[j].n() as u64) as usize;
                jobs.push((i, v1, j, v2));
            }
            jobs.par_iter()
                .map(|&(i, v1, j, v2)| bridged_result(&parts[i], v1, &parts[j], v2))
                .collect()
        };

        // Aggregate this unit by bridged-graph order.
        let mut by_n: std::collections::BTreeMap<usize, (u64, usize)> = Default::default();
        let mut counterexamples = Vec::new();
        for (n, nullity, ce) in outcomes {
            let entry = by_n.entry(n).or_insert((0, 0));
            entry.0 += 1;
            entry.1 = entry.1.max(nullity);
            if let Some(ce) = ce {
                counterexamples.push(ce);
            }
        }
        // One pseudo-tier per (unit, n); merged across units when the
        // report is assembled.
        for (n, (count, max_nullity)) in by_n {
            checkpoint.tiers.push(CheckpointTier {
                n,
                count,
                max_nullity,
                counterexamples: counterexamples
                    .iter()
                    .filter(|ce| parse_graph6(&ce.graph6).map(|g| g.n()) == Ok(n))
                    .cloned()
                    .collect(),
                graphs_g6: Vec::new(),
            });
        }
        if let Some(path) = &opts.checkpoint {
            checkpoint.save(path)?;
        }
        if opts.stop_after_unit == Some(unit + 1) && unit + 1 < total_units {
            return Ok(RunOutcome::Paused { last_tier: unit + 1 });
        }
    }

    let mut tiers: std::collections::BTreeMap<usize, TierSummary> = Default::default();
    let mut counterexamples = Vec::new();
    for record in &checkpoint.tiers {
        let entry = tiers
            .entry(record.n)
            .or_insert(TierSummary { n: record.n, count: 0, max_nullity: 0 });
        entry.count += record.count;
        entry.max_nullity = entry.max_nullity.max(record.max_nullity);
        counterexamples.extend(record.counterexamples.clone());
    }
    counterexamples.sort_by(|a, b| a.graph6.len().cmp(&b.graph6.len()).then(a.graph6.cmp(&b.graph6)));
    counterexamples.dedup();
    Ok(RunOutcome::Complete(ConjectureReport {
        conjecture: 2,
        n_max: opts.max_part_vertices,
        tiers: tiers.into_values().collect(),
        counterexamples,
        complete: opts.exhaustive,
        seed,
        notes: Some(vec![
            "part corpus includes the singleton graph; it is filtered out by the nonsingularity requirement".to_string(),
        ]),
        elapsed: start.elapsed(),
    }))
}
