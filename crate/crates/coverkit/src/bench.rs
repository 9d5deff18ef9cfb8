//! Balanced vertex cover benchmark harness: seeded 4-partition
//! generation, running one method variant on one instance under limits,
//! and CSV / text-table reporting.
//!
//! Node counts are branching decisions only; propagation steps are not
//! counted.

use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::cp::{minimize_search, SearchBudget, State};
use crate::graph::{parse_dimacs, parse_edge_list, Graph, ParseError};
use crate::propagator::{build_cover_model, MethodConfig, MethodVariant};

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("bad report line {line}: {reason}")]
    Report { line: usize, reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceFormat {
    Dimacs,
    EdgeList,
}

/// Balance tolerance, absolute or as a fraction of the vertex count.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BalanceSpec {
    Absolute(usize),
    Ratio(f64),
}

impl BalanceSpec {
    pub fn tolerance(&self, n: usize) -> usize {
        match *self {
            BalanceSpec::Absolute(b) => b,
            BalanceSpec::Ratio(r) => (r * n as f64).round() as usize,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub instance: PathBuf,
    pub format: InstanceFormat,
    pub method: MethodVariant,
    pub balance: BalanceSpec,
    pub seed: u64,
    pub time_limit: f64,
    pub lambda: u64,
    pub out: Option<PathBuf>,
}

/// One (instance, method) run, one CSV row.
#[derive(Clone, Debug, PartialEq)]
pub struct RunRecord {
    pub instance: String,
    pub method: String,
    pub solved: bool,
    pub best: usize,
    pub gap: usize,
    pub time_to_best_s: f64,
    pub nodes_to_best: u64,
    pub total_nodes: u64,
    pub total_time_s: f64,
}

pub const CSV_HEADER: &str =
    "instance,method,solved,best,gap,time_to_best_s,nodes_to_best,total_nodes,total_time_s";

pub fn method_token(v: MethodVariant) -> &'static str {
    match v {
        MethodVariant::Decomposition => "decomp",
        MethodVariant::CliqueCover => "cliquecover",
        MethodVariant::KernelPruning => "kernel",
        MethodVariant::KernelWitness => "kernelwitness",
        MethodVariant::Full => "full",
    }
}

pub fn parse_method(s: &str) -> Option<MethodVariant> {
    Some(match s {
        "decomp" => MethodVariant::Decomposition,
        "cliquecover" => MethodVariant::CliqueCover,
        "kernel" => MethodVariant::KernelPruning,
        "kernelwitness" => MethodVariant::KernelWitness,
        "full" => MethodVariant::Full,
        _ => return None,
    })
}

/// Shuffles `0..n` with a seeded PRNG and splits it into 4 consecutive
/// chunks whose sizes differ by at most one. Deterministic per seed.
pub fn generate_partition(n: usize, seed: u64) -> Vec<VertexSet> {
    assert!(n >= 4, "need at least 4 vertices for a 4-partition");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut parts = Vec::with_capacity(4);
    let mut at = 0;
    for i in 0..4 {
        let size = n / 4 + usize::from(i < n % 4);
        parts.push(VertexSet::from_members(n, order[at..at + size].iter().copied()));
        at += size;
    }
    parts
}

/// Limits for one run; either or both may be unset.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunLimits {
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
}

/// Runs one method on an in-memory instance. `gap` is left at 0; use
/// [`compute_gaps`] once the whole batch is available.
pub fn run_instance(
    graph: Arc<Graph>,
    label: &str,
    method: MethodVariant,
    lambda: u64,
    parts: &[VertexSet],
    tolerance: usize,
    limits: RunLimits,
) -> RunRecord {
    let n = graph.n();
    let cfg = match method {
        MethodVariant::KernelWitness | MethodVariant::Full => {
            MethodConfig::with_lambda(method, lambda)
        }
        _ => MethodConfig::new(method),
    };
    let mut model =
        build_cover_model(graph, cfg).with_balance(parts.to_vec(), tolerance);
    let budget = SearchBudget {
        deadline: limits.time_limit.map(|d| Instant::now() + d),
        node_limit: limits.node_limit,
    };
    let out = minimize_search(&mut model, State::root(n), budget);
    RunRecord {
        instance: label.to_string(),
        method: method_token(method).to_string(),
        solved: out.complete && out.best.is_some(),
        best: out.best.map(|b| b.card()).unwrap_or(n),
        gap: 0,
        time_to_best_s: out.time_to_best.as_secs_f64(),
        nodes_to_best: out.nodes_to_best,
        total_nodes: out.nodes,
        total_time_s: out.total_time.as_secs_f64(),
    }
}

pub fn load_instance(path: &PathBuf, format: InstanceFormat) -> Result<Graph, BenchError> {
    let reader = BufReader::new(File::open(path)?);
    let g = match format {
        InstanceFormat::Dimacs => parse_dimacs(reader)?.0,
        InstanceFormat::EdgeList => parse_edge_list(reader)?.0,
    };
    Ok(g)
}

/// Loads the instance and runs the configured method once.
pub fn run_benchmark(cfg: &BenchConfig) -> Result<RunRecord, BenchError> {
    let graph = Arc::new(load_instance(&cfg.instance, cfg.format)?);
    let parts = generate_partition(graph.n(), cfg.seed);
    let tolerance = cfg.balance.tolerance(graph.n());
    let label = cfg
        .instance
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| cfg.instance.display().to_string());
    Ok(run_instance(
        graph,
        &label,
        cfg.method,
        cfg.lambda,
        &parts,
        tolerance,
        RunLimits {
            time_limit: Some(Duration::from_secs_f64(cfg.time_limit)),
            node_limit: None,
        },
    ))
}

/// Sets each record's gap to its distance from the smallest cover found
/// on the same instance by any method in the batch.
pub fn compute_gaps(records: &mut [RunRecord]) {
    let mut i = 0;
    while i < records.len() {
        let instance = records[i].instance.clone();
        let best = records
            .iter()
            .filter(|r| r.instance == instance)
            .map(|r| r.best)
            .min()
            .unwrap();
        for r in records.iter_mut().filter(|r| r.instance == instance) {
            r.gap = r.best - best;
        }
        while i < records.len() && records[i].instance == instance {
            i += 1;
        }
    }
}

/// CSV plus an aligned text table over the same records.
#[derive(Clone, Debug)]
pub struct Report {
    pub csv: String,
    pub table: String,
}

pub fn emit_report(records: &[RunRecord]) -> Report {
    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for r in records {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.instance,
            r.method,
            r.solved,
            r.best,
            r.gap,
            r.time_to_best_s,
            r.nodes_to_best,
            r.total_nodes,
            r.total_time_s
        ));
    }

    let mut table = String::new();
    table.push_str("nodes are branching decisions only\n");
    table.push_str(&format!(
        "{:<24} {:<14} {:>6} {:>6} {:>5} {:>12} {:>13} {:>11} {:>12}\n",
        "instance",
        "method",
        "solved",
        "best",
        "gap",
        "time_to_best",
        "nodes_to_best",
        "total_nodes",
        "total_time"
    ));
    let mut last_instance = None;
    for r in records {
        let shown = if last_instance == Some(&r.instance) {
            ""
        } else {
            &r.instance
        };
        table.push_str(&format!(
            "{:<24} {:<14} {:>6} {:>6} {:>5} {:>12.3} {:>13} {:>11} {:>12.3}\n",
            shown,
            r.method,
            r.solved,
            r.best,
            r.gap,
            r.time_to_best_s,
            r.nodes_to_best,
            r.total_nodes,
            r.total_time_s
        ));
        last_instance = Some(&r.instance);
    }
    Report { csv, table }
}

/// Inverse of the CSV side of [`emit_report`].
pub fn parse_report_csv(text: &str) -> Result<Vec<RunRecord>, BenchError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == CSV_HEADER => {}
        other => {
            return Err(BenchError::Report {
                line: 1,
                reason: format!("expected header, got {:?}", other.map(|(_, h)| h)),
            })
        }
    }
    let mut records = Vec::new();
    for (i, line) in lines {
        if line.is_empty() {
            continue;
        }
        let err = |reason: &str| BenchError::Report {
            line: i + 1,
            reason: reason.to_string(),
        };
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 9 {
            return Err(err("expected 9 fields"));
        }
        records.push(RunRecord {
            instance: fields[0].to_string(),
            method: fields[1].to_string(),
            solved: fields[2].parse().map_err(|_| err("bad bool"))?,
            best: fields[3].parse().map_err(|_| err("bad int"))?,
            gap: fields[4].parse().map_err(|_| err("bad int"))?,
            time_to_best_s: fields[5].parse().map_err(|_| err("bad float"))?,
            nodes_to_best: fields[6].parse().map_err(|_| err("bad int"))?,
            total_nodes: fields[7].parse().map_err(|_| err("bad int"))?,
            total_time_s: fields[8].parse().map_err(|_| err("bad float"))?,
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_sizes_balanced() {
        for (n, expect) in [(8usize, vec![2, 2, 2, 2]), (10, vec![3, 3, 2, 2])] {
            let parts = generate_partition(n, 7);
            let sizes: Vec<usize> = parts.iter().map(|p| p.card()).collect();
            assert_eq!(sizes, expect);
            let mut all = VertexSet::empty(n);
            for p in &parts {
                assert!(all.is_disjoint_from(p));
                all.union_with(p);
            }
            assert_eq!(all.card(), n);
        }
    }

    #[test]
    fn partition_deterministic_per_seed() {
        assert_eq!(generate_partition(20, 5), generate_partition(20, 5));
        assert_ne!(generate_partition(20, 5), generate_partition(20, 6));
    }

    #[test]
    fn run_path_full_method() {
        let g = Arc::new(Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]));
        let parts = generate_partition(4, 1);
        let r = run_instance(
            g,
            "path4",
            MethodVariant::Full,
            5000,
            &parts,
            4,
            RunLimits::default(),
        );
        assert!(r.solved);
        assert_eq!(r.best, 2);
        assert!(r.nodes_to_best <= r.total_nodes);
    }

    #[test]
    fn zero_time_limit_is_unsolved() {
        let g = Arc::new(Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]));
        let parts = generate_partition(4, 1);
        let r = run_instance(
            g,
            "path4",
            MethodVariant::Decomposition,
            0,
            &parts,
            4,
            RunLimits {
                time_limit: Some(Duration::ZERO),
                node_limit: None,
            },
        );
        assert!(!r.solved);
        assert_eq!(r.best, 4); // the trivial incumbent V
    }

    #[test]
    fn report_round_trip() {
        let mut records = vec![
            RunRecord {
                instance: "a".into(),
                method: "full".into(),
                solved: true,
                best: 3,
                gap: 0,
                time_to_best_s: 0.125,
                nodes_to_best: 7,
                total_nodes: 11,
                total_time_s: 0.5,
            },
            RunRecord {
                instance: "a".into(),
                method: "decomp".into(),
                solved: true,
                best: 4,
                gap: 0,
                time_to_best_s: 0.25,
                nodes_to_best: 9,
                total_nodes: 30,
                total_time_s: 0.75,
            },
        ];
        compute_gaps(&mut records);
        assert_eq!(records[0].gap, 0);
        assert_eq!(records[1].gap, 1);
        let report = emit_report(&records);
        assert_eq!(parse_report_csv(&report.csv).unwrap(), records);
        assert!(report.table.contains("full"));
    }

    #[test]
    fn empty_report_is_header_only() {
        let report = emit_report(&[]);
        assert_eq!(report.csv.trim_end(), CSV_HEADER);
        assert!(parse_report_csv(&report.csv).unwrap().is_empty());
    }
}
