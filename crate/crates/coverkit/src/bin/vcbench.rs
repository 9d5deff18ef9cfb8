//! Balanced vertex cover benchmark runner.
//!
//! Loads one instance, runs one method variant under a time limit, and
//! prints a result table (optionally appending the CSV row to a file).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use coverkit::bench::{
    compute_gaps, emit_report, run_benchmark, BalanceSpec, BenchConfig, InstanceFormat,
};
use coverkit::propagator::{MethodVariant, DEFAULT_LAMBDA};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Dimacs,
    Edgelist,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Decomp,
    Cliquecover,
    Kernel,
    Kernelwitness,
    Full,
}

impl From<MethodArg> for MethodVariant {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Decomp => MethodVariant::Decomposition,
            MethodArg::Cliquecover => MethodVariant::CliqueCover,
            MethodArg::Kernel => MethodVariant::KernelPruning,
            MethodArg::Kernelwitness => MethodVariant::KernelWitness,
            MethodArg::Full => MethodVariant::Full,
        }
    }
}

/// Minimize a balanced vertex cover on one instance.
#[derive(Parser, Debug)]
#[command(name = "vcbench")]
struct Args {
    /// Instance file.
    #[arg(long)]
    instance: PathBuf,

    /// Instance file format.
    #[arg(long, value_enum, default_value = "dimacs")]
    format: FormatArg,

    /// Propagation method.
    #[arg(long, value_enum, default_value = "full")]
    method: MethodArg,

    /// Absolute balance tolerance.
    #[arg(long, conflicts_with = "balance_ratio")]
    balance: Option<usize>,

    /// Balance tolerance as a fraction of the vertex count.
    #[arg(long)]
    balance_ratio: Option<f64>,

    /// Seed for the 4-partition.
    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Wall-clock limit in seconds.
    #[arg(long, default_value_t = 300.0)]
    time_limit: f64,

    /// Node budget for the witness branch & bound.
    #[arg(long, default_value_t = DEFAULT_LAMBDA)]
    lambda: u64,

    /// CSV output path.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let balance = match (args.balance, args.balance_ratio) {
        (Some(b), None) => BalanceSpec::Absolute(b),
        (None, Some(r)) => BalanceSpec::Ratio(r),
        _ => {
            eprintln!("error: exactly one of --balance or --balance-ratio is required");
            return ExitCode::FAILURE;
        }
    };
    let cfg = BenchConfig {
        instance: args.instance,
        format: match args.format {
            FormatArg::Dimacs => InstanceFormat::Dimacs,
            FormatArg::Edgelist => InstanceFormat::EdgeList,
        },
        method: args.method.into(),
        balance,
        seed: args.seed,
        time_limit: args.time_limit,
        lambda: args.lambda,
        out: args.out,
    };
    let record = match run_benchmark(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut records = vec![record];
    compute_gaps(&mut records);
    let report = emit_report(&records);
    print!("{}", report.table);
    if let Some(path) = &cfg.out {
        if let Err(e) = std::fs::write(path, &report.csv) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::FAILURE;
        }
    }
    ExitCode::SUCCESS
}
