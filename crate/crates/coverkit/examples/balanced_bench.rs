//! Benchmark all five methods on one random balanced-vertex-cover
//! instance and print the comparison table.
//!
//!     cargo run --release --example balanced_bench [-- N M SEED SECS]

use std::sync::Arc;
use std::time::Duration;

use coverkit::bench::{
    compute_gaps, emit_report, generate_partition, run_instance, RunLimits,
};
use coverkit::graph::Graph;
use coverkit::propagator::MethodVariant;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(120, |a| a.parse().expect("bad N"));
    let m: usize = args.next().map_or(360, |a| a.parse().expect("bad M"));
    let seed: u64 = args.next().map_or(1, |a| a.parse().expect("bad SEED"));
    let secs: f64 = args.next().map_or(2.0, |a| a.parse().expect("bad SECS"));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = std::collections::BTreeSet::new();
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    let g = Arc::new(Graph::from_edges(n, edges));
    let parts = generate_partition(n, seed);
    let limits = RunLimits {
        time_limit: Some(Duration::from_secs_f64(secs)),
        node_limit: None,
    };
    println!(
        "instance: n={n} m={m} seed={seed}, balance tolerance 4, {secs}s per method\n"
    );

    let label = format!("rnd-n{n}-m{m}-s{seed}");
    let mut records = Vec::new();
    for method in [
        MethodVariant::Decomposition,
        MethodVariant::CliqueCover,
        MethodVariant::KernelPruning,
        MethodVariant::KernelWitness,
        MethodVariant::Full,
    ] {
        records.push(run_instance(g.clone(), &label, method, 5000, &parts, 4, limits));
    }
    compute_gaps(&mut records);
    let report = emit_report(&records);
    print!("{}", report.table);
    println!("\ncsv:\n{}", report.csv);
}
