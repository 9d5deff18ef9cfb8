//! Solve minimum vertex cover exactly with branch & bound and compare
//! against the clique-cover lower bound.
//!
//!     cargo run --example exact_solve [-- N DENSITY SEED]

use coverkit::graph::{is_vertex_cover, Graph};
use coverkit::search::{branch_and_bound_vc, clique_cover, lower_bound, SearchLimits};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(40, |a| a.parse().expect("bad N"));
    let density: f64 = args.next().map_or(0.1, |a| a.parse().expect("bad DENSITY"));
    let seed: u64 = args.next().map_or(1, |a| a.parse().expect("bad SEED"));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, edges);
    println!("random graph: n={} m={} (seed {seed})", g.n(), g.m());

    let cc = clique_cover(&g);
    println!(
        "clique cover: {} cliques, lower bound {}",
        cc.cliques.len(),
        lower_bound(&g)
    );

    let out = branch_and_bound_vc(&g, &SearchLimits::unlimited());
    assert!(is_vertex_cover(&g, &out.cover));
    println!(
        "minimum vertex cover: {} vertices, {} nodes explored, optimal = {}",
        out.cover.card(),
        out.nodes_explored,
        out.optimal
    );
    println!("cover: {:?}", out.cover);

    // the same search under a tiny node budget: still returns a cover,
    // just without the optimality proof
    let limited = branch_and_bound_vc(&g, &SearchLimits::node_limited(50));
    println!(
        "with a 50-node budget: {} vertices, optimal = {}",
        limited.cover.card(),
        limited.optimal
    );
}
