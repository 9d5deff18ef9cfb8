//! Run the three kernelizations on a small crafted graph and show how
//! each classifies the vertices.
//!
//!     cargo run --example kernelize

use coverkit::graph::Graph;
use coverkit::kernel::{buss_kernel, exhaust_crowns, rigid_crown_kernel};

fn main() {
    // a hub of degree 5, a pendant path, and a square
    let g = Graph::from_edges(
        11,
        [
            (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), // hub
            (5, 6), (6, 7), // path hanging off leaf 5
            (7, 8), (8, 9), (9, 10), (10, 7), // square sharing vertex 7
        ],
    );
    println!("graph: n={} m={}", g.n(), g.m());

    let k = 4;
    let buss = buss_kernel(&g, k);
    println!("\nBuss rule, budget k={k}:");
    println!("  forced (degree > budget): {:?}", buss.forced);
    println!("  indifferent (isolated):   {:?}", buss.indifferent);
    println!(
        "  residual: {} vertices, {} edges, budget left {:?}",
        buss.residual.local().n(),
        buss.residual.local().m(),
        buss.budget_left
    );

    let crowns = exhaust_crowns(&g, k);
    println!("\ncrown exhaustion, budget k={k}:");
    println!("  heads taken into the cover: {:?}", crowns.taken);
    println!("  independent sets discarded: {:?}", crowns.discarded);
    println!("  residual: {} vertices", crowns.residual.local().n());

    let rigid = rigid_crown_kernel(&g);
    println!("\nrigid crowns (preserve every minimum cover):");
    println!("  forced:     {:?}", rigid.forced);
    println!("  restricted: {:?}", rigid.restricted);
    println!("  residual:   {} vertices", rigid.residual.local().n());
}
