//! Watch the VertexCover propagator filter domains on a star graph, at
//! each method strength.
//!
//!     cargo run --example propagate

use coverkit::cp::{IntDomain, SetDomain, State};
use coverkit::graph::Graph;
use coverkit::propagator::{propagate_vertex_cover, MethodConfig, MethodVariant, Witness};

fn main() {
    // K_{1,3}: center 0 with leaves 1, 2, 3; at most one vertex allowed
    let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
    println!("graph: star K_1,3 | domains: S free, K = [0, 1]\n");

    for variant in [
        MethodVariant::CliqueCover,
        MethodVariant::KernelPruning,
        MethodVariant::KernelWitness,
        MethodVariant::Full,
    ] {
        let mut st = State::new(SetDomain::free(4), IntDomain::new(0, 1));
        let mut w = Witness::initial(&g);
        let cfg = MethodConfig::new(variant);
        match propagate_vertex_cover(&g, &cfg, &mut w, &mut st) {
            Ok(()) => println!(
                "{variant:?}: lb(S)={:?} ub(S)={:?} K=[{},{}] witness={:?} optimal={}",
                st.s.lb(),
                st.s.ub(),
                st.k.min,
                st.k.max,
                w.cover,
                w.optimal
            ),
            Err(_) => println!("{variant:?}: FAILURE"),
        }
    }

    // an edge with budget 0 is infeasible for every variant
    let edge = Graph::from_edges(2, [(0, 1)]);
    let mut st = State::new(SetDomain::free(2), IntDomain::new(0, 0));
    let mut w = Witness::initial(&edge);
    let r = propagate_vertex_cover(
        &edge,
        &MethodConfig::new(MethodVariant::Full),
        &mut w,
        &mut st,
    );
    println!("\nsingle edge with K = [0, 0]: {:?}", r);
}
