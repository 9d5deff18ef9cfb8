//! Vertex cover kernelization and propagation toolkit.
//!
//! Building blocks, bottom to top:
//!
//! - [`bitset`], [`graph`]: dense vertex sets, adjacency-list graphs,
//!   DIMACS / edge-list parsing.
//! - [`matching`]: greedy and Hopcroft-Karp bipartite matchings,
//!   alternating-path reachability.
//! - [`kernel`]: Buss, crown, and rigid-crown kernelizations.
//! - [`search`]: clique-cover lower bound and exact branch & bound for
//!   minimum vertex cover.
//! - [`cp`]: a small constraint-propagation substrate (set domains,
//!   fixpoint, minimizing search).
//! - [`propagator`]: the VertexCover global constraint built from the
//!   pieces above, in five strength variants.
//! - [`bench`]: a balanced-vertex-cover benchmark harness.
//!
//! See the `examples/` directory for a runnable tour of each layer.

pub mod bench;
pub mod bitset;
pub mod cp;
pub mod graph;
pub mod kernel;
pub mod matching;
pub mod propagator;
pub mod search;

pub use bitset::VertexSet;
pub use graph::{is_vertex_cover, parse_dimacs, parse_edge_list, Graph};
pub use kernel::{buss_kernel, crown_kernel, exhaust_crowns, rigid_crown_kernel};
pub use matching::{greedy_maximal_matching, hopcroft_karp};
pub use propagator::{propagate_vertex_cover, MethodConfig, MethodVariant, Witness};
pub use search::{branch_and_bound_vc, brute_force_min_vc, clique_cover, lower_bound};
