//! The VertexCover global constraint: a propagator that combines
//! neighborhood forcing, the Buss kernel, crown decompositions, a
//! budgeted branch & bound witness, rigid-crown pruning and witness
//! pruning, configurable down to weaker method variants.

use std::sync::Arc;

use crate::bitset::VertexSet;
use crate::cp::{post_edge_clauses, Cardinality, EdgeClauses, Inconsistent, Model, PropResult, Propagator, State};
use crate::graph::{induced_subgraph, is_vertex_cover, Graph};
use crate::kernel::{buss_kernel, exhaust_crowns, rigid_crown_kernel};
use crate::search::{branch_and_bound_vc, lower_bound, SearchLimits};

/// A concrete vertex cover cached between propagator calls. `optimal`
/// means the cover was proven minimum among covers consistent with the
/// domains recorded in the snapshot.
#[derive(Clone, Debug)]
pub struct Witness {
    pub cover: VertexSet,
    pub optimal: bool,
    /// `(lb(S), ub(S))` at the time the cover was computed; `optimal`
    /// is only trusted while the domains still match.
    snapshot: Option<(VertexSet, VertexSet)>,
}

impl Witness {
    /// The trivial witness: all of `V`, not optimal.
    pub fn initial(g: &Graph) -> Self {
        Witness {
            cover: VertexSet::full(g.n()),
            optimal: false,
            snapshot: None,
        }
    }

    fn store(&mut self, g: &Graph, cover: VertexSet, optimal: bool, st: &State) {
        assert!(is_vertex_cover(g, &cover), "witness must stay a cover");
        self.cover = cover;
        self.optimal = optimal;
        self.snapshot = Some((st.s.lb().clone(), st.s.ub().clone()));
    }

    fn trusted_optimal(&self, st: &State) -> bool {
        self.optimal
            && self
                .snapshot
                .as_ref()
                .map(|(lb, ub)| lb == st.s.lb() && ub == st.s.ub())
                .unwrap_or(false)
    }
}

/// The five filtering strengths, weakest to strongest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum MethodVariant {
    /// No global constraint: edge 2-clauses plus cardinality.
    Decomposition,
    /// Buss kernel and the clique-cover lower bound only.
    CliqueCover,
    /// Adds crown kernelization and rigid-crown pruning.
    KernelPruning,
    /// Adds the branch & bound witness for the lower bound.
    KernelWitness,
    /// Everything, including witness pruning.
    Full,
}

pub const DEFAULT_LAMBDA: u64 = 5000;

#[derive(Clone, Copy, Debug)]
pub struct MethodConfig {
    pub variant: MethodVariant,
    /// Node budget for the witness branch & bound.
    pub lambda: u64,
}

impl MethodConfig {
    /// Default budgets: λ = 0 below KernelWitness, 5000 above.
    pub fn new(variant: MethodVariant) -> Self {
        let lambda = match variant {
            MethodVariant::Decomposition
            | MethodVariant::CliqueCover
            | MethodVariant::KernelPruning => 0,
            MethodVariant::KernelWitness | MethodVariant::Full => DEFAULT_LAMBDA,
        };
        MethodConfig { variant, lambda }
    }

    pub fn with_lambda(variant: MethodVariant, lambda: u64) -> Self {
        MethodConfig { variant, lambda }
    }

    fn uses_crowns(&self) -> bool {
        self.variant >= MethodVariant::KernelPruning
    }

    fn uses_rigid(&self) -> bool {
        self.variant >= MethodVariant::KernelPruning
    }

    fn uses_witness_pruning(&self) -> bool {
        self.variant == MethodVariant::Full
    }
}

/// One filtering pass of the VertexCover constraint over `st`.
///
/// Order of operations: neighborhood forcing; Buss kernel on the free
/// subgraph with budget `ub(K) - |lb(S)|`; if the cached witness no
/// longer proves a strictly smaller cover, recompute it through crown
/// exhaustion plus budgeted branch & bound and refresh `lb(K)`; when
/// the fresh bound is tight, prune the restricted side of the rigid
/// crown kernel; otherwise attempt witness pruning; finally commit all
/// forced vertices to `lb(S)`.
pub fn propagate_vertex_cover(
    g: &Graph,
    cfg: &MethodConfig,
    w: &mut Witness,
    st: &mut State,
) -> PropResult {
    let n = g.n();
    // neighborhood of excluded vertices joins the cover
    post_edge_clauses(g, st)?;
    if st.s.lb().card() > st.k.max {
        return Err(Inconsistent);
    }

    // Buss kernel on the free subgraph
    let free = st.s.undecided();
    let budget = st.k.max - st.s.lb().card();
    let free_view = induced_subgraph(g, &free);
    let buss = buss_kernel(free_view.local(), budget);
    if buss.infeasible {
        return Err(Inconsistent);
    }
    // lift the Buss sets back to original ids
    let forced_buss = free_view.lift(&buss.forced);
    let buss_residual = free_view.lift(buss.residual.selected());

    // is the cached witness still proof of a strictly smaller cover?
    let witness_invalid = !w.cover.is_subset_of(st.s.ub())
        || w.cover.union_card(st.s.lb()) >= st.k.max;
    debug_assert!(witness_invalid || is_vertex_cover(g, &w.cover.union(st.s.lb())));

    // lower bound established by this call, used to justify rigid pruning
    let mut sound_bound: Option<usize> = None;
    let mut forced_rigid = VertexSet::empty(n);

    if witness_invalid {
        let h_b = induced_subgraph(g, &buss_residual);
        let crown_budget = budget - forced_buss.card().min(budget);
        // crown exhaustion (identity below KernelPruning)
        let (taken_crown, kernel_active) = if cfg.uses_crowns() {
            let ex = exhaust_crowns(h_b.local(), crown_budget);
            if ex.infeasible {
                return Err(Inconsistent);
            }
            (h_b.lift(&ex.taken), h_b.lift(&ex.residual.selected()))
        } else {
            (VertexSet::empty(n), buss_residual.clone())
        };
        let h_k = induced_subgraph(g, &kernel_active);
        let base = st.s.lb().card() + forced_buss.card() + taken_crown.card();

        if cfg.lambda > 0 {
            // early stop once a cover strictly below ub(K) is witnessed
            let limits = SearchLimits {
                node_budget: Some(cfg.lambda),
                stop_below: Some(st.k.max.saturating_sub(base)),
                use_clique_bound: true,
            };
            let out = branch_and_bound_vc(h_k.local(), &limits);
            let mut cover = st.s.lb().union(&forced_buss);
            cover.union_with(&taken_crown);
            cover.union_with(&h_k.lift(&out.cover));
            w.store(g, cover, out.optimal, st);
        }

        if w.trusted_optimal(st) {
            let size = w.cover.card();
            st.set_k_min(size)?;
            sound_bound = Some(size);
        } else {
            let bound = (base + lower_bound(h_k.local()))
                .max(st.s.lb().card() + forced_buss.card() + lower_bound(h_b.local()));
            st.set_k_min(bound)?;
            sound_bound = Some(bound);
        }
    }

    if cfg.uses_rigid() && sound_bound == Some(st.k.max) {
        debug_assert_eq!(st.k.min, st.k.max);
        // the bound is tight: only minimum residual covers can extend the
        // domains, and rigid crowns preserve all of those
        let free_now = st.s.undecided();
        let view = induced_subgraph(g, &free_now);
        let rigid = rigid_crown_kernel(view.local());
        for v in view.lift(&rigid.restricted).iter() {
            st.exclude(v)?;
        }
        forced_rigid = view.lift(&rigid.forced);
    } else if cfg.uses_witness_pruning() && w.trusted_optimal(st) && st.k.max - st.k.min <= 2 {
        let forced = witness_pruning(g, w, st.k.max, st.s.lb());
        for v in forced.iter() {
            st.include(v)?;
        }
    }

    for v in forced_buss.union(&forced_rigid).iter() {
        st.include(v)?;
    }
    if st.s.lb().card() > st.k.max || st.k.min > st.k.max {
        return Err(Inconsistent);
    }
    Ok(())
}

/// Vertices provably in every cover of size at most `ub_k` extending
/// `lb_s`, derived from a minimum witness cover: for `v` in the witness
/// and `J ⊆ N(v) \ w.cover` with `|J| ∈ {1, 2}` whose neighborhood
/// (outside `lb_s`) lies within `N(v) ∪ {v}`, any cover omitting `v`
/// has at least `|w.cover| + |J| - 1` vertices; `v` is forced when that
/// bound exceeds `ub_k`.
pub fn witness_pruning(g: &Graph, w: &Witness, ub_k: usize, lb_s: &VertexSet) -> VertexSet {
    let n = g.n();
    let mut forced = VertexSet::empty(n);
    // smallest |J| that makes |w.cover| + |J| - 1 exceed ub_k
    let needed = (ub_k + 2).saturating_sub(w.cover.card()).max(1);
    if needed > 2 {
        return forced;
    }
    for v in w.cover.iter() {
        let mut nplus = VertexSet::from_members(n, g.neighbors(v).iter().copied());
        nplus.insert(v);
        let usable = g
            .neighbors(v)
            .iter()
            .filter(|&&j| !w.cover.contains(j))
            .filter(|&&j| {
                g.neighbors(j)
                    .iter()
                    .all(|&u| lb_s.contains(u) || nplus.contains(u))
            })
            .count();
        if usable >= needed {
            forced.insert(v);
        }
    }
    forced
}

/// The VertexCover constraint as a reusable propagator instance. Not
/// shareable: the witness is mutable state owned by one search.
pub struct VertexCoverPropagator {
    graph: Arc<Graph>,
    cfg: MethodConfig,
    witness: Witness,
}

impl VertexCoverPropagator {
    pub fn new(graph: Arc<Graph>, cfg: MethodConfig) -> Self {
        assert!(
            cfg.variant != MethodVariant::Decomposition,
            "the decomposition variant posts plain clauses instead"
        );
        let witness = Witness::initial(&graph);
        VertexCoverPropagator { graph, cfg, witness }
    }

    pub fn witness(&self) -> &Witness {
        &self.witness
    }
}

impl Propagator for VertexCoverPropagator {
    fn propagate(&mut self, st: &mut State) -> PropResult {
        propagate_vertex_cover(&self.graph, &self.cfg, &mut self.witness, st)
    }

    fn name(&self) -> &'static str {
        "vertex-cover"
    }
}

/// Builds the cover-minimization model for a method variant:
/// cardinality channeling plus either the plain 2-clause decomposition
/// or the global constraint.
pub fn build_cover_model(graph: Arc<Graph>, cfg: MethodConfig) -> Model {
    let mut props: Vec<Box<dyn Propagator>> = vec![Box::new(Cardinality)];
    match cfg.variant {
        MethodVariant::Decomposition => {
            props.push(Box::new(EdgeClauses::new(graph.clone())));
        }
        _ => {
            props.push(Box::new(VertexCoverPropagator::new(graph.clone(), cfg)));
        }
    }
    Model::new(graph, props)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cp::{IntDomain, SetDomain};

    fn run(g: &Graph, cfg: MethodConfig, st: &mut State) -> (PropResult, Witness) {
        let mut w = Witness::initial(g);
        let r = propagate_vertex_cover(g, &cfg, &mut w, st);
        (r, w)
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    #[test]
    fn tight_star_forces_center_and_drops_leaves() {
        let g = star(3);
        let mut st = State::new(SetDomain::free(4), IntDomain::new(0, 1));
        let (r, w) = run(&g, MethodConfig::new(MethodVariant::Full), &mut st);
        r.unwrap();
        assert!(st.s.lb().contains(0));
        assert_eq!(st.k.min, 1);
        assert_eq!(st.s.ub(), &VertexSet::from_members(4, [0]));
        assert_eq!(w.cover, VertexSet::from_members(4, [0]));
        assert!(w.optimal);
    }

    #[test]
    fn edge_with_zero_budget_fails() {
        let g = Graph::from_edges(2, [(0, 1)]);
        for variant in [
            MethodVariant::CliqueCover,
            MethodVariant::KernelPruning,
            MethodVariant::KernelWitness,
            MethodVariant::Full,
        ] {
            let mut st = State::new(SetDomain::free(2), IntDomain::new(0, 0));
            let (r, _) = run(&g, MethodConfig::new(variant), &mut st);
            assert_eq!(r, Err(Inconsistent), "{variant:?}");
        }
    }

    #[test]
    fn excluded_endpoint_forces_neighbor() {
        let g = Graph::from_edges(2, [(0, 1)]);
        let mut st = State::root(2);
        st.exclude(0).unwrap();
        let (r, _) = run(&g, MethodConfig::new(MethodVariant::CliqueCover), &mut st);
        r.unwrap();
        assert!(st.s.lb().contains(1));
    }

    #[test]
    fn clique_cover_variant_raises_k_min() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        let mut st = State::root(3);
        let (r, w) = run(&g, MethodConfig::new(MethodVariant::CliqueCover), &mut st);
        r.unwrap();
        assert_eq!(st.k.min, 2);
        assert!(!w.optimal); // λ = 0: witness never recomputed
        assert_eq!(w.cover.card(), 3);
    }

    #[test]
    fn witness_variant_proves_optimum() {
        // ub(K) = 2 is tight on this path, so the early stop never
        // triggers and the witness search runs to completion
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let mut st = State::new(SetDomain::free(4), IntDomain::new(0, 2));
        let (r, w) = run(&g, MethodConfig::new(MethodVariant::KernelWitness), &mut st);
        r.unwrap();
        assert!(w.optimal);
        assert_eq!(w.cover.card(), 2);
        assert_eq!(st.k.min, 2);
    }

    #[test]
    fn loose_bound_stops_witness_early() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let mut st = State::root(4);
        let (r, w) = run(&g, MethodConfig::new(MethodVariant::KernelWitness), &mut st);
        r.unwrap();
        assert!(!w.optimal);
        assert!(w.cover.card() < 4);
        assert_eq!(st.k.min, 1); // clique-cover bound on the path
    }

    #[test]
    fn pruning_rule_matches_enumeration() {
        // triangle: the bound |w|+|J|-1 = 2 never exceeds ub_K = 2, and
        // indeed {b,c} is a size-2 cover omitting a
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        let w = Witness {
            cover: VertexSet::from_members(3, [0, 1]),
            optimal: true,
            snapshot: None,
        };
        assert!(witness_pruning(&g, &w, 2, &VertexSet::empty(3)).is_empty());

        // C4 with cover {0,2}: N({1}) = {0,2} is not within N+(0)
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        let w = Witness {
            cover: VertexSet::from_members(4, [0, 2]),
            optimal: true,
            snapshot: None,
        };
        assert!(witness_pruning(&c4, &w, 2, &VertexSet::empty(4)).is_empty());
    }

    #[test]
    fn pruning_fires_when_bound_exceeds_budget() {
        // star: every cover of size <= 1 contains the center, and a
        // leaf pair J gives bound |w|+|J|-1 = 2 > 1
        let g = star(3);
        let w = Witness {
            cover: VertexSet::from_members(4, [0]),
            optimal: true,
            snapshot: None,
        };
        let forced = witness_pruning(&g, &w, 1, &VertexSet::empty(4));
        assert_eq!(forced, VertexSet::from_members(4, [0]));
    }

    #[test]
    fn decomposition_model_builds_without_global_constraint() {
        let g = Arc::new(star(3));
        let model = build_cover_model(g, MethodConfig::new(MethodVariant::Decomposition));
        assert_eq!(model.propagators.len(), 2);
    }
}
