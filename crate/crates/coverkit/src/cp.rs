//! Minimal constraint-programming substrate for the cover model:
//! a set variable with bound + cardinality domain, an integer variable
//! for the cover size, a propagation fixpoint loop, the cardinality /
//! edge-clause / balance constraints, and a branch & bound search
//! minimizing the cover size.
//!
//! Search restores state by cloning domains at each node; domains are
//! small bitsets so a copy is cheaper than trailing deltas.

use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::bitset::VertexSet;
use crate::graph::{is_vertex_cover, Graph};

/// Signals a domain wipeout during propagation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inconsistent;

pub type PropResult = Result<(), Inconsistent>;

/// Domain of a set variable: required elements, possible elements, and
/// a cardinality interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetDomain {
    lb: VertexSet,
    ub: VertexSet,
    card_min: usize,
    card_max: usize,
}

impl SetDomain {
    /// Free domain over `0..n`: anything between the empty set and V.
    pub fn free(n: usize) -> Self {
        SetDomain {
            lb: VertexSet::empty(n),
            ub: VertexSet::full(n),
            card_min: 0,
            card_max: n,
        }
    }

    pub fn with_bounds(lb: VertexSet, ub: VertexSet) -> Result<Self, Inconsistent> {
        if !lb.is_subset_of(&ub) {
            return Err(Inconsistent);
        }
        let card_max = ub.card();
        let card_min = lb.card();
        Ok(SetDomain {
            lb,
            ub,
            card_min,
            card_max,
        })
    }

    pub fn lb(&self) -> &VertexSet {
        &self.lb
    }

    pub fn ub(&self) -> &VertexSet {
        &self.ub
    }

    pub fn card_min(&self) -> usize {
        self.card_min
    }

    pub fn card_max(&self) -> usize {
        self.card_max
    }

    pub fn is_decided(&self) -> bool {
        self.lb == self.ub
    }

    pub fn undecided(&self) -> VertexSet {
        self.ub.difference(&self.lb)
    }
}

/// Integer interval domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntDomain {
    pub min: usize,
    pub max: usize,
}

impl IntDomain {
    pub fn new(min: usize, max: usize) -> Self {
        assert!(min <= max);
        IntDomain { min, max }
    }
}

/// The mutable variables seen by propagators: the cover set `S` and the
/// size bound `K`. Every successful mutation bumps `version`.
#[derive(Clone, Debug)]
pub struct State {
    pub s: SetDomain,
    pub k: IntDomain,
    version: u64,
}

impl State {
    pub fn new(s: SetDomain, k: IntDomain) -> Self {
        State { s, k, version: 1 }
    }

    /// Root state for a cover problem over `n` vertices.
    pub fn root(n: usize) -> Self {
        State::new(SetDomain::free(n), IntDomain::new(0, n))
    }

    pub fn version(&self) -> u64 {
        self.version
    }

    pub fn include(&mut self, v: usize) -> PropResult {
        if self.s.lb.contains(v) {
            return Ok(());
        }
        if !self.s.ub.contains(v) {
            return Err(Inconsistent);
        }
        self.s.lb.insert(v);
        if self.s.lb.card() > self.s.card_max {
            return Err(Inconsistent);
        }
        self.version += 1;
        Ok(())
    }

    pub fn exclude(&mut self, v: usize) -> PropResult {
        if !self.s.ub.contains(v) {
            return Ok(());
        }
        if self.s.lb.contains(v) {
            return Err(Inconsistent);
        }
        self.s.ub.remove(v);
        if self.s.ub.card() < self.s.card_min {
            return Err(Inconsistent);
        }
        self.version += 1;
        Ok(())
    }

    pub fn set_card_min(&mut self, v: usize) -> PropResult {
        if v > self.s.card_min {
            if v > self.s.card_max || v > self.s.ub.card() {
                return Err(Inconsistent);
            }
            self.s.card_min = v;
            self.version += 1;
        }
        Ok(())
    }

    pub fn set_card_max(&mut self, v: usize) -> PropResult {
        if v < self.s.card_max {
            if v < self.s.card_min || v < self.s.lb.card() {
                return Err(Inconsistent);
            }
            self.s.card_max = v;
            self.version += 1;
        }
        Ok(())
    }

    pub fn set_k_min(&mut self, v: usize) -> PropResult {
        if v > self.k.min {
            if v > self.k.max {
                return Err(Inconsistent);
            }
            self.k.min = v;
            self.version += 1;
        }
        Ok(())
    }

    pub fn set_k_max(&mut self, v: usize) -> PropResult {
        if v < self.k.max {
            if v < self.k.min {
                return Err(Inconsistent);
            }
            self.k.max = v;
            self.version += 1;
        }
        Ok(())
    }
}

/// A constraint's filtering procedure. Contract: only shrink domains
/// (monotone), report `Inconsistent` on wipeout, and be safe to call
/// again at any time.
pub trait Propagator {
    fn propagate(&mut self, st: &mut State) -> PropResult;
    fn name(&self) -> &'static str;
}

/// Runs every propagator whose inputs may have changed, until no domain
/// changes or a failure is reported. A propagator is re-invoked when
/// the state version moved since the start of its previous run, so
/// self-triggered cascades also reach their fixpoint.
pub fn fixpoint(props: &mut [Box<dyn Propagator>], st: &mut State) -> PropResult {
    let mut last_seen = vec![0u64; props.len()];
    loop {
        let mut ran_any = false;
        for (i, p) in props.iter_mut().enumerate() {
            if st.version() != last_seen[i] {
                ran_any = true;
                let before = st.version();
                p.propagate(st)?;
                last_seen[i] = before;
            }
        }
        if !ran_any {
            return Ok(());
        }
    }
}

/// `|S| <= K` plus cardinality/bound channeling.
pub struct Cardinality;

impl Propagator for Cardinality {
    fn propagate(&mut self, st: &mut State) -> PropResult {
        st.set_card_min(st.s.lb().card())?;
        st.set_card_min(st.k.min)?;
        st.set_card_max(st.s.ub().card())?;
        st.set_card_max(st.k.max)?;
        st.set_k_min(st.s.card_min())?;
        Ok(())
    }

    fn name(&self) -> &'static str {
        "cardinality"
    }
}

/// Unit propagation on the 2-clauses `u in S or v in S` per edge.
pub struct EdgeClauses {
    graph: Arc<Graph>,
}

impl EdgeClauses {
    pub fn new(graph: Arc<Graph>) -> Self {
        EdgeClauses { graph }
    }
}

impl Propagator for EdgeClauses {
    fn propagate(&mut self, st: &mut State) -> PropResult {
        for v in 0..self.graph.n() {
            if !st.s.ub().contains(v) {
                for &u in self.graph.neighbors(v) {
                    st.include(u)?;
                }
            }
        }
        Ok(())
    }

    fn name(&self) -> &'static str {
        "edge-clauses"
    }
}

/// Bounds reasoning on `max_i |s_i ∩ S| - min_i |s_i ∩ S| <= b` for a
/// vertex partition `s_1..s_p`.
pub struct Balance {
    parts: Vec<VertexSet>,
    tolerance: usize,
}

impl Balance {
    pub fn new(parts: Vec<VertexSet>, tolerance: usize) -> Self {
        Balance { parts, tolerance }
    }

    /// Direct evaluation on a decided set.
    pub fn satisfied_by(&self, s: &VertexSet) -> bool {
        let counts: Vec<usize> = self.parts.iter().map(|p| p.intersection_card(s)).collect();
        match (counts.iter().max(), counts.iter().min()) {
            (Some(hi), Some(lo)) => hi - lo <= self.tolerance,
            _ => true,
        }
    }
}

impl Propagator for Balance {
    fn propagate(&mut self, st: &mut State) -> PropResult {
        loop {
            let before = st.version();
            let cmin: Vec<usize> = self
                .parts
                .iter()
                .map(|p| p.intersection_card(st.s.lb()))
                .collect();
            let cmax: Vec<usize> = self
                .parts
                .iter()
                .map(|p| p.intersection_card(st.s.ub()))
                .collect();
            if self.parts.is_empty() {
                return Ok(());
            }
            // every count must fit in a window of width `tolerance`
            let hi_cap = cmax.iter().min().unwrap() + self.tolerance;
            let lo_cap = cmin.iter().max().unwrap().saturating_sub(self.tolerance);
            for (i, part) in self.parts.iter().enumerate() {
                let lo = cmin[i].max(lo_cap);
                let hi = cmax[i].min(hi_cap);
                if lo > hi {
                    return Err(Inconsistent);
                }
                if hi == cmin[i] && cmax[i] > hi {
                    // count pinned at the current lower count: the part's
                    // undecided vertices are out
                    for v in part.intersection(st.s.ub()).iter() {
                        if !st.s.lb().contains(v) {
                            st.exclude(v)?;
                        }
                    }
                } else if lo == cmax[i] && cmin[i] < lo {
                    // count must reach everything still possible
                    for v in part.intersection(st.s.ub()).iter() {
                        st.include(v)?;
                    }
                }
            }
            if st.version() == before {
                return Ok(());
            }
        }
    }

    fn name(&self) -> &'static str {
        "balance"
    }
}

/// One-shot filtering entry points, for callers that don't want to keep
/// propagator objects around.
pub fn post_cardinality(st: &mut State) -> PropResult {
    Cardinality.propagate(st)
}

pub fn post_edge_clauses(g: &Graph, st: &mut State) -> PropResult {
    for v in 0..g.n() {
        if !st.s.ub().contains(v) {
            for &u in g.neighbors(v) {
                st.include(u)?;
            }
        }
    }
    Ok(())
}

pub fn post_balance(parts: &[VertexSet], tolerance: usize, st: &mut State) -> PropResult {
    Balance::new(parts.to_vec(), tolerance).propagate(st)
}

/// A propagation model: the host graph plus its constraints.
pub struct Model {
    pub graph: Arc<Graph>,
    pub propagators: Vec<Box<dyn Propagator>>,
    pub balance: Option<Balance>,
}

impl Model {
    pub fn new(graph: Arc<Graph>, propagators: Vec<Box<dyn Propagator>>) -> Self {
        Model {
            graph,
            propagators,
            balance: None,
        }
    }

    /// Adds a balance side constraint (kept separately so solutions can
    /// be re-checked directly).
    pub fn with_balance(mut self, parts: Vec<VertexSet>, tolerance: usize) -> Self {
        self.propagators
            .push(Box::new(Balance::new(parts.clone(), tolerance)));
        self.balance = Some(Balance::new(parts, tolerance));
        self
    }
}

/// Search limits and statistics.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchBudget {
    pub deadline: Option<Instant>,
    pub node_limit: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct MinimizeOutcome {
    pub best: Option<VertexSet>,
    /// True when the search tree was exhausted (optimality proven,
    /// or infeasibility when `best` is `None`).
    pub complete: bool,
    pub nodes: u64,
    pub nodes_to_best: u64,
    pub time_to_best: Duration,
    pub total_time: Duration,
}

struct Minimizer<'a> {
    model: &'a mut Model,
    budget: SearchBudget,
    started: Instant,
    best: Option<VertexSet>,
    interrupted: bool,
    nodes: u64,
    nodes_to_best: u64,
    time_to_best: Duration,
}

impl Minimizer<'_> {
    fn out_of_budget(&mut self) -> bool {
        if let Some(dl) = self.budget.deadline {
            if Instant::now() >= dl {
                self.interrupted = true;
            }
        }
        if let Some(limit) = self.budget.node_limit {
            if self.nodes >= limit {
                self.interrupted = true;
            }
        }
        self.interrupted
    }

    fn solution_ok(&self, s: &VertexSet, k_max: usize) -> bool {
        is_vertex_cover(&self.model.graph, s)
            && s.card() <= k_max
            && self
                .model
                .balance
                .as_ref()
                .map(|b| b.satisfied_by(s))
                .unwrap_or(true)
    }

    fn dfs(&mut self, mut st: State) {
        if self.out_of_budget() {
            return;
        }
        // objective: only covers strictly smaller than the incumbent
        if let Some(best) = &self.best {
            let cap = best.card();
            if cap == 0 {
                return;
            }
            if st.set_k_max(cap - 1).is_err() {
                return;
            }
        }
        if fixpoint(&mut self.model.propagators, &mut st).is_err() {
            return;
        }
        if st.s.is_decided() {
            let s = st.s.lb().clone();
            if self.solution_ok(&s, st.k.max)
                && self.best.as_ref().map(|b| s.card() < b.card()).unwrap_or(true)
            {
                self.nodes_to_best = self.nodes;
                self.time_to_best = self.started.elapsed();
                self.best = Some(s);
            }
            return;
        }
        // branch on the undecided vertex of maximum degree in G
        let v = st
            .s
            .undecided()
            .iter()
            .max_by_key(|&v| (self.model.graph.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        // left: include
        self.nodes += 1;
        let mut left = st.clone();
        if left.include(v).is_ok() {
            self.dfs(left);
        }
        if self.interrupted {
            return;
        }
        // right: exclude
        self.nodes += 1;
        if st.exclude(v).is_ok() {
            self.dfs(st);
        }
    }
}

/// Depth-first branch & bound minimizing `|S|`: every solution tightens
/// `ub(K)` and the search continues. Branching takes the undecided
/// vertex of maximum degree (ties by index), inclusion first.
pub fn minimize_search(model: &mut Model, root: State, budget: SearchBudget) -> MinimizeOutcome {
    let started = Instant::now();
    let mut m = Minimizer {
        model,
        budget,
        started,
        best: None,
        interrupted: false,
        nodes: 0,
        nodes_to_best: 0,
        time_to_best: Duration::ZERO,
    };
    m.dfs(root);
    MinimizeOutcome {
        complete: !m.interrupted,
        best: m.best,
        nodes: m.nodes,
        nodes_to_best: m.nodes_to_best,
        time_to_best: m.time_to_best,
        total_time: started.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path3() -> Arc<Graph> {
        Arc::new(Graph::from_edges(3, [(0, 1), (1, 2)]))
    }

    #[test]
    fn fixpoint_no_constraints_is_identity() {
        let mut st = State::root(4);
        let before = st.clone();
        fixpoint(&mut [], &mut st).unwrap();
        assert_eq!(st.s, before.s);
        assert_eq!(st.k, before.k);
    }

    #[test]
    fn cardinality_bound_crossing_fails() {
        // |lb(S)| = 3 with ub(K) = 2
        let mut st = State::new(
            SetDomain::with_bounds(
                VertexSet::from_members(5, [0, 1, 2]),
                VertexSet::full(5),
            )
            .unwrap(),
            IntDomain::new(0, 2),
        );
        let mut props: Vec<Box<dyn Propagator>> = vec![Box::new(Cardinality)];
        assert_eq!(fixpoint(&mut props, &mut st), Err(Inconsistent));
    }

    #[test]
    fn cardinality_counts_lb() {
        let mut st = State::new(
            SetDomain::with_bounds(VertexSet::from_members(5, [0, 1]), VertexSet::full(5)).unwrap(),
            IntDomain::new(0, 5),
        );
        Cardinality.propagate(&mut st).unwrap();
        assert_eq!(st.k.min, 2);

        // ub(S)={a}, K=[2,2] cannot reach cardinality 2
        let mut st = State::new(
            SetDomain::with_bounds(VertexSet::empty(2), VertexSet::from_members(2, [0])).unwrap(),
            IntDomain::new(2, 2),
        );
        assert!(Cardinality.propagate(&mut st).is_err());

        // empty lb, wide K: no change
        let mut st = State::root(4);
        let v = st.version();
        Cardinality.propagate(&mut st).unwrap();
        assert_eq!(st.version(), v);
    }

    #[test]
    fn edge_clause_unit_propagation() {
        let g = Arc::new(Graph::from_edges(2, [(0, 1)]));
        let mut st = State::root(2);
        st.exclude(0).unwrap();
        EdgeClauses::new(g.clone()).propagate(&mut st).unwrap();
        assert!(st.s.lb().contains(1));

        // both endpoints excluded
        let mut st = State::root(2);
        st.exclude(0).unwrap();
        st.exclude(1).unwrap();
        assert!(EdgeClauses::new(g.clone()).propagate(&mut st).is_err());

        // no exclusions: no change
        let mut st = State::root(2);
        let v = st.version();
        EdgeClauses::new(g).propagate(&mut st).unwrap();
        assert_eq!(st.version(), v);
    }

    #[test]
    fn edge_clause_chain_alternates() {
        // path of 4 with one endpoint excluded: exclusion forces its
        // neighbor, and the rest stays open
        let g = Arc::new(Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]));
        let mut st = State::root(4);
        st.exclude(0).unwrap();
        let mut props: Vec<Box<dyn Propagator>> = vec![Box::new(EdgeClauses::new(g))];
        fixpoint(&mut props, &mut st).unwrap();
        assert!(st.s.lb().contains(1));
        assert!(!st.s.lb().contains(2));
    }

    #[test]
    fn balance_forces_matching_counts() {
        let parts = vec![
            VertexSet::from_members(4, [0, 1]),
            VertexSet::from_members(4, [2, 3]),
        ];
        let mut st = State::root(4);
        st.include(0).unwrap();
        st.include(1).unwrap();
        Balance::new(parts, 0).propagate(&mut st).unwrap();
        assert!(st.s.lb().contains(2) && st.s.lb().contains(3));
    }

    #[test]
    fn balance_vacuous_when_loose() {
        let parts = vec![
            VertexSet::from_members(4, [0, 1]),
            VertexSet::from_members(4, [2, 3]),
        ];
        let mut st = State::root(4);
        st.include(0).unwrap();
        let v = st.version();
        Balance::new(parts, 2).propagate(&mut st).unwrap();
        assert_eq!(st.version(), v);
    }

    #[test]
    fn balance_detects_conflict() {
        let parts = vec![
            VertexSet::from_members(2, [0]),
            VertexSet::from_members(2, [1]),
        ];
        let mut st = State::root(2);
        st.include(0).unwrap();
        st.exclude(1).unwrap();
        assert!(Balance::new(parts, 0).propagate(&mut st).is_err());
    }

    #[test]
    fn minimize_pure_cover_on_path() {
        let g = path3();
        let mut model = Model::new(
            g.clone(),
            vec![Box::new(Cardinality), Box::new(EdgeClauses::new(g.clone()))],
        );
        let out = minimize_search(&mut model, State::root(3), SearchBudget::default());
        assert!(out.complete);
        assert_eq!(out.best.unwrap().card(), 1);
    }

    #[test]
    fn minimize_edgeless_balanced_is_empty() {
        let g = Arc::new(Graph::from_edges(4, []));
        let parts = (0..4)
            .map(|v| VertexSet::from_members(4, [v]))
            .collect::<Vec<_>>();
        let mut model = Model::new(
            g.clone(),
            vec![Box::new(Cardinality), Box::new(EdgeClauses::new(g.clone()))],
        )
        .with_balance(parts, 0);
        let out = minimize_search(&mut model, State::root(4), SearchBudget::default());
        assert!(out.complete);
        assert_eq!(out.best.unwrap().card(), 0);
    }

    #[test]
    fn minimize_reports_infeasible() {
        // single edge, but K pinned to 0: no cover exists
        let g = Arc::new(Graph::from_edges(2, [(0, 1)]));
        let mut model = Model::new(
            g.clone(),
            vec![Box::new(Cardinality), Box::new(EdgeClauses::new(g.clone()))],
        );
        let root = State::new(SetDomain::free(2), IntDomain::new(0, 0));
        let out = minimize_search(&mut model, root, SearchBudget::default());
        assert!(out.complete);
        assert!(out.best.is_none());
    }
}
