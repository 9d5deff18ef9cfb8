//! Exact and anytime minimum vertex cover search.
//!
//! A deliberately simple branch & bound: branch on the maximum-degree
//! vertex (take it, or take its whole neighborhood), prune with the
//! clique-cover lower bound, discard isolated vertices at every node.
//! A subset-enumeration oracle is provided for tests.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::matching::greedy_maximal_matching;

/// Disjoint cliques covering all vertices.
#[derive(Clone, Debug)]
pub struct CliqueCover {
    pub cliques: Vec<VertexSet>,
}

impl CliqueCover {
    pub fn validate(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::empty(g.n());
        for c in &self.cliques {
            for v in c.iter() {
                if !seen.insert(v) {
                    return false;
                }
                for u in c.iter() {
                    if u != v && !g.has_edge(u, v) {
                        return false;
                    }
                }
            }
        }
        seen.card() == g.n()
    }
}

fn neighbor_masks(g: &Graph) -> Vec<VertexSet> {
    (0..g.n())
        .map(|v| VertexSet::from_members(g.n(), g.neighbors(v).iter().copied()))
        .collect()
}

/// Greedy clique cover: vertices scanned in descending degree order
/// (ties by index); each joins the first clique it is fully adjacent
/// to, else opens a new one.
pub fn clique_cover(g: &Graph) -> CliqueCover {
    let nbrs = neighbor_masks(g);
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut cliques: Vec<VertexSet> = Vec::new();
    for v in order {
        match cliques.iter_mut().find(|c| c.is_subset_of(&nbrs[v])) {
            Some(c) => {
                c.insert(v);
            }
            None => cliques.push(VertexSet::from_members(g.n(), [v])),
        }
    }
    CliqueCover { cliques }
}

/// `|V| - |T|` for the greedy clique cover `T`: a lower bound on the
/// minimum vertex cover size.
pub fn lower_bound(g: &Graph) -> usize {
    g.n() - clique_cover(g).cliques.len()
}

// Clique-cover bound restricted to `active`, computed on precomputed
// neighbor masks to avoid rebuilding subgraphs inside the search.
fn clique_bound_masked(nbrs: &[VertexSet], active: &VertexSet) -> usize {
    let mut order: Vec<usize> = active.iter().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(nbrs[v].intersection_card(active)), v));
    let mut cliques: Vec<VertexSet> = Vec::new();
    for v in order {
        match cliques.iter_mut().find(|c| c.is_subset_of(&nbrs[v])) {
            Some(c) => {
                c.insert(v);
            }
            None => cliques.push(VertexSet::from_members(active.universe(), [v])),
        }
    }
    active.card() - cliques.len()
}

/// Limits and switches for [`branch_and_bound_vc`].
#[derive(Clone, Debug, Default)]
pub struct SearchLimits {
    /// Maximum number of branching decisions; `None` = unlimited.
    pub node_budget: Option<u64>,
    /// Stop as soon as a cover strictly smaller than this is found.
    pub stop_below: Option<usize>,
    /// Disable the clique-cover bound (for bound-strength comparisons).
    pub use_clique_bound: bool,
}

impl SearchLimits {
    pub fn unlimited() -> Self {
        SearchLimits {
            node_budget: None,
            stop_below: None,
            use_clique_bound: true,
        }
    }

    pub fn node_limited(budget: u64) -> Self {
        SearchLimits {
            node_budget: Some(budget),
            ..Self::unlimited()
        }
    }
}

/// Outcome of a branch & bound run. `optimal` is true only when the
/// whole tree was explored within the limits.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub cover: VertexSet,
    pub optimal: bool,
    pub nodes_explored: u64,
    pub lower_bound_at_root: usize,
}

struct Bnb<'a> {
    nbrs: &'a [VertexSet],
    limits: &'a SearchLimits,
    incumbent: VertexSet,
    nodes: u64,
    stopped: bool,
}

impl Bnb<'_> {
    fn charge_node(&mut self) -> bool {
        if let Some(budget) = self.limits.node_budget {
            if self.nodes >= budget {
                self.stopped = true;
                return false;
            }
        }
        self.nodes += 1;
        true
    }

    fn record(&mut self, cover: VertexSet) {
        if cover.card() < self.incumbent.card() {
            self.incumbent = cover;
            if let Some(t) = self.limits.stop_below {
                if self.incumbent.card() < t {
                    self.stopped = true;
                }
            }
        }
    }

    fn solve(&mut self, mut active: VertexSet, mut partial: VertexSet) {
        if self.stopped {
            return;
        }
        // isolated vertices never join a minimum cover
        let isolated: Vec<usize> = active
            .iter()
            .filter(|&v| self.nbrs[v].intersection_card(&active) == 0)
            .collect();
        for v in isolated {
            active.remove(v);
        }
        if active.is_empty() {
            self.record(partial);
            return;
        }
        let bound = if self.limits.use_clique_bound {
            clique_bound_masked(self.nbrs, &active)
        } else {
            0
        };
        if partial.card() + bound >= self.incumbent.card() {
            return;
        }
        let v = active
            .iter()
            .max_by_key(|&v| (self.nbrs[v].intersection_card(&active), std::cmp::Reverse(v)))
            .unwrap();
        // left: v joins the cover
        if !self.charge_node() {
            return;
        }
        {
            let mut a = active.clone();
            a.remove(v);
            let mut p = partial.clone();
            p.insert(v);
            self.solve(a, p);
        }
        if self.stopped {
            return;
        }
        // right: N(v) joins the cover
        if !self.charge_node() {
            return;
        }
        let taken = self.nbrs[v].intersection(&active);
        active.subtract(&taken);
        active.remove(v);
        partial.union_with(&taken);
        self.solve(active, partial);
    }
}

/// Depth-first branch & bound for minimum vertex cover. The incumbent
/// is seeded with both endpoints of a greedy maximal matching, so the
/// returned cover is valid even when the node budget is zero.
pub fn branch_and_bound_vc(g: &Graph, limits: &SearchLimits) -> SearchOutcome {
    let nbrs = neighbor_masks(g);
    let mut seed = VertexSet::empty(g.n());
    for (u, v) in greedy_maximal_matching(g) {
        seed.insert(u);
        seed.insert(v);
    }
    let root_bound = lower_bound(g);
    let mut bnb = Bnb {
        nbrs: &nbrs,
        limits,
        incumbent: seed,
        nodes: 0,
        stopped: false,
    };
    if let Some(t) = limits.stop_below {
        if bnb.incumbent.card() < t {
            bnb.stopped = true;
        }
    }
    if !bnb.stopped {
        bnb.solve(VertexSet::full(g.n()), VertexSet::empty(g.n()));
    }
    SearchOutcome {
        optimal: !bnb.stopped,
        cover: bnb.incumbent,
        nodes_explored: bnb.nodes,
        lower_bound_at_root: root_bound,
    }
}

/// Exact minimum vertex cover by subset enumeration in increasing
/// cardinality, lexicographically smallest among minima. Rejects
/// `n > 24`.
pub fn brute_force_min_vc(g: &Graph) -> VertexSet {
    let n = g.n();
    assert!(n <= 24, "brute_force_min_vc limited to n <= 24, got {n}");
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &u| acc | 1 << u))
        .collect();
    let is_cover = |mask: u32| (0..n).all(|v| mask >> v & 1 == 1 || adj[v] & !mask == 0);
    fn lex_combinations(
        n: usize,
        start: usize,
        remaining: usize,
        chosen: u32,
        test: &impl Fn(u32) -> bool,
    ) -> Option<u32> {
        if remaining == 0 {
            return test(chosen).then_some(chosen);
        }
        for v in start..=(n - remaining) {
            if let Some(m) = lex_combinations(n, v + 1, remaining - 1, chosen | 1 << v, test) {
                return Some(m);
            }
        }
        None
    }
    for k in 0..=n {
        if let Some(mask) = lex_combinations(n, 0, k, 0, &is_cover) {
            return VertexSet::from_members(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        }
    }
    unreachable!("V itself is always a cover")
}
