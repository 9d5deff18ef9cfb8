//! Vertex cover kernels: the Buss rule, greedy crown decompositions,
//! and rigid crowns computed on the doubled bipartite graph.
//!
//! All three kernels classify vertices into forced / restricted /
//! indifferent sets plus a residual subgraph. The Buss kernel never
//! restricts anything; the rigid-crown kernel preserves every
//! minimum-size cover, so its restricted set can be pruned whenever the
//! cover-size lower bound is tight.

use crate::bitset::VertexSet;
use crate::graph::{induced_subgraph, Graph, SubgraphView};
use crate::matching::{
    even_alternating_reachable, greedy_maximal_matching, hopcroft_karp, BipartiteGraph,
};

/// Partition of a graph's vertices into residual / forced / restricted /
/// indifferent sets. `forced` is contained in every solution within the
/// kernel's loss tolerance, `restricted` intersects none of them, and
/// `indifferent` vertices can be added or removed freely.
#[derive(Clone, Debug)]
pub struct LosslessPartition {
    pub residual: SubgraphView,
    pub forced: VertexSet,
    pub restricted: VertexSet,
    pub indifferent: VertexSet,
    /// Set when the instance cannot have a cover within the given budget.
    pub infeasible: bool,
    /// Budget left after forced removals (Buss only).
    pub budget_left: Option<usize>,
}

/// Buss kernelization with budget `k`, iterated to fixpoint: any vertex
/// with degree above the remaining budget is forced (budget shrinks by
/// one), isolated vertices become indifferent. Vertices are examined in
/// descending degree order, ties by lowest index. The instance is
/// flagged infeasible when the residual keeps more than `k'^2` edges.
pub fn buss_kernel(g: &Graph, k: usize) -> LosslessPartition {
    let n = g.n();
    let mut active = VertexSet::full(n);
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut forced = VertexSet::empty(n);
    let mut indifferent = VertexSet::empty(n);
    let mut budget = k;

    let remove = |v: usize, active: &mut VertexSet, deg: &mut Vec<usize>| {
        active.remove(v);
        for &u in g.neighbors(v) {
            if active.contains(u) {
                deg[u] -= 1;
            }
        }
        deg[v] = 0;
    };

    loop {
        // sweep isolated vertices first
        let isolated: Vec<usize> = active.iter().filter(|&v| deg[v] == 0).collect();
        for v in isolated {
            active.remove(v);
            indifferent.insert(v);
        }
        if budget == 0 {
            break;
        }
        let candidate = active
            .iter()
            .filter(|&v| deg[v] > budget)
            .max_by_key(|&v| (deg[v], std::cmp::Reverse(v)));
        match candidate {
            Some(v) => {
                forced.insert(v);
                budget -= 1;
                remove(v, &mut active, &mut deg);
            }
            None => break,
        }
    }
    let residual = induced_subgraph(g, &active);
    let infeasible = residual.local().m() > budget * budget;
    LosslessPartition {
        residual,
        forced,
        restricted: VertexSet::empty(n),
        indifferent,
        infeasible,
        budget_left: Some(budget),
    }
}

/// Crown decomposition `(rest, head, independent)` with a matching that
/// saturates the head into the independent set.
#[derive(Clone, Debug)]
pub struct CrownDecomposition {
    pub rest: VertexSet,
    pub head: VertexSet,
    pub independent: VertexSet,
    /// Pairs `(head vertex, independent vertex)`, one per head vertex.
    pub matching: Vec<(usize, usize)>,
}

impl CrownDecomposition {
    /// Checks the three crown conditions against `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.n();
        // partition of V
        if self.rest.card() + self.head.card() + self.independent.card() != n
            || !self.rest.is_disjoint_from(&self.head)
            || !self.rest.is_disjoint_from(&self.independent)
            || !self.head.is_disjoint_from(&self.independent)
        {
            return false;
        }
        // (i) independent set, (ii) no edge between independent and rest
        for v in self.independent.iter() {
            for &u in g.neighbors(v) {
                if self.independent.contains(u) || self.rest.contains(u) {
                    return false;
                }
            }
        }
        // (iii) matching of size |head| from head into independent
        if self.matching.len() != self.head.card() {
            return false;
        }
        let mut seen_w = VertexSet::empty(n);
        let mut seen_i = VertexSet::empty(n);
        for &(w, i) in &self.matching {
            if !self.head.contains(w) || !self.independent.contains(i) || !g.has_edge(w, i) {
                return false;
            }
            if !seen_w.insert(w) || !seen_i.insert(i) {
                return false;
            }
        }
        true
    }
}

/// Result of one greedy crown-finding pass.
#[derive(Clone, Debug)]
pub enum CrownOutcome {
    /// A maximal matching alone exceeds the budget; no cover of size
    /// at most `k` exists.
    Infeasible,
    /// No crown found; a feasible instance at this point has at most
    /// `3k` vertices.
    Exhausted,
    Found(CrownDecomposition),
}

/// Finds one crown greedily from a maximal matching, following the
/// classic construction: unmatched vertices form the candidate
/// independent side, a maximum matching against their neighborhood
/// exposes the crown seed, which is grown to a fixpoint.
///
/// Callers must strip isolated vertices first.
pub fn crown_kernel(g: &Graph, k: usize) -> CrownOutcome {
    debug_assert!((0..g.n()).all(|v| g.degree(v) > 0), "strip isolated vertices first");
    let n = g.n();
    let m1 = greedy_maximal_matching(g);
    if m1.len() > k {
        return CrownOutcome::Infeasible;
    }
    let mut matched = VertexSet::empty(n);
    for &(u, v) in &m1 {
        matched.insert(u);
        matched.insert(v);
    }
    let outside: Vec<usize> = (0..n).filter(|&v| !matched.contains(v)).collect();
    if outside.is_empty() {
        return CrownOutcome::Exhausted;
    }
    let frontier = g.neighborhood_of_set(&VertexSet::from_members(n, outside.iter().copied()));
    let frontier_list: Vec<usize> = frontier.iter().collect();
    let mut frontier_idx = vec![usize::MAX; n];
    for (i, &v) in frontier_list.iter().enumerate() {
        frontier_idx[v] = i;
    }
    let mut bip = BipartiteGraph::new(outside.len(), frontier_list.len());
    for (li, &v) in outside.iter().enumerate() {
        for &u in g.neighbors(v) {
            bip.add_edge(li, frontier_idx[u]);
        }
    }
    let m2 = hopcroft_karp(&bip);
    let mut in_crown = vec![false; outside.len()];
    let mut queue: Vec<usize> = (0..outside.len())
        .filter(|&li| m2.pair_left[li].is_none())
        .collect();
    if queue.is_empty() {
        return CrownOutcome::Exhausted;
    }
    for &li in &queue {
        in_crown[li] = true;
    }
    let mut head_right = vec![false; frontier_list.len()];
    // grow: the matched partners of the crown's neighborhood join the crown
    while let Some(li) = queue.pop() {
        for &ri in &bip.edges[li] {
            if !head_right[ri] {
                head_right[ri] = true;
                if let Some(partner) = m2.pair_right[ri] {
                    if !in_crown[partner] {
                        in_crown[partner] = true;
                        queue.push(partner);
                    }
                }
            }
        }
    }
    let independent = VertexSet::from_members(
        n,
        outside
            .iter()
            .enumerate()
            .filter(|(li, _)| in_crown[*li])
            .map(|(_, &v)| v),
    );
    let head = VertexSet::from_members(
        n,
        frontier_list
            .iter()
            .enumerate()
            .filter(|(ri, _)| head_right[*ri])
            .map(|(_, &v)| v),
    );
    let mut rest = VertexSet::full(n);
    rest.subtract(&independent);
    rest.subtract(&head);
    let mut matching = Vec::new();
    for (ri, &w) in frontier_list.iter().enumerate() {
        if head_right[ri] {
            let partner = m2.pair_right[ri].expect("head vertex must be matched");
            matching.push((w, outside[partner]));
        }
    }
    CrownOutcome::Found(CrownDecomposition {
        rest,
        head,
        independent,
        matching,
    })
}

/// Result of exhaustively removing crowns from a graph.
#[derive(Clone, Debug)]
pub struct CrownExhaust {
    /// Union of all crown heads: these join the cover.
    pub taken: VertexSet,
    /// Union of all crown independent sets: discarded from the cover.
    pub discarded: VertexSet,
    /// Vertices that became isolated along the way.
    pub isolated: VertexSet,
    /// What is left after all crowns are removed.
    pub residual: SubgraphView,
    pub infeasible: bool,
}

/// Applies `crown_kernel` until no crown is returned, stripping isolated
/// vertices between rounds. The budget shrinks by the size of each head
/// taken into the cover.
pub fn exhaust_crowns(g: &Graph, k: usize) -> CrownExhaust {
    let n = g.n();
    let mut taken = VertexSet::empty(n);
    let mut discarded = VertexSet::empty(n);
    let mut isolated = VertexSet::empty(n);
    let mut active = VertexSet::full(n);
    let mut infeasible = false;
    loop {
        let view = induced_subgraph(g, &active);
        let iso = view.lift(&view.local().isolated_vertices());
        if !iso.is_empty() {
            isolated.union_with(&iso);
            active.subtract(&iso);
            continue;
        }
        let budget = k - taken.card().min(k);
        match crown_kernel(view.local(), budget) {
            CrownOutcome::Infeasible => {
                infeasible = true;
                break;
            }
            CrownOutcome::Exhausted => break,
            CrownOutcome::Found(crown) => {
                let head = view.lift(&crown.head);
                let ind = view.lift(&crown.independent);
                taken.union_with(&head);
                discarded.union_with(&ind);
                active.subtract(&head);
                active.subtract(&ind);
            }
        }
    }
    CrownExhaust {
        taken,
        discarded,
        isolated,
        residual: induced_subgraph(g, &active),
        infeasible,
    }
}

/// Doubled bipartite graph: vertices `v_l`, `v_r` for every `v`, edges
/// `(v_l, u_r)` and `(u_l, v_r)` for every edge `(v, u)`.
pub fn build_double_graph(g: &Graph) -> BipartiteGraph {
    let n = g.n();
    let mut b = BipartiteGraph::new(n, n);
    for v in 0..n {
        for &u in g.neighbors(v) {
            b.add_edge(v, u);
        }
    }
    b
}

/// Rigid-crown kernelization (0-loss-less, budget independent).
///
/// A vertex joins the restricted set exactly when both of its copies in
/// the doubled graph are reachable from unmatched vertices by even
/// alternating paths; its neighborhood is then forced. The construction
/// is repeated on the residual until no rigid crown remains, so applying
/// this function to its own residual yields empty forced and restricted
/// sets.
pub fn rigid_crown_kernel(g: &Graph) -> LosslessPartition {
    let n = g.n();
    let mut forced = VertexSet::empty(n);
    let mut restricted = VertexSet::empty(n);
    let mut active = VertexSet::full(n);
    loop {
        let view = induced_subgraph(g, &active);
        let local = view.local();
        let nl = local.n();
        if nl == 0 {
            break;
        }
        let b = build_double_graph(local);
        let m = hopcroft_karp(&b);
        let d = even_alternating_reachable(&b, &m);
        let crown_ind = VertexSet::from_members(
            nl,
            (0..nl).filter(|&v| d.contains(v) && d.contains(nl + v)),
        );
        if crown_ind.is_empty() {
            break;
        }
        let crown_head = local.neighborhood_of_set(&crown_ind);
        restricted.union_with(&view.lift(&crown_ind));
        forced.union_with(&view.lift(&crown_head));
        active.subtract(&view.lift(&crown_ind));
        active.subtract(&view.lift(&crown_head));
    }
    LosslessPartition {
        residual: induced_subgraph(g, &active),
        forced,
        restricted,
        indifferent: VertexSet::empty(n),
        infeasible: false,
        budget_left: None,
    }
}
