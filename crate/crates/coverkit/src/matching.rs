//! Bipartite matchings and alternating-path reachability.
//!
//! This is the machinery beneath the crown and rigid-crown kernels:
//! a greedy maximal matching, Hopcroft-Karp maximum matching (with a
//! warm-start entry point taking a prior matching), and the set of
//! vertices reachable from unmatched vertices by even-length
//! alternating paths.

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Bipartite graph with `left_n` + `right_n` vertices; adjacency is
/// stored per left vertex over right indices.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    pub left_n: usize,
    pub right_n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(left_n: usize, right_n: usize) -> Self {
        BipartiteGraph {
            left_n,
            right_n,
            edges: vec![Vec::new(); left_n],
        }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        debug_assert!(l < self.left_n && r < self.right_n);
        self.edges[l].push(r);
    }

    /// Per-right-vertex adjacency, derived on demand.
    pub fn reverse_edges(&self) -> Vec<Vec<usize>> {
        let mut rev = vec![Vec::new(); self.right_n];
        for (l, nbrs) in self.edges.iter().enumerate() {
            for &r in nbrs {
                rev[r].push(l);
            }
        }
        rev
    }
}

/// Partial pairing between the two sides of a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub pair_left: Vec<Option<usize>>,
    pub pair_right: Vec<Option<usize>>,
    size: usize,
}

impl Matching {
    pub fn empty(left_n: usize, right_n: usize) -> Self {
        Matching {
            pair_left: vec![None; left_n],
            pair_right: vec![None; right_n],
            size: 0,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn pair(&mut self, l: usize, r: usize) {
        debug_assert!(self.pair_left[l].is_none() && self.pair_right[r].is_none());
        self.pair_left[l] = Some(r);
        self.pair_right[r] = Some(l);
        self.size += 1;
    }

    /// Checks mutual inverseness and that every pair is an edge of `b`.
    pub fn is_valid_for(&self, b: &BipartiteGraph) -> bool {
        if self.pair_left.len() != b.left_n || self.pair_right.len() != b.right_n {
            return false;
        }
        let mut count = 0;
        for (l, pr) in self.pair_left.iter().enumerate() {
            if let Some(r) = pr {
                if self.pair_right[*r] != Some(l) || !b.edges[l].contains(r) {
                    return false;
                }
                count += 1;
            }
        }
        for (r, pl) in self.pair_right.iter().enumerate() {
            if let Some(l) = pl {
                if self.pair_left[*l] != Some(r) {
                    return false;
                }
            }
        }
        count == self.size
    }
}

/// Greedy maximal matching over the vertices of `g`, returned as a
/// disjoint edge set. Scan order: ascending vertex index, then
/// ascending neighbor index.
pub fn greedy_maximal_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mut matched = VertexSet::empty(g.n());
    let mut out = Vec::new();
    for u in 0..g.n() {
        if matched.contains(u) {
            continue;
        }
        for &v in g.neighbors(u) {
            if !matched.contains(v) {
                matched.insert(u);
                matched.insert(v);
                out.push((u, v));
                break;
            }
        }
    }
    out
}

/// Maximum-cardinality bipartite matching via Hopcroft-Karp.
/// Deterministic given fixed adjacency order.
pub fn hopcroft_karp(b: &BipartiteGraph) -> Matching {
    hopcroft_karp_from(b, Matching::empty(b.left_n, b.right_n))
}

/// Hopcroft-Karp warm-started from a prior matching of `b`. Augmenting
/// phases continue from `start`, so an almost-maximum prior matching
/// finishes in few phases.
pub fn hopcroft_karp_from(b: &BipartiteGraph, start: Matching) -> Matching {
    debug_assert!(start.is_valid_for(b));
    let mut m = start;
    const INF: usize = usize::MAX;
    let mut dist = vec![INF; b.left_n];
    loop {
        // BFS phase: layer left vertices by shortest alternating distance
        // from a free left vertex.
        let mut queue = VecDeque::new();
        for l in 0..b.left_n {
            if m.pair_left[l].is_none() {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = INF;
            }
        }
        let mut found_free_right = false;
        while let Some(l) = queue.pop_front() {
            for &r in &b.edges[l] {
                match m.pair_right[r] {
                    None => found_free_right = true,
                    Some(l2) => {
                        if dist[l2] == INF {
                            dist[l2] = dist[l] + 1;
                            queue.push_back(l2);
                        }
                    }
                }
            }
        }
        if !found_free_right {
            break;
        }
        // DFS phase: vertex-disjoint shortest augmenting paths.
        for l in 0..b.left_n {
            if m.pair_left[l].is_none() {
                augment(b, &mut m, &mut dist, l);
            }
        }
    }
    m
}

fn augment(b: &BipartiteGraph, m: &mut Matching, dist: &mut [usize], l: usize) -> bool {
    let d = std::mem::replace(&mut dist[l], usize::MAX);
    for &r in &b.edges[l] {
        match m.pair_right[r] {
            None => {
                m.pair_right[r] = Some(l);
                m.pair_left[l] = Some(r);
                m.size += 1;
                return true;
            }
            Some(l2) => {
                if dist[l2] == d + 1 && augment(b, m, dist, l2) {
                    m.pair_right[r] = Some(l);
                    m.pair_left[l] = Some(r);
                    return true;
                }
            }
        }
    }
    false
}

/// Encodes a vertex of the doubled universe: left vertices are
/// `0..left_n`, right vertices are `left_n..left_n+right_n`.
pub fn right_id(b: &BipartiteGraph, r: usize) -> usize {
    b.left_n + r
}

/// All vertices of `b` reachable from some `m`-unmatched vertex by an
/// alternating path of even length (length 0 allowed: unmatched
/// vertices are themselves in the result). Alternation starts with a
/// non-matching edge. Result universe is `left_n + right_n` with right
/// vertices offset by `left_n`.
pub fn even_alternating_reachable(b: &BipartiteGraph, m: &Matching) -> VertexSet {
    debug_assert!(m.is_valid_for(b));
    let total = b.left_n + b.right_n;
    let rev = b.reverse_edges();
    // visited[parity][vertex]: parity 0 = even distance (in D), 1 = odd.
    let mut visited = [VertexSet::empty(total), VertexSet::empty(total)];
    let mut queue: VecDeque<(usize, u8)> = VecDeque::new();
    for l in 0..b.left_n {
        if m.pair_left[l].is_none() {
            visited[0].insert(l);
            queue.push_back((l, 0));
        }
    }
    for r in 0..b.right_n {
        if m.pair_right[r].is_none() {
            visited[0].insert(b.left_n + r);
            queue.push_back((b.left_n + r, 0));
        }
    }
    while let Some((x, parity)) = queue.pop_front() {
        let is_left = x < b.left_n;
        if parity == 0 {
            // leave along non-matching edges
            if is_left {
                for &r in &b.edges[x] {
                    if m.pair_left[x] != Some(r) && visited[1].insert(b.left_n + r) {
                        queue.push_back((b.left_n + r, 1));
                    }
                }
            } else {
                let r = x - b.left_n;
                for &l in &rev[r] {
                    if m.pair_right[r] != Some(l) && visited[1].insert(l) {
                        queue.push_back((l, 1));
                    }
                }
            }
        } else {
            // leave along the matching edge
            let partner = if is_left {
                m.pair_left[x].map(|r| b.left_n + r)
            } else {
                m.pair_right[x - b.left_n]
            };
            if let Some(p) = partner {
                if visited[0].insert(p) {
                    queue.push_back((p, 0));
                }
            }
        }
    }
    visited[0].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn greedy_matching_path() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let m = greedy_maximal_matching(&path);
        assert_eq!(m, vec![(0, 1)]);
    }

    #[test]
    fn greedy_matching_edgeless_and_cycle() {
        let edgeless = Graph::from_edges(4, []);
        assert!(greedy_maximal_matching(&edgeless).is_empty());
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(greedy_maximal_matching(&c4), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn greedy_matching_is_maximal() {
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (1, 3), (2, 4), (4, 5)]);
        let m = greedy_maximal_matching(&g);
        let mut matched = VertexSet::empty(6);
        for &(u, v) in &m {
            assert!(g.has_edge(u, v));
            assert!(matched.insert(u));
            assert!(matched.insert(v));
        }
        for (u, v) in g.edges() {
            assert!(matched.contains(u) || matched.contains(v));
        }
    }

    #[test]
    fn hopcroft_karp_k22() {
        let mut b = BipartiteGraph::new(2, 2);
        for l in 0..2 {
            for r in 0..2 {
                b.add_edge(l, r);
            }
        }
        assert_eq!(hopcroft_karp(&b).size(), 2);
    }

    #[test]
    fn hopcroft_karp_shared_right_vertex() {
        let mut b = BipartiteGraph::new(3, 1);
        for l in 0..3 {
            b.add_edge(l, 0);
        }
        assert_eq!(hopcroft_karp(&b).size(), 1);
    }

    #[test]
    fn hopcroft_karp_no_edges() {
        let b = BipartiteGraph::new(3, 3);
        assert_eq!(hopcroft_karp(&b).size(), 0);
    }

    #[test]
    fn warm_start_reaches_maximum() {
        let mut b = BipartiteGraph::new(3, 3);
        b.add_edge(0, 0);
        b.add_edge(0, 1);
        b.add_edge(1, 0);
        b.add_edge(2, 1);
        b.add_edge(2, 2);
        let mut prior = Matching::empty(3, 3);
        prior.pair(0, 0); // suboptimal greedy start
        let m = hopcroft_karp_from(&b, prior);
        assert_eq!(m.size(), 3);
        assert!(m.is_valid_for(&b));
    }

    #[test]
    fn even_reachable_doubled_path() {
        // doubled graph of path a-b-c: left/right 3+3,
        // edges a_l-b_r, b_l-a_r, b_l-c_r, c_l-b_r
        let mut b = BipartiteGraph::new(3, 3);
        b.add_edge(0, 1);
        b.add_edge(1, 0);
        b.add_edge(1, 2);
        b.add_edge(2, 1);
        let mut m = Matching::empty(3, 3);
        m.pair(0, 1); // a_l - b_r
        m.pair(1, 0); // b_l - a_r
        let d = even_alternating_reachable(&b, &m);
        // expected: {c_l, c_r, a_l, a_r} = {2, 5, 0, 3}
        assert_eq!(d, VertexSet::from_members(6, [0, 2, 3, 5]));
    }

    #[test]
    fn even_reachable_perfect_matching_is_empty() {
        let mut b = BipartiteGraph::new(2, 2);
        b.add_edge(0, 0);
        b.add_edge(1, 1);
        b.add_edge(0, 1);
        let m = hopcroft_karp(&b);
        assert_eq!(m.size(), 2);
        assert!(even_alternating_reachable(&b, &m).is_empty());
    }

    #[test]
    fn even_reachable_isolated_unmatched_vertex() {
        let mut b = BipartiteGraph::new(2, 1);
        b.add_edge(0, 0);
        let mut m = Matching::empty(2, 1);
        m.pair(0, 0);
        let d = even_alternating_reachable(&b, &m);
        assert_eq!(d, VertexSet::from_members(3, [1]));
    }
}
