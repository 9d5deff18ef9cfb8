//! Shared brute-force oracles for the integration tests. Everything
//! here is deliberately naive and independent of the library's search
//! and matching code paths.

#![allow(dead_code)]

use coverkit::bitset::VertexSet;
use coverkit::graph::Graph;
use coverkit::matching::BipartiteGraph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Erdős–Rényi-style graph: each pair is an edge with probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Sparse graph with exactly `m` distinct edges (requires enough room).
pub fn random_sparse_graph(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut chosen = std::collections::BTreeSet::new();
    while chosen.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            chosen.insert((u.min(v), u.max(v)));
        }
    }
    Graph::from_edges(n, chosen)
}

pub fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &u| acc | 1 << u))
        .collect()
}

pub fn is_cover_mask(adj: &[u32], mask: u32) -> bool {
    adj.iter()
        .enumerate()
        .all(|(v, &nb)| mask >> v & 1 == 1 || nb & !mask == 0)
}

pub fn mask_of(s: &VertexSet) -> u32 {
    s.iter().fold(0u32, |acc, v| acc | 1 << v)
}

pub fn set_of(universe: usize, mask: u32) -> VertexSet {
    VertexSet::from_members(universe, (0..universe).filter(|&v| mask >> v & 1 == 1))
}

/// All vertex covers of `g` as bitmasks. `n` must be at most 16.
pub fn all_cover_masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 16);
    let adj = adjacency_masks(g);
    (0u32..1 << g.n())
        .filter(|&m| is_cover_mask(&adj, m))
        .collect()
}

pub fn min_vc_size(g: &Graph) -> usize {
    all_cover_masks(g)
        .iter()
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn minimum_cover_masks(g: &Graph) -> Vec<u32> {
    let covers = all_cover_masks(g);
    let best = covers.iter().map(|m| m.count_ones()).min().unwrap();
    covers
        .into_iter()
        .filter(|m| m.count_ones() == best)
        .collect()
}

/// Smallest cover of `g` whose per-part counts stay within `b` of each
/// other, or `None` when no such cover exists.
pub fn min_balanced_cover(g: &Graph, parts: &[VertexSet], b: usize) -> Option<usize> {
    let part_masks: Vec<u32> = parts.iter().map(mask_of).collect();
    all_cover_masks(g)
        .into_iter()
        .filter(|&m| {
            let counts: Vec<u32> = part_masks.iter().map(|&p| (p & m).count_ones()).collect();
            counts.iter().max().unwrap() - counts.iter().min().unwrap() <= b as u32
        })
        .map(|m| m.count_ones() as usize)
        .min()
}

/// Maximum bipartite matching size by repeated augmenting-path search
/// (Kuhn's algorithm), independent of the Hopcroft-Karp implementation.
pub fn kuhn_max_matching(b: &BipartiteGraph) -> usize {
    fn try_augment(
        b: &BipartiteGraph,
        l: usize,
        seen: &mut [bool],
        pair_right: &mut [Option<usize>],
    ) -> bool {
        for &r in &b.edges[l] {
            if !seen[r] {
                seen[r] = true;
                if pair_right[r].is_none()
                    || try_augment(b, pair_right[r].unwrap(), seen, pair_right)
                {
                    pair_right[r] = Some(l);
                    return true;
                }
            }
        }
        false
    }
    let mut pair_right = vec![None; b.right_n];
    let mut size = 0;
    for l in 0..b.left_n {
        let mut seen = vec![false; b.right_n];
        if try_augment(b, l, &mut seen, &mut pair_right) {
            size += 1;
        }
    }
    size
}

pub fn random_bipartite(left: usize, right: usize, p: f64, rng: &mut ChaCha8Rng) -> BipartiteGraph {
    let mut b = BipartiteGraph::new(left, right);
    for l in 0..left {
        for r in 0..right {
            if rng.gen_bool(p) {
                b.add_edge(l, r);
            }
        }
    }
    b
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
