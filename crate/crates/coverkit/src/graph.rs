//! Undirected simple graphs, induced subgraphs, and instance file readers.
//!
//! Vertices are dense 0-based indices. Adjacency lists are kept sorted
//! ascending so every traversal order in the crate is deterministic.
//! Duplicate edges and self-loops in input files are normalized away and
//! counted rather than rejected (SNAP files contain both).

use std::collections::BTreeSet;
use std::io::{self, BufRead};

use thiserror::Error;

use crate::bitset::VertexSet;

/// Immutable undirected simple graph.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices, dropping self-loops and duplicate
    /// edges. Panics on out-of-range endpoints.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Graph {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v);
        }
        b.build()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// N(W): union of the neighborhoods of the members of `w`.
    pub fn neighborhood_of_set(&self, w: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in w.iter() {
            for &u in &self.adj[v] {
                out.insert(u);
            }
        }
        out
    }

    /// Vertices of degree zero.
    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_members(self.n, (0..self.n).filter(|&v| self.adj[v].is_empty()))
    }

    /// Canonical DIMACS text: one `p edge` header, then sorted `e` lines.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }
}

/// Incremental construction with duplicate/self-loop accounting.
pub struct GraphBuilder {
    n: usize,
    sets: Vec<BTreeSet<usize>>,
    dropped: usize,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            sets: vec![BTreeSet::new(); n],
            dropped: 0,
        }
    }

    /// Returns false if the edge was a self-loop or duplicate.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "edge endpoint out of range");
        if u == v || !self.sets[u].insert(v) {
            self.dropped += 1;
            return false;
        }
        self.sets[v].insert(u);
        true
    }

    pub fn dropped(&self) -> usize {
        self.dropped
    }

    pub fn build(self) -> Graph {
        let adj: Vec<Vec<usize>> = self
            .sets
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        let m = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
        Graph { n: self.n, m, adj }
    }
}

/// True iff every edge of `g` has an endpoint in `s`.
pub fn is_vertex_cover(g: &Graph, s: &VertexSet) -> bool {
    (0..g.n()).all(|u| s.contains(u) || g.neighbors(u).iter().all(|&v| s.contains(v)))
}

/// A compacted copy of the subgraph induced by a vertex subset, with
/// index maps in both directions.
#[derive(Clone, Debug)]
pub struct SubgraphView {
    selected: VertexSet,
    local: Graph,
    to_parent: Vec<usize>,
    to_local: Vec<usize>, // usize::MAX when not selected
}

/// Subgraph induced by `w`: exactly the edges of `g` with both endpoints
/// in `w`, over compact local ids `0..w.card()`.
pub fn induced_subgraph(g: &Graph, w: &VertexSet) -> SubgraphView {
    assert_eq!(w.universe(), g.n());
    let to_parent: Vec<usize> = w.iter().collect();
    let mut to_local = vec![usize::MAX; g.n()];
    for (l, &p) in to_parent.iter().enumerate() {
        to_local[p] = l;
    }
    let mut b = GraphBuilder::new(to_parent.len());
    for (l, &p) in to_parent.iter().enumerate() {
        for &q in g.neighbors(p) {
            if q > p && to_local[q] != usize::MAX {
                b.add_edge(l, to_local[q]);
            }
        }
    }
    SubgraphView {
        selected: w.clone(),
        local: b.build(),
        to_parent,
        to_local,
    }
}

impl SubgraphView {
    pub fn local(&self) -> &Graph {
        &self.local
    }

    pub fn selected(&self) -> &VertexSet {
        &self.selected
    }

    pub fn to_parent(&self, local: usize) -> usize {
        self.to_parent[local]
    }

    pub fn to_local(&self, parent: usize) -> Option<usize> {
        match self.to_local[parent] {
            usize::MAX => None,
            l => Some(l),
        }
    }

    /// Lifts a set of local ids back to parent ids.
    pub fn lift(&self, local_set: &VertexSet) -> VertexSet {
        debug_assert_eq!(local_set.universe(), self.local.n());
        VertexSet::from_members(
            self.selected.universe(),
            local_set.iter().map(|l| self.to_parent[l]),
        )
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: edge data before 'p edge' header")]
    MissingHeader { line: usize },
    #[error("no 'p edge' header found")]
    NoHeader,
    #[error("line {line}: duplicate 'p' header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: vertex index {index} out of range 1..={n}")]
    VertexOutOfRange { line: usize, index: usize, n: usize },
    #[error("line {line}: expected integer, got '{token}'")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: malformed line '{content}'")]
    Malformed { line: usize, content: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn parse_int(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse::<usize>().map_err(|_| ParseError::InvalidToken {
        line,
        token: tok.to_string(),
    })
}

/// Reads DIMACS `.col`/`.clq` text: `c` comments, one `p edge <n> <m>`
/// header, then `e <u> <v>` lines with 1-based endpoints.
///
/// Returns the graph together with the number of dropped (duplicate or
/// self-loop) edge lines.
pub fn parse_dimacs<R: BufRead>(reader: R) -> Result<(Graph, usize), ParseError> {
    let mut builder: Option<GraphBuilder> = None;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if builder.is_some() {
                    return Err(ParseError::DuplicateHeader { line: lineno });
                }
                if toks.len() != 4 {
                    return Err(ParseError::Malformed {
                        line: lineno,
                        content: trimmed.to_string(),
                    });
                }
                let n = parse_int(toks[2], lineno)?;
                let _m = parse_int(toks[3], lineno)?;
                builder = Some(GraphBuilder::new(n));
            }
            "e" => {
                let b = builder
                    .as_mut()
                    .ok_or(ParseError::MissingHeader { line: lineno })?;
                if toks.len() != 3 {
                    return Err(ParseError::Malformed {
                        line: lineno,
                        content: trimmed.to_string(),
                    });
                }
                let n = b.n;
                let u = parse_int(toks[1], lineno)?;
                let v = parse_int(toks[2], lineno)?;
                for &x in &[u, v] {
                    if x == 0 || x > n {
                        return Err(ParseError::VertexOutOfRange {
                            line: lineno,
                            index: x,
                            n,
                        });
                    }
                }
                b.add_edge(u - 1, v - 1);
            }
            _ => {
                return Err(ParseError::Malformed {
                    line: lineno,
                    content: trimmed.to_string(),
                })
            }
        }
    }
    match builder {
        Some(b) => {
            let dropped = b.dropped();
            Ok((b.build(), dropped))
        }
        None => Err(ParseError::NoHeader),
    }
}

/// Reads a SNAP-style whitespace edge list (`#` comments). External ids
/// are compacted to `0..n` in first-appearance order; the original ids
/// are returned for reporting.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<(Graph, Vec<u64>, usize), ParseError> {
    let mut ids: Vec<u64> = Vec::new();
    let mut id_map: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(ParseError::Malformed {
                line: lineno,
                content: trimmed.to_string(),
            });
        }
        let mut pair = [0usize; 2];
        for (i, tok) in toks.iter().enumerate() {
            let raw = tok.parse::<u64>().map_err(|_| ParseError::InvalidToken {
                line: lineno,
                token: tok.to_string(),
            })?;
            pair[i] = *id_map.entry(raw).or_insert_with(|| {
                ids.push(raw);
                ids.len() - 1
            });
        }
        edges.push((pair[0], pair[1]));
    }
    let mut b = GraphBuilder::new(ids.len());
    for (u, v) in edges {
        b.add_edge(u, v);
    }
    let dropped = b.dropped();
    Ok((b.build(), ids, dropped))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_path_graph() {
        let (g, dropped) = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3".as_bytes()).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(dropped, 0);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn dimacs_duplicate_edge_dropped() {
        let (g, dropped) = parse_dimacs("p edge 2 1\ne 1 2\ne 1 2".as_bytes()).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(dropped, 1);
    }

    #[test]
    fn dimacs_missing_header() {
        let err = parse_dimacs("e 1 2".as_bytes()).unwrap_err();
        assert!(matches!(err, ParseError::MissingHeader { line: 1 }));
    }

    #[test]
    fn dimacs_out_of_range_and_bad_token() {
        let err = parse_dimacs("p edge 2 1\ne 1 3".as_bytes()).unwrap_err();
        assert!(matches!(
            err,
            ParseError::VertexOutOfRange {
                line: 2,
                index: 3,
                n: 2
            }
        ));
        let err = parse_dimacs("p edge 2 1\ne 1 x".as_bytes()).unwrap_err();
        assert!(matches!(err, ParseError::InvalidToken { line: 2, .. }));
    }

    #[test]
    fn edge_list_dedup_and_loop_drop() {
        let (g, ids, dropped) = parse_edge_list("# c\n5 9\n9 5\n5 5".as_bytes()).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
        assert_eq!(ids, vec![5, 9]);
        assert_eq!(dropped, 2);
    }

    #[test]
    fn edge_list_triangle_and_empty() {
        let (g, _, _) = parse_edge_list("0 1\n1 2\n2 0".as_bytes()).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        let (g, ids, _) = parse_edge_list("".as_bytes()).unwrap();
        assert_eq!((g.n(), g.m()), (0, 0));
        assert!(ids.is_empty());
    }

    #[test]
    fn dimacs_round_trip() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]);
        let text = g.to_dimacs();
        let (g2, dropped) = parse_dimacs(text.as_bytes()).unwrap();
        assert_eq!(dropped, 0);
        assert_eq!(g.n(), g2.n());
        for v in 0..g.n() {
            assert_eq!(g.neighbors(v), g2.neighbors(v));
        }
    }

    #[test]
    fn induced_subgraph_cases() {
        let triangle = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        let view = induced_subgraph(&triangle, &VertexSet::from_members(3, [0, 1]));
        assert_eq!(view.local().m(), 1);

        // W = V gives an isomorphic copy
        let full = induced_subgraph(&triangle, &VertexSet::full(3));
        assert_eq!(full.local().m(), 3);

        // path a-b-c restricted to endpoints: two isolated vertices
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let ends = induced_subgraph(&path, &VertexSet::from_members(3, [0, 2]));
        assert_eq!(ends.local().n(), 2);
        assert_eq!(ends.local().m(), 0);
    }

    #[test]
    fn view_maps_compose_to_identity() {
        let g = Graph::from_edges(6, [(0, 2), (2, 4), (4, 5)]);
        let sel = VertexSet::from_members(6, [0, 2, 5]);
        let view = induced_subgraph(&g, &sel);
        for p in sel.iter() {
            let l = view.to_local(p).unwrap();
            assert_eq!(view.to_parent(l), p);
        }
        assert_eq!(view.to_local(1), None);
    }

    #[test]
    fn vertex_cover_checks() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]);
        assert!(is_vertex_cover(&path, &VertexSet::from_members(3, [1])));
        let triangle = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        assert!(!is_vertex_cover(&triangle, &VertexSet::from_members(3, [0])));
        let edgeless = Graph::from_edges(4, []);
        assert!(is_vertex_cover(&edgeless, &VertexSet::empty(4)));
    }

    #[test]
    fn neighborhood_union_bound() {
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)]);
        let w = VertexSet::from_members(5, [0, 1]);
        let nw = g.neighborhood_of_set(&w);
        let degree_sum: usize = w.iter().map(|v| g.degree(v)).sum();
        assert!(nw.card() <= degree_sum);
    }
}
