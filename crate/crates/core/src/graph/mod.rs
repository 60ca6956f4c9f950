//! Simple undirected graphs on `{0..n-1}` with bitset adjacency.

mod canon;
mod counts;
mod graph6;

pub use canon::{canonical_form, is_isomorphic, tree_code, CanonicalForm};
pub use counts::{three_edge_counts, tree_closed_counts, ThreeEdgeCounts};
pub use graph6::{graph6_decode, graph6_encode};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use std::fmt;

/// Largest vertex count representable (single-byte graph6 size prefix).
pub const MAX_VERTICES: usize = 62;

/// An undirected edge `{u, v}` stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the edge `{a, b}` in normalized order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "self-loop {a}-{a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// True when the two edges share exactly one endpoint.
    pub fn is_adjacent_to(&self, other: &Edge) -> bool {
        self != other
            && (self.contains(other.u) || self.contains(other.v))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Immutable simple graph. Row `i` of `adj` is the neighbor bitset of `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "n = {n} exceeds {MAX_VERTICES}");
        Graph {
            n,
            adj: vec![0; n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from vertex pairs. Duplicate pairs collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize { n, max: MAX_VERTICES });
        }
        let mut adj = vec![0u64; n];
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, n });
                }
            }
            if a == b {
                return Err(Error::Malformed(format!("self-loop at vertex {a}")));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Self::from_adjacency(n, adj))
    }

    pub(crate) fn from_adjacency(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        let mut edges = Vec::new();
        for u in 0..n {
            let mut row = adj[u] >> (u + 1);
            let mut v = u + 1;
            while row != 0 {
                let skip = row.trailing_zeros() as usize;
                v += skip;
                edges.push(Edge { u, v });
                row >>= skip + 1;
                v += 1;
            }
        }
        Graph { n, adj, edges }
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            .expect("valid complete graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically by `(u, v)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut mask = self.adj[v];
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let w = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                Some(w)
            }
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            Some(&d0) if d.iter().all(|&x| x == d0) => Some(d0),
            _ => None,
        }
    }

    /// Number of unordered pairs of edges sharing a vertex, `sum_v C(d_v, 2)`.
    pub fn two_paths(&self) -> u64 {
        (0..self.n)
            .map(|v| {
                let d = self.degree(v) as u64;
                d * d.saturating_sub(1) / 2
            })
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == full
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// Acyclic check via edge count per component.
    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for e in &self.edges {
            let (a, b) = (perm[e.u], perm[e.v]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Graph::from_adjacency(self.n, adj)
    }

    /// 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.n, self.n);
        for e in &self.edges {
            a.set(e.u, e.v, 1);
            a.set(e.v, e.u, 1);
        }
        a
    }
}

/// Laplacian `L = D - A`.
pub fn laplacian(g: &Graph) -> IntMatrix {
    let n = g.n();
    let mut l = IntMatrix::zeros(n, n);
    for v in 0..n {
        l.set(v, v, g.degree(v) as i64);
    }
    for e in g.edges() {
        l.set(e.u, e.v, -1);
        l.set(e.v, e.u, -1);
    }
    l
}

/// Line graph; vertex `k` is `g.edges()[k]`.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut pairs = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if edges[i].is_adjacent_to(&edges[j]) {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edges(edges.len(), pairs).expect("line graph of at most 62 edges")
}
