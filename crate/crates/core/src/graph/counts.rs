use super::Graph;
use crate::error::{Error, Result};
use serde::Serialize;

/// Counts of the three-edge subgraph shapes, plus two-edge paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ThreeEdgeCounts {
    /// triangles
    pub t: u64,
    /// claws K_{1,3}
    pub s: u64,
    /// paths P_4
    pub r: u64,
    /// a two-edge path plus a disjoint edge
    pub q: u64,
    /// three pairwise disjoint edges
    pub d3: u64,
    /// two-edge paths
    pub p: u64,
}

impl ThreeEdgeCounts {
    pub fn total_triples(&self) -> u64 {
        self.t + self.s + self.r + self.q + self.d3
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Classifies every unordered edge triple by the shape of its union.
pub fn three_edge_counts(g: &Graph) -> ThreeEdgeCounts {
    let edges = g.edges();
    let mut c = ThreeEdgeCounts {
        p: g.two_paths(),
        ..Default::default()
    };
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            for d in b + 1..edges.len() {
                let tri = [edges[a], edges[b], edges[d]];
                let mask = tri.iter().fold(0u64, |m, e| m | 1 << e.u | 1 << e.v);
                match mask.count_ones() {
                    3 => c.t += 1,
                    4 => {
                        let hub = [tri[0].u, tri[0].v]
                            .iter()
                            .any(|&x| tri[1].contains(x) && tri[2].contains(x));
                        if hub {
                            c.s += 1;
                        } else {
                            c.r += 1;
                        }
                    }
                    5 => c.q += 1,
                    6 => c.d3 += 1,
                    k => unreachable!("three edges cover {k} vertices"),
                }
            }
        }
    }
    c
}

/// Degree-based counts valid for trees only.
pub fn tree_closed_counts(t: &Graph) -> Result<ThreeEdgeCounts> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.n() as i64;
    let deg: Vec<i64> = t.degrees().into_iter().map(|d| d as i64).collect();
    let s: i64 = deg.iter().map(|&d| binomial(d as u64, 3) as i64).sum();
    let r: i64 = t
        .edges()
        .iter()
        .map(|e| (deg[e.u] - 1) * (deg[e.v] - 1))
        .sum();
    let mut q = 0i64;
    for v in 0..t.n() {
        let nb: Vec<usize> = t.neighbors(v).collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                q += (n - 1) - deg[nb[i]] - deg[v] - deg[nb[j]] + 2;
            }
        }
    }
    let d3 = binomial((n - 1) as u64, 3) as i64 - s - r - q;
    Ok(ThreeEdgeCounts {
        t: 0,
        s: s as u64,
        r: r as u64,
        q: q as u64,
        d3: u64::try_from(d3).expect("nonnegative three-matching count"),
        p: t.two_paths(),
    })
}
