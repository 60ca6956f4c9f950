//! Coefficients of the weighted trace polynomial `tr((sum y_e tau_e)^r)` of a
//! tree, and reconstruction of the tree from its pair coefficients.
//!
//! The coefficient of `y_e y_f` is `2 chi(3-cycle)` for adjacent edges and
//! `2 chi(2,2)` for disjoint ones. The two agree exactly at `n = 7`; there the
//! coefficient of `y_e^2 y_f^2` (`4d + 2 chi(3-cycle)` vs `6d`) is used instead.

use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, line_graph, tree_code, Edge, Graph};
use crate::moments::{multiset_word_sum, COEFFICIENT_BUDGET};
use crate::perm::closed_character_values;
use num_bigint::BigInt;
use serde::Serialize;
use std::collections::BTreeMap;

/// Exponents of a monomial in the edge variables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonomialSpec {
    pub exponents: BTreeMap<Edge, usize>,
}

impl MonomialSpec {
    pub fn new(pairs: impl IntoIterator<Item = (Edge, usize)>) -> Self {
        let mut exponents = BTreeMap::new();
        for (e, k) in pairs {
            if k > 0 {
                *exponents.entry(e).or_insert(0) += k;
            }
        }
        MonomialSpec { exponents }
    }

    pub fn degree(&self) -> usize {
        self.exponents.values().sum()
    }
}

fn require_tree(t: &Graph) -> Result<()> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() <= 3 {
        return Err(Error::RepresentationAbsent { n: t.n() });
    }
    Ok(())
}

pub fn monomial_coefficient(t: &Graph, spec: &MonomialSpec) -> Result<BigInt> {
    monomial_coefficient_with_budget(t, spec, COEFFICIENT_BUDGET)
}

pub fn monomial_coefficient_with_budget(
    t: &Graph,
    spec: &MonomialSpec,
    budget: u128,
) -> Result<BigInt> {
    require_tree(t)?;
    if spec.degree() == 0 {
        return Err(Error::Malformed("monomial of degree 0".into()));
    }
    for e in spec.exponents.keys() {
        if !t.has_edge(e.u, e.v) {
            return Err(Error::Malformed(format!("{e} is not an edge of the tree")));
        }
    }
    let edges: Vec<Edge> = spec.exponents.keys().copied().collect();
    let counts: Vec<usize> = spec.exponents.values().copied().collect();
    multiset_word_sum(&edges, &counts, t.n(), budget).map(BigInt::from)
}

/// Tree edges as labels with an adjacency relation between labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledLineGraph {
    pub labels: Vec<Edge>,
    /// vertex `i` stands for `labels[i]`
    pub adjacency: Graph,
}

impl LabeledLineGraph {
    pub fn of_graph(g: &Graph) -> Self {
        LabeledLineGraph {
            labels: g.edges().to_vec(),
            adjacency: line_graph(g),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairClass {
    Adjacent,
    Disjoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientRoute {
    /// coefficient of `y_e y_f` in degree 2
    Quadratic,
    /// coefficient of `y_e^2 y_f^2` in degree 4
    Quartic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCoefficient {
    pub e: Edge,
    pub f: Edge,
    pub coeff: BigInt,
    pub class: PairClass,
}

#[derive(Debug, Clone)]
pub struct PairTable {
    pub n: usize,
    pub route: CoefficientRoute,
    pub pairs: Vec<PairCoefficient>,
    pub line_graph: LabeledLineGraph,
}

pub fn route_for(n: usize) -> CoefficientRoute {
    if n == 7 {
        CoefficientRoute::Quartic
    } else {
        CoefficientRoute::Quadratic
    }
}

/// Reference coefficient values `(adjacent, disjoint)` for a route.
pub fn reference_values(n: usize, route: CoefficientRoute) -> Result<(i64, i64)> {
    let v = closed_character_values(n)?;
    Ok(match route {
        CoefficientRoute::Quadratic => (2 * v.alpha, 2 * v.beta),
        CoefficientRoute::Quartic => (4 * v.dim + 2 * v.alpha, 6 * v.dim),
    })
}

/// Classifies every edge pair of the tree from computed coefficients alone.
pub fn pair_adjacency_from_coefficients(t: &Graph) -> Result<PairTable> {
    require_tree(t)?;
    let n = t.n();
    let route = route_for(n);
    let (adjacent, disjoint) = reference_values(n, route)?;
    let power = match route {
        CoefficientRoute::Quadratic => 1,
        CoefficientRoute::Quartic => 2,
    };
    let labels = t.edges().to_vec();
    let mut pairs = Vec::new();
    let mut links = Vec::new();
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            let spec = MonomialSpec::new([(labels[i], power), (labels[j], power)]);
            let coeff = monomial_coefficient(t, &spec)?;
            let class = if coeff == BigInt::from(adjacent) {
                PairClass::Adjacent
            } else if coeff == BigInt::from(disjoint) {
                PairClass::Disjoint
            } else {
                return Err(Error::Inconsistent(format!(
                    "coefficient {coeff} for ({}, {}) matches neither {adjacent} nor {disjoint}",
                    labels[i], labels[j]
                )));
            };
            if class == PairClass::Adjacent {
                links.push((i, j));
            }
            pairs.push(PairCoefficient {
                e: labels[i],
                f: labels[j],
                coeff,
                class,
            });
        }
    }
    let adjacency = Graph::from_edges(labels.len(), links)?;
    Ok(PairTable {
        n,
        route,
        pairs,
        line_graph: LabeledLineGraph { labels, adjacency },
    })
}

/// A tree together with the edge assigned to each line-graph label.
#[derive(Debug, Clone)]
pub struct Reconstruction {
    pub tree: Graph,
    pub label_edges: Vec<Edge>,
}

fn maximal_cliques(g: &Graph) -> Vec<u64> {
    fn bron_kerbosch(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = (p | x).trailing_zeros() as usize;
        let mut candidates = p & !g.neighbors_mask(pivot);
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let nb = g.neighbors_mask(v);
            bron_kerbosch(g, r | 1 << v, p & nb, x & nb, out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut out = Vec::new();
    bron_kerbosch(g, 0, all, 0, &mut out);
    out.sort_unstable();
    out
}

/// Rebuilds a tree on `n` vertices from a labeled line graph.
///
/// In the line graph of a tree the maximal cliques with at least two labels
/// are exactly the stars of the internal vertices. A label in two such
/// cliques joins two internal vertices; a label in one hangs a new leaf.
pub fn tree_from_labeled_line_graph(lg: &LabeledLineGraph, n: usize) -> Result<Reconstruction> {
    let k = lg.labels.len();
    if lg.adjacency.n() != k {
        return Err(Error::Malformed("label count and adjacency size differ".into()));
    }
    if k + 1 != n {
        return Err(Error::Malformed(format!(
            "{k} labels cannot be the edges of a tree on {n} vertices"
        )));
    }
    let cliques: Vec<u64> = maximal_cliques(&lg.adjacency)
        .into_iter()
        .filter(|c| c.count_ones() >= 2)
        .collect();
    let mut next = cliques.len();
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let mut label_edges = Vec::with_capacity(k);
    for label in 0..k {
        let owners: Vec<usize> = (0..cliques.len())
            .filter(|&c| cliques[c] >> label & 1 == 1)
            .collect();
        let (a, b) = match owners[..] {
            [a, b] => (a, b),
            [a] => (a, fresh()),
            [] => (fresh(), fresh()),
            _ => {
                return Err(Error::Malformed(format!(
                    "label {} lies in {} maximal cliques",
                    lg.labels[label],
                    owners.len()
                )))
            }
        };
        label_edges.push(Edge::new(a, b));
    }
    let used = cliques.len().max(next);
    if used != n {
        return Err(Error::Malformed(format!(
            "line graph assembles to {used} vertices, expected {n}"
        )));
    }
    let tree = Graph::from_edges(n, label_edges.iter().map(|e| (e.u, e.v)))?;
    if !tree.is_tree() || tree.m() != k {
        return Err(Error::Malformed("line graph does not come from a tree".into()));
    }
    for i in 0..k {
        for j in i + 1..k {
            if lg.adjacency.has_edge(i, j) != label_edges[i].is_adjacent_to(&label_edges[j]) {
                return Err(Error::Malformed(format!(
                    "labels {} and {} break the line-graph structure",
                    lg.labels[i], lg.labels[j]
                )));
            }
        }
    }
    Ok(Reconstruction { tree, label_edges })
}

/// Trees from `candidates` whose line graph is isomorphic to the given one.
pub fn reconstruct_by_search<'a>(lg: &LabeledLineGraph, candidates: &'a [Graph]) -> Vec<&'a Graph> {
    candidates
        .iter()
        .filter(|t| t.m() == lg.labels.len() && is_isomorphic(&line_graph(t), &lg.adjacency))
        .collect()
}

#[derive(Debug, Clone)]
pub struct WeightedReport {
    pub table: PairTable,
    pub reconstruction: Reconstruction,
    pub canonical_code: String,
}

/// Pair coefficients, inferred line graph, rebuilt tree; the result must be
/// isomorphic to the input.
pub fn weighted_reconstruction(t: &Graph) -> Result<WeightedReport> {
    let table = pair_adjacency_from_coefficients(t)?;
    let reconstruction = tree_from_labeled_line_graph(&table.line_graph, t.n())?;
    if !is_isomorphic(&reconstruction.tree, t) {
        return Err(Error::Inconsistent(
            "reconstructed tree is not isomorphic to the input".into(),
        ));
    }
    let canonical_code = tree_code(&reconstruction.tree).expect("reconstruction is a tree");
    Ok(WeightedReport {
        table,
        reconstruction,
        canonical_code,
    })
}

/// Sum of the coefficients of all degree-`r` monomials, i.e. the polynomial
/// at `y = (1, ..., 1)`.
pub fn diagonal_specialization(t: &Graph, r: usize) -> Result<BigInt> {
    require_tree(t)?;
    let edges = t.edges();
    let mut total = BigInt::from(0);
    let mut counts = vec![0usize; edges.len()];
    fn multisets(
        t: &Graph,
        edges: &[Edge],
        start: usize,
        left: usize,
        counts: &mut Vec<usize>,
        total: &mut BigInt,
    ) -> Result<()> {
        if left == 0 {
            let spec = MonomialSpec::new(edges.iter().copied().zip(counts.iter().copied()));
            *total += monomial_coefficient(t, &spec)?;
            return Ok(());
        }
        for i in start..edges.len() {
            counts[i] += 1;
            multisets(t, edges, i, left - 1, counts, total)?;
            counts[i] -= 1;
        }
        Ok(())
    }
    multisets(t, edges, 0, r, &mut counts, &mut total)?;
    Ok(total)
}
