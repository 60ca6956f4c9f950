//! Trace moments `M_r = tr((X_G|W_n)^r)` by independent routes:
//!
//! * `oracle`: sum of the `(n-2,2)` character over all `m^r` edge words;
//! * `trace_difference`: `tr(X^r on V_n) - tr((mI - L)^r)`, all integer;
//! * `newton`: power sums of the roots of `charpoly_22`;
//! * `closed_form`: explicit formulas for `r = 1, 2, 3`.

use crate::edge_op::{build_full_operator, build_vertex_operator, charpoly_22, dim_22};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, three_edge_counts, CanonicalForm, Edge, Graph};
use crate::linalg::IntPolynomial;
use crate::perm::{character_from_counts, closed_character_values, Permutation};
use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

/// Default cap on the number of words enumerated by the oracle.
pub const ORACLE_BUDGET: u128 = 100_000_000;
/// Default cap on the words behind one multiset coefficient.
pub const COEFFICIENT_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MomentMethod {
    Oracle,
    TraceDifference,
    Newton,
    ClosedForm,
}

impl MomentMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            MomentMethod::Oracle => "oracle",
            MomentMethod::TraceDifference => "trace_difference",
            MomentMethod::Newton => "newton",
            MomentMethod::ClosedForm => "closed_form",
        }
    }
}

fn decimal<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MomentReport {
    pub r: usize,
    #[serde(serialize_with = "decimal")]
    pub value: BigInt,
    pub method: MomentMethod,
}

fn require_rep(n: usize) -> Result<()> {
    if n <= 3 {
        Err(Error::RepresentationAbsent { n })
    } else {
        Ok(())
    }
}

fn chi(p: &Permutation) -> i64 {
    let (c1, c2) = p.fixed_and_two_cycles();
    character_from_counts(c1, c2)
}

/// Character sum over all `m^r` words, with the default budget.
pub fn moment_oracle(g: &Graph, r: usize) -> Result<BigInt> {
    moment_oracle_with_budget(g, r, ORACLE_BUDGET)
}

pub fn moment_oracle_with_budget(g: &Graph, r: usize, budget: u128) -> Result<BigInt> {
    require_rep(g.n())?;
    let words = (g.m() as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    if words > budget {
        return Err(Error::BudgetExceeded { words, budget });
    }
    fn walk(edges: &[Edge], depth: usize, perm: &mut Permutation) -> i128 {
        if depth == 0 {
            return chi(perm) as i128;
        }
        let mut total = 0;
        for e in edges {
            perm.mul_transposition_right(e.u, e.v);
            total += walk(edges, depth - 1, perm);
            perm.mul_transposition_right(e.u, e.v);
        }
        total
    }
    let mut perm = Permutation::identity(g.n());
    Ok(walk(g.edges(), r, &mut perm).into())
}

/// `M_1 ..= M_{r_max}` by the integer trace difference.
pub fn moments_exact(g: &Graph, r_max: usize) -> Result<Vec<BigInt>> {
    require_rep(g.n())?;
    let full = build_full_operator(g).power_traces(r_max);
    let vertex = build_vertex_operator(g).power_traces(r_max);
    Ok(full.into_iter().zip(vertex).map(|(a, b)| a - b).collect())
}

pub fn moment_exact(g: &Graph, r: usize) -> Result<BigInt> {
    if r == 0 {
        require_rep(g.n())?;
        return Ok(BigInt::from(dim_22(g.n())));
    }
    Ok(moments_exact(g, r)?.pop().expect("r >= 1"))
}

/// Power sums of the roots of `p`, `r = 1..=r_max`.
pub fn moments_from_charpoly(p: &IntPolynomial, r_max: usize) -> Vec<BigInt> {
    p.power_sums(r_max)
}

/// Reports for `r = 1..=r_max` by the requested method.
pub fn moment_table(g: &Graph, r_max: usize, method: MomentMethod) -> Result<Vec<MomentReport>> {
    let values: Vec<BigInt> = match method {
        MomentMethod::Oracle => (1..=r_max)
            .map(|r| moment_oracle(g, r))
            .collect::<Result<_>>()?,
        MomentMethod::TraceDifference => moments_exact(g, r_max)?,
        MomentMethod::Newton => moments_from_charpoly(&charpoly_22(g)?, r_max),
        MomentMethod::ClosedForm => {
            if r_max > 3 {
                return Err(Error::Malformed(format!(
                    "closed forms exist for r <= 3, requested {r_max}"
                )));
            }
            [closed_m1, closed_m2, closed_m3][..r_max]
                .iter()
                .map(|f| f(g))
                .collect::<Result<_>>()?
        }
    };
    Ok(values
        .into_iter()
        .enumerate()
        .map(|(k, value)| MomentReport {
            r: k + 1,
            value,
            method,
        })
        .collect())
}

pub fn closed_m1(g: &Graph) -> Result<BigInt> {
    require_rep(g.n())?;
    let n = g.n() as i128;
    Ok((g.m() as i128 * (n - 3) * (n - 4) / 2).into())
}

pub fn closed_m2(g: &Graph) -> Result<BigInt> {
    let v = closed_character_values(g.n())?;
    let m = g.m() as i128;
    let p = g.two_paths() as i128;
    Ok((m * v.dim as i128
        + 2 * p * v.alpha as i128
        + (m * (m - 1) - 2 * p) * v.beta as i128)
        .into())
}

/// The two equivalent forms of the cubic moment, in that order.
pub fn closed_m3_forms(g: &Graph) -> Result<(i128, i128)> {
    let v = closed_character_values(g.n())?;
    let c = three_edge_counts(g);
    // A shape that needs more points than n cannot occur, so its count is 0
    // and the out-of-range character value carries no weight.
    assert!(v.applicable(&[3, 2]) || c.q == 0);
    assert!(v.applicable(&[2, 2, 2]) || c.d3 == 0);
    let (c2, c4, c32, c222) = (v.c2 as i128, v.c4 as i128, v.c32 as i128, v.c222 as i128);
    let (t, s, r, q, d3) = (c.t as i128, c.s as i128, c.r as i128, c.q as i128, c.d3 as i128);
    let m = g.m() as i128;
    let base = c2 * (m + 3 * m * (m - 1) + 6 * t);
    let form1 = base + 6 * c4 * (s + r) + 6 * c32 * q + 6 * c222 * d3;
    let triples = m * (m - 1) * (m - 2) / 6;
    let form2 = base + 6 * c222 * triples + 6 * (c4 - c222) * (s + r) + 6 * (c32 - c222) * q
        - 6 * c222 * t;
    Ok((form1, form2))
}

pub fn closed_m3(g: &Graph) -> Result<BigInt> {
    let (a, b) = closed_m3_forms(g)?;
    if a != b {
        return Err(Error::Inconsistent(format!(
            "cubic closed forms disagree: {a} vs {b}"
        )));
    }
    Ok(a.into())
}

/// For a tree, `(M_3 - terms depending only on n) / 6`, which equals
/// `(2n-16)(s+r) + (n-9)q`.
pub fn tree_cubic_combination(t: &Graph) -> Result<BigInt> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let v = closed_character_values(t.n())?;
    let m = t.m() as i128;
    let n_only = v.c2 as i128 * (m + 3 * m * (m - 1)) + 6 * v.c222 as i128 * m * (m - 1) * (m - 2) / 6;
    let rest = moment_exact(t, 3)? - BigInt::from(n_only);
    let six = BigInt::from(6);
    if &rest % &six != BigInt::from(0) {
        return Err(Error::Inconsistent("cubic remainder not divisible by 6".into()));
    }
    Ok(rest / six)
}

/// The moments `M_1 ..= M_{dim W_n}`, which determine the `(n-2,2)` spectrum.
pub fn moment_profile(g: &Graph) -> Result<Vec<BigInt>> {
    let p = charpoly_22(g)?;
    Ok(moments_from_charpoly(&p, dim_22(g.n())))
}

/// A forest without isolated vertices, with a positive multiplicity per edge
/// (aligned with `forest.edges()`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestWithMultiplicity {
    forest: Graph,
    alpha: Vec<usize>,
}

impl ForestWithMultiplicity {
    pub fn new(forest: Graph, alpha: Vec<usize>) -> Result<Self> {
        if !forest.is_forest() {
            return Err(Error::Malformed("support graph has a cycle".into()));
        }
        if (0..forest.n()).any(|v| forest.degree(v) == 0) {
            return Err(Error::Malformed("support forest has an isolated vertex".into()));
        }
        if alpha.len() != forest.m() || alpha.contains(&0) {
            return Err(Error::Malformed(
                "multiplicities must be positive, one per edge".into(),
            ));
        }
        Ok(ForestWithMultiplicity { forest, alpha })
    }

    pub fn forest(&self) -> &Graph {
        &self.forest
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    /// `|alpha|`, the word length.
    pub fn order(&self) -> usize {
        self.alpha.iter().sum()
    }
}

/// Number of distinct orderings of a multiset: `r! / prod(alpha_e!)`.
pub fn multinomial(counts: &[usize]) -> u128 {
    let mut acc: u128 = 1;
    let mut placed: u128 = 0;
    for &c in counts {
        for k in 1..=c as u128 {
            placed += 1;
            acc = acc * placed / k;
        }
    }
    acc
}

/// Character sum over all distinct words using `edges[i]` exactly
/// `counts[i]` times, inside `S_n`.
pub(crate) fn multiset_word_sum(
    edges: &[Edge],
    counts: &[usize],
    n: usize,
    budget: u128,
) -> Result<i128> {
    let words = multinomial(counts);
    if words > budget {
        return Err(Error::BudgetExceeded { words, budget });
    }
    fn walk(edges: &[Edge], left: &mut [usize], remaining: usize, perm: &mut Permutation) -> i128 {
        if remaining == 0 {
            return chi(perm) as i128;
        }
        let mut total = 0;
        for i in 0..edges.len() {
            if left[i] == 0 {
                continue;
            }
            left[i] -= 1;
            perm.mul_transposition_right(edges[i].u, edges[i].v);
            total += walk(edges, left, remaining - 1, perm);
            perm.mul_transposition_right(edges[i].u, edges[i].v);
            left[i] += 1;
        }
        total
    }
    let mut left = counts.to_vec();
    let mut perm = Permutation::identity(n);
    Ok(walk(edges, &mut left, counts.iter().sum(), &mut perm))
}

/// `C_{F,alpha}(n)`: the forest is placed on vertices `0..|V(F)|` of `[n]`.
pub fn universal_coefficient(f: &ForestWithMultiplicity, n: usize) -> Result<BigInt> {
    universal_coefficient_with_budget(f, n, COEFFICIENT_BUDGET)
}

pub fn universal_coefficient_with_budget(
    f: &ForestWithMultiplicity,
    n: usize,
    budget: u128,
) -> Result<BigInt> {
    require_rep(n)?;
    if f.forest.n() > n {
        return Err(Error::AmbientTooSmall {
            needed: f.forest.n(),
            n,
        });
    }
    multiset_word_sum(f.forest.edges(), &f.alpha, n, budget).map(BigInt::from)
}

/// The subgraph formed by a set of edges, relabeled onto `0..k`.
pub(crate) fn compact_support(edges: &[Edge]) -> Graph {
    let mut verts: Vec<usize> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let pos = |x: usize| verts.binary_search(&x).unwrap();
    Graph::from_edges(verts.len(), edges.iter().map(|e| (pos(e.u), pos(e.v))))
        .expect("support of at most 62 vertices")
}

/// All `alpha: E -> Z_{>0}` with the given total.
fn compositions(parts: usize, total: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if total < parts {
        return vec![];
    }
    let mut out = Vec::new();
    for first in 1..=total - (parts - 1) {
        for mut rest in compositions(parts - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// One line of the support-forest expansion.
#[derive(Debug, Clone)]
pub struct ForestTerm {
    pub model: Graph,
    /// embedded copies in the tree
    pub count: u64,
    /// `C_{r,F}(n)`
    pub coefficient: BigInt,
}

#[derive(Debug, Clone)]
pub struct ExpansionReport {
    pub r: usize,
    pub terms: Vec<ForestTerm>,
    pub expansion: BigInt,
    pub moment: BigInt,
}

impl ExpansionReport {
    pub fn holds(&self) -> bool {
        self.expansion == self.moment
    }
}

/// Groups the edge subsets of a tree (at most `r` edges) by forest type and
/// combines embedded counts with universal coefficients computed on a model
/// copy of each type.
pub fn tree_expansion(t: &Graph, r: usize) -> Result<ExpansionReport> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    require_rep(t.n())?;
    let edges = t.edges();
    let mut types: BTreeMap<CanonicalForm, (Graph, u64)> = BTreeMap::new();
    let mut chosen = Vec::new();
    fn subsets(
        edges: &[Edge],
        start: usize,
        max: usize,
        chosen: &mut Vec<Edge>,
        types: &mut BTreeMap<CanonicalForm, (Graph, u64)>,
    ) {
        for i in start..edges.len() {
            chosen.push(edges[i]);
            let support = compact_support(chosen);
            types
                .entry(canonical_form(&support))
                .or_insert_with(|| (support, 0))
                .1 += 1;
            if chosen.len() < max {
                subsets(edges, i + 1, max, chosen, types);
            }
            chosen.pop();
        }
    }
    if r > 0 {
        subsets(edges, 0, r, &mut chosen, &mut types);
    }

    let mut terms = Vec::with_capacity(types.len());
    let mut expansion = BigInt::from(0);
    for (_, (support, count)) in types {
        // model copy: reversed vertex labels, distinct from the first embedding
        let k = support.n();
        let reversed: Vec<usize> = (0..k).rev().collect();
        let model = support.relabel(&reversed);
        let mut coefficient = BigInt::from(0);
        for alpha in compositions(model.m(), r) {
            let f = ForestWithMultiplicity::new(model.clone(), alpha)?;
            coefficient += universal_coefficient(&f, t.n())?;
        }
        expansion += &coefficient * count;
        terms.push(ForestTerm {
            model,
            count,
            coefficient,
        });
    }
    Ok(ExpansionReport {
        r,
        terms,
        expansion,
        moment: moment_exact(t, r)?,
    })
}

pub fn tree_expansion_check(t: &Graph, r: usize) -> Result<bool> {
    tree_expansion(t, r).map(|rep| rep.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph6_decode;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(moment_oracle(&Graph::star(4), 1).unwrap(), big(4));
        assert_eq!(moment_oracle(&Graph::path(4), 2).unwrap(), big(6));
        assert_eq!(moment_oracle(&Graph::path(5), 3).unwrap(), big(40));
        assert!(matches!(
            moment_oracle_with_budget(&Graph::path(5), 3, 63),
            Err(Error::BudgetExceeded { words: 64, budget: 63 })
        ));
        assert!(matches!(
            moment_oracle(&Graph::path(3), 1),
            Err(Error::RepresentationAbsent { n: 3 })
        ));
    }

    #[test]
    fn exact_examples() {
        let g = graph6_decode("Ir_GYkuy?").unwrap();
        assert_eq!(moment_exact(&g, 1).unwrap(), big(420));
        assert_eq!(moment_exact(&g, 2).unwrap(), big(5240));
        assert_eq!(moment_exact(&Graph::path(4), 2).unwrap(), big(6));
        assert_eq!(moment_exact(&Graph::path(5), 0).unwrap(), big(5));
    }

    #[test]
    fn closed_examples() {
        assert_eq!(closed_m1(&Graph::path(4)).unwrap(), big(0));
        assert_eq!(closed_m1(&Graph::star(4)).unwrap(), big(4));
        assert_eq!(closed_m2(&Graph::path(4)).unwrap(), big(6));
        assert_eq!(closed_m2(&Graph::empty(6)).unwrap(), big(0));
        let g = graph6_decode("I]HTOYRRO").unwrap();
        assert_eq!(closed_m1(&g).unwrap(), big(420));
        assert_eq!(closed_m2(&g).unwrap(), big(5240));
        assert_eq!(closed_m3(&Graph::path(5)).unwrap(), big(40));
        assert_eq!(closed_m3(&Graph::empty(5)).unwrap(), big(0));
        // K3 plus three isolated vertices: 27 c2 with c2 = 3 at n = 6
        let k3 = Graph::from_edges(6, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(closed_m3(&k3).unwrap(), big(27 * 3));
        assert_eq!(moment_oracle(&k3, 3).unwrap(), big(81));
    }

    #[test]
    fn newton_route() {
        let p = charpoly_22(&Graph::path(4)).unwrap();
        assert_eq!(moments_from_charpoly(&p, 4), [0, 6, 0, 18].map(big));
        assert_eq!(moment_exact(&Graph::path(4), 4).unwrap(), big(18));
    }

    #[test]
    fn coefficient_examples() {
        for n in 4..=9 {
            let d = dim_22(n) as i64;
            let v = closed_character_values(n).unwrap();
            let edge = ForestWithMultiplicity::new(Graph::path(2), vec![2]).unwrap();
            assert_eq!(universal_coefficient(&edge, n).unwrap(), big(d));
            let adj = ForestWithMultiplicity::new(Graph::path(3), vec![1, 1]).unwrap();
            assert_eq!(universal_coefficient(&adj, n).unwrap(), big(2 * v.alpha));
        }
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let f = ForestWithMultiplicity::new(two, vec![2, 2]).unwrap();
        assert_eq!(universal_coefficient(&f, 7).unwrap(), big(84));
        assert!(matches!(
            universal_coefficient(&f, 3),
            Err(Error::RepresentationAbsent { .. })
        ));
        let big_forest = ForestWithMultiplicity::new(Graph::path(6), vec![1; 5]).unwrap();
        assert!(matches!(
            universal_coefficient(&big_forest, 5),
            Err(Error::AmbientTooSmall { needed: 6, n: 5 })
        ));
    }

    #[test]
    fn forest_validation() {
        assert!(ForestWithMultiplicity::new(Graph::complete(3), vec![1, 1, 1]).is_err());
        assert!(ForestWithMultiplicity::new(Graph::path(3), vec![1, 0]).is_err());
        assert!(ForestWithMultiplicity::new(Graph::from_edges(3, [(0, 1)]).unwrap(), vec![1]).is_err());
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[2, 2]), 6);
        assert_eq!(multinomial(&[1, 1, 1]), 6);
        assert_eq!(multinomial(&[3]), 1);
        assert_eq!(multinomial(&[]), 1);
    }

    #[test]
    fn expansion_examples() {
        assert!(tree_expansion_check(&Graph::path(5), 3).unwrap());
        assert!(tree_expansion_check(&Graph::star(3), 2).unwrap());
        assert!(tree_expansion_check(&Graph::path(6), 1).unwrap());
        let rep = tree_expansion(&Graph::path(5), 3).unwrap();
        assert_eq!(rep.moment, big(40));
        assert!(matches!(tree_expansion_check(&Graph::complete(4), 2), Err(Error::NotATree)));
    }

    #[test]
    fn cubic_combination_for_trees() {
        for t in [Graph::path(7), Graph::star(6), Graph::path(10)] {
            let n = t.n() as i64;
            let c = crate::graph::tree_closed_counts(&t).unwrap();
            let want = (2 * n - 16) * (c.s + c.r) as i64 + (n - 9) * c.q as i64;
            assert_eq!(tree_cubic_combination(&t).unwrap(), big(want));
        }
    }
}
