//! Godsil–McKay switching and the fixed pair of cospectral 4-regular graphs
//! on ten vertices.

use crate::edge_op::charpoly_22;
use crate::error::{Error, Result};
use crate::graph::{graph6_decode, is_isomorphic, laplacian, Graph};
use crate::linalg::charpoly_exact;
use crate::moments::moments_exact;
use num_bigint::BigInt;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

pub const GM_GRAPH6: [&str; 2] = ["Ir_GYkuy?", "I]HTOYRRO"];
pub const GM_M6: [i64; 2] = [175_466_984, 175_467_176];
const GM_R_MAX: usize = 6;

/// Switches `g` with respect to the vertex set `c`.
///
/// `c` must induce a regular subgraph and every other vertex must see 0,
/// `|c|/2` or `|c|` vertices of `c`; vertices seeing half have their edges
/// into `c` complemented.
pub fn gm_switch(g: &Graph, c: &[usize]) -> Result<Graph> {
    let mut mask = 0u64;
    for &v in c {
        if v >= g.n() {
            return Err(Error::InvalidSwitchingSet(format!("vertex {v} out of range")));
        }
        if mask >> v & 1 == 1 {
            return Err(Error::InvalidSwitchingSet(format!("vertex {v} repeated")));
        }
        mask |= 1 << v;
    }
    let k = c.len();
    let inner: Vec<u32> = c.iter().map(|&v| (g.neighbors_mask(v) & mask).count_ones()).collect();
    if inner.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::InvalidSwitchingSet("switching set is not regular".into()));
    }
    let mut flipped = Vec::new();
    for v in (0..g.n()).filter(|&v| mask >> v & 1 == 0) {
        let seen = (g.neighbors_mask(v) & mask).count_ones() as usize;
        if 2 * seen == k && k > 0 {
            flipped.push(v);
        } else if seen != 0 && seen != k {
            return Err(Error::InvalidSwitchingSet(format!(
                "vertex {v} has {seen} of {k} neighbors in the set"
            )));
        }
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| {
            let crosses = |a: usize, b: usize| flipped.contains(&a) && mask >> b & 1 == 1;
            !(crosses(e.u, e.v) || crosses(e.v, e.u))
        })
        .map(|e| (e.u, e.v))
        .collect();
    for &v in &flipped {
        for &w in c {
            if !g.has_edge(v, w) {
                edges.push((v, w));
            }
        }
    }
    Graph::from_edges(g.n(), edges)
}

/// Switching sets of even size up to `max_size` that map `g` onto a graph
/// isomorphic to `target`.
pub fn search_gm_switch(g: &Graph, target: &Graph, max_size: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut found = Vec::new();
    for bits in 1u64..1 << n {
        let k = bits.count_ones() as usize;
        if k % 2 == 1 || k > max_size {
            continue;
        }
        let c: Vec<usize> = (0..n).filter(|&v| bits >> v & 1 == 1).collect();
        if let Ok(h) = gm_switch(g, &c) {
            if is_isomorphic(&h, target) {
                found.push(c);
            }
        }
    }
    found
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GMVerdict {
    pub graph6: [String; 2],
    pub regular_degree: [Option<usize>; 2],
    pub adjacency_cospectral: bool,
    pub laplacian_cospectral: bool,
    pub isomorphic: bool,
    pub spectra_22_differ: bool,
    pub first_differing_moment: Option<usize>,
    #[serde(serialize_with = "moment_pairs")]
    pub moment_values: BTreeMap<usize, (BigInt, BigInt)>,
}

fn moment_pairs<S: Serializer>(
    m: &BTreeMap<usize, (BigInt, BigInt)>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(m.len()))?;
    for (r, (a, b)) in m {
        map.serialize_entry(&r.to_string(), &[a.to_string(), b.to_string()])?;
    }
    map.end()
}

/// Compares two graphs by the quantities reported for the fixed pair.
pub fn compare_pair(g: &Graph, h: &Graph, r_max: usize) -> Result<GMVerdict> {
    let a = moments_exact(g, r_max)?;
    let b = moments_exact(h, r_max)?;
    let moment_values: BTreeMap<usize, (BigInt, BigInt)> = (1..=r_max)
        .map(|r| (r, (a[r - 1].clone(), b[r - 1].clone())))
        .collect();
    let first_differing_moment = moment_values.iter().find(|(_, (x, y))| x != y).map(|(&r, _)| r);
    Ok(GMVerdict {
        graph6: [
            crate::graph::graph6_encode(g)?,
            crate::graph::graph6_encode(h)?,
        ],
        regular_degree: [g.regular_degree(), h.regular_degree()],
        adjacency_cospectral: charpoly_exact(&g.adjacency_matrix())
            == charpoly_exact(&h.adjacency_matrix()),
        laplacian_cospectral: charpoly_exact(&laplacian(g)) == charpoly_exact(&laplacian(h)),
        isomorphic: is_isomorphic(g, h),
        spectra_22_differ: charpoly_22(g)? != charpoly_22(h)?,
        first_differing_moment,
        moment_values,
    })
}

/// Decodes the fixed pair and checks every stated property, failing with the
/// first quantity that is off.
pub fn verify_gm_example() -> Result<GMVerdict> {
    let g = graph6_decode(GM_GRAPH6[0])?;
    let h = graph6_decode(GM_GRAPH6[1])?;
    let v = compare_pair(&g, &h, GM_R_MAX)?;
    let fail = |what: String| Err(Error::Regression(what));
    if v.regular_degree != [Some(4), Some(4)] {
        return fail(format!("degrees {:?}, expected 4-regular", v.regular_degree));
    }
    if !v.adjacency_cospectral {
        return fail("adjacency characteristic polynomials differ".into());
    }
    if !v.laplacian_cospectral {
        return fail("Laplacian characteristic polynomials differ".into());
    }
    if v.isomorphic {
        return fail("graphs are isomorphic".into());
    }
    if !v.spectra_22_differ {
        return fail("(n-2,2) characteristic polynomials coincide".into());
    }
    let m6 = &v.moment_values[&GM_R_MAX];
    if m6 != &(BigInt::from(GM_M6[0]), BigInt::from(GM_M6[1])) {
        return fail(format!("M6 = ({}, {}), expected {GM_M6:?}", m6.0, m6.1));
    }
    if v.first_differing_moment != Some(GM_R_MAX) {
        return fail(format!(
            "first differing moment {:?}, expected {GM_R_MAX}",
            v.first_differing_moment
        ));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trivial_switches() {
        let g = Graph::path(6);
        assert_eq!(gm_switch(&g, &[]).unwrap(), g);
        let s = Graph::star(3);
        assert_eq!(gm_switch(&s, &[1, 2]).unwrap(), s);
        let k = Graph::complete(5);
        assert_eq!(gm_switch(&k, &[0, 1]).unwrap(), k);
    }

    #[test]
    fn invalid_sets() {
        let g = Graph::path(5);
        assert!(matches!(gm_switch(&g, &[0, 9]), Err(Error::InvalidSwitchingSet(_))));
        assert!(matches!(gm_switch(&g, &[1, 1]), Err(Error::InvalidSwitchingSet(_))));
        // {0, 1, 2} induces a path: not regular
        assert!(matches!(gm_switch(&g, &[0, 1, 2]), Err(Error::InvalidSwitchingSet(_))));
        // vertex 1 sees 2 of 3 in {0, 2, 4}
        assert!(matches!(gm_switch(&g, &[0, 2, 4]), Err(Error::InvalidSwitchingSet(_))));
    }

    #[test]
    fn random_switches_are_cospectral() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut switched = 0;
        while switched < 10 {
            let mut e = Vec::new();
            for i in 0..10 {
                for j in i + 1..10 {
                    if rng.gen_bool(0.5) {
                        e.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(10, e).unwrap();
            for bits in 0u64..1 << 10 {
                if bits.count_ones() != 4 {
                    continue;
                }
                let c: Vec<usize> = (0..10).filter(|&v| bits >> v & 1 == 1).collect();
                if let Ok(h) = gm_switch(&g, &c) {
                    if h != g {
                        assert_eq!(
                            charpoly_exact(&g.adjacency_matrix()),
                            charpoly_exact(&h.adjacency_matrix())
                        );
                        switched += 1;
                        break;
                    }
                }
            }
        }
    }

    #[test]
    fn fixed_pair() {
        let v = verify_gm_example().unwrap();
        assert_eq!(v.first_differing_moment, Some(6));
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["moment_values"]["6"][1], "175467176");
    }

    #[test]
    fn fixed_pair_is_one_switch_apart() {
        let g = graph6_decode(GM_GRAPH6[0]).unwrap();
        let h = graph6_decode(GM_GRAPH6[1]).unwrap();
        let sets = search_gm_switch(&g, &h, 4);
        assert!(sets.contains(&vec![0, 2, 5, 7]), "{sets:?}");
        assert!(is_isomorphic(&gm_switch(&g, &[0, 2, 5, 7]).unwrap(), &h));
    }
}
