//! Canonical forms for small graphs.
//!
//! Trees are encoded by AHU strings rooted at the centroid (the smaller
//! string when there are two centroids). Other graphs go through equitable
//! color refinement with individualization, keeping the lexicographically
//! smallest relabeled adjacency over all leaves of the search tree. Twin
//! vertices in a target cell are branched on only once.

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CanonicalForm {
    Tree(String),
    General { n: usize, rows: Vec<u64> },
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    if g.is_tree() {
        CanonicalForm::Tree(tree_code(g).expect("checked tree"))
    } else {
        CanonicalForm::General {
            n: g.n(),
            rows: general_canonical_rows(g),
        }
    }
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return false;
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    d1 == d2 && canonical_form(g1) == canonical_form(g2)
}

/// AHU code of a tree rooted at its centroid; `None` for non-trees.
pub fn tree_code(t: &Graph) -> Option<String> {
    if !t.is_tree() {
        return None;
    }
    let n = t.n();
    if n == 1 {
        return Some("()".into());
    }
    // subtree sizes from an arbitrary root
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        order.push(v);
        for w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev().take(n - 1) {
        size[parent[v]] += size[v];
    }
    let heaviest = |v: usize| {
        t.neighbors(v)
            .map(|w| if parent[w] == v { size[w] } else { n - size[v] })
            .max()
            .unwrap_or(0)
    };
    let best = (0..n).map(heaviest).min().unwrap();
    (0..n)
        .filter(|&v| heaviest(v) == best)
        .map(|c| rooted_code(t, c, usize::MAX))
        .min()
}

fn rooted_code(t: &Graph, v: usize, from: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .filter(|&w| w != from)
        .map(|w| rooted_code(t, w, v))
        .collect();
    kids.sort_unstable();
    let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
    s.push('(');
    for k in &kids {
        s.push_str(k);
    }
    s.push(')');
    s
}

fn refine(g: &Graph, colors: &mut [u32]) {
    let n = g.n();
    let mut distinct = count_distinct(colors);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut keys: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        keys.sort_unstable();
        keys.dedup();
        for v in 0..n {
            colors[v] = keys.binary_search(&&sigs[v]).unwrap() as u32;
        }
        if keys.len() == distinct {
            return;
        }
        distinct = keys.len();
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn general_canonical_rows(g: &Graph) -> Vec<u64> {
    let mut colors = vec![0u32; g.n()];
    let mut best = None;
    search(g, &mut colors, &mut best);
    best.unwrap_or_default()
}

fn search(g: &Graph, colors: &mut [u32], best: &mut Option<Vec<u64>>) {
    let n = g.n();
    refine(g, colors);
    let mut counts = vec![0usize; n];
    for &c in colors.iter() {
        counts[c as usize] += 1;
    }
    let Some(target) = counts.iter().position(|&k| k > 1) else {
        let rows = relabeled_rows(g, colors);
        if best.as_ref().is_none_or(|b| rows < *b) {
            *best = Some(rows);
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
        next[v] -= 1;
        search(g, &mut next, best);
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let mask = !(1u64 << u | 1u64 << v);
    g.neighbors_mask(u) & mask == g.neighbors_mask(v) & mask
}

fn relabeled_rows(g: &Graph, colors: &[u32]) -> Vec<u64> {
    let n = g.n();
    let mut rows = vec![0u64; n];
    for e in g.edges() {
        let (a, b) = (colors[e.u] as usize, colors[e.v] as usize);
        rows[a] |= 1 << (n - 1 - b);
        rows[b] |= 1 << (n - 1 - a);
    }
    rows
}
