//! Free trees via rooted level sequences.
//!
//! Rooted trees are generated once each as canonical level sequences
//! (Beyer–Hedetniemi successor rule). A rooted tree is kept when its root is
//! a centroid. For a tree with two centroids both rootings qualify; only the
//! one whose root half has the larger code is kept.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_TREE_ORDER: usize = 16;

/// Canonical level sequences of all rooted trees on `n` vertices, root level 0.
pub fn rooted_level_sequences(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    let mut l: Vec<usize> = (0..n).collect();
    let mut out = vec![l.clone()];
    while let Some(p) = (0..n).rev().find(|&i| l[i] > 1) {
        let q = (0..p).rev().find(|&i| l[i] == l[p] - 1).unwrap();
        for i in p..n {
            l[i] = l[i - (p - q)];
        }
        out.push(l.clone());
    }
    out
}

fn parents(levels: &[usize]) -> Vec<usize> {
    let mut last_at = vec![0usize; levels.len()];
    let mut parent = vec![0usize; levels.len()];
    for (i, &lv) in levels.iter().enumerate() {
        if lv > 0 {
            parent[i] = last_at[lv - 1];
        }
        last_at[lv] = i;
    }
    parent
}

fn subtree_code(children: &[Vec<usize>], v: usize) -> String {
    let mut kids: Vec<String> = children[v].iter().map(|&c| subtree_code(children, c)).collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

/// `Some(tree)` if the sequence is the chosen centroid rooting of its tree.
fn centroid_rooted(levels: &[usize]) -> Option<Graph> {
    let n = levels.len();
    let parent = parents(levels);
    let mut size = vec![1usize; n];
    for i in (1..n).rev() {
        size[parent[i]] += size[i];
    }
    let root_kids: Vec<usize> = (1..n).filter(|&i| levels[i] == 1).collect();
    if root_kids.iter().any(|&c| 2 * size[c] > n) {
        return None;
    }
    if let Some(&half) = root_kids.iter().find(|&&c| 2 * size[c] == n) {
        let mut children = vec![Vec::new(); n];
        for i in 1..n {
            if i != half {
                children[parent[i]].push(i);
            }
        }
        if subtree_code(&children, 0) < subtree_code(&children, half) {
            return None;
        }
    }
    Some(Graph::from_edges(n, (1..n).map(|i| (parent[i], i))).expect("valid tree"))
}

/// One representative per isomorphism class of trees on `n` vertices, in a
/// fixed order.
pub fn enumerate_free_trees(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_TREE_ORDER).contains(&n) {
        return Err(Error::UnsupportedSize {
            n,
            max: MAX_TREE_ORDER,
        });
    }
    Ok(rooted_level_sequences(n)
        .iter()
        .filter_map(|l| centroid_rooted(l))
        .collect())
}
