//! Tree census: group all trees on `n` vertices by their exact Laplacian
//! characteristic polynomial and test whether the `(n-2,2)` characteristic
//! polynomial separates every class.

mod gm;
mod trees;

pub use gm::{compare_pair, gm_switch, search_gm_switch, verify_gm_example, GMVerdict, GM_GRAPH6, GM_M6};
pub use trees::{enumerate_free_trees, rooted_level_sequences, MAX_TREE_ORDER};

use crate::edge_op::charpoly_22;
use crate::error::{Error, Result};
use crate::graph::{laplacian, tree_code};
use crate::linalg::{charpoly_exact, IntPolynomial};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;
use std::io::Write;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub n: usize,
    pub canonical_code: String,
    pub laplacian_charpoly: IntPolynomial,
    pub charpoly_22: Option<IntPolynomial>,
    pub class_id: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub n: usize,
    pub tree_count: usize,
    pub cospectral_class_count: usize,
    pub trees_in_classes: usize,
    pub unresolved_by_22: usize,
}

pub const CSV_HEADER: &str = "n,trees,laplacian_cospectral_classes,trees_in_classes,unresolved_by_22";

impl CensusSummary {
    /// `trees,classes,trees_in_classes,unresolved`.
    pub fn row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.tree_count, self.cospectral_class_count, self.trees_in_classes, self.unresolved_by_22
        )
    }

    pub fn csv_line(&self) -> String {
        format!("{},{}", self.n, self.row())
    }
}

#[derive(Debug, Clone)]
pub struct Census {
    pub summary: CensusSummary,
    pub records: Vec<CensusRecord>,
}

impl Census {
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> Result<()> {
        for rec in &self.records {
            serde_json::to_writer(&mut w, rec).map_err(std::io::Error::from)?;
            w.write_all(b"\n")?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{CSV_HEADER}")?;
        writeln!(w, "{}", self.summary.csv_line())?;
        w.flush()?;
        Ok(())
    }
}

pub fn run_census(n: usize) -> Result<Census> {
    run_census_with_jobs(n, None)
}

/// Runs the census on a pool of `jobs` threads (all cores when `None`).
/// Output does not depend on the thread count.
pub fn run_census_with_jobs(n: usize, jobs: Option<usize>) -> Result<Census> {
    if !(4..=MAX_TREE_ORDER).contains(&n) {
        return Err(Error::UnsupportedSize {
            n,
            max: MAX_TREE_ORDER,
        });
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Inconsistent(format!("thread pool: {e}")))?;
    pool.install(|| census_inner(n))
}

fn census_inner(n: usize) -> Result<Census> {
    let trees = enumerate_free_trees(n)?;
    let lap: Vec<IntPolynomial> = trees
        .par_iter()
        .map(|t| charpoly_exact(&laplacian(t)))
        .collect();

    let mut class_of_key: HashMap<&IntPolynomial, usize> = HashMap::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    let class_ids: Vec<usize> = lap
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let next = members.len();
            let id = *class_of_key.entry(p).or_insert(next);
            if id == next {
                members.push(Vec::new());
            }
            members[id].push(i);
            id
        })
        .collect();

    let in_classes: Vec<usize> = members
        .iter()
        .filter(|m| m.len() >= 2)
        .flatten()
        .copied()
        .collect();
    let computed: Vec<(usize, IntPolynomial)> = in_classes
        .par_iter()
        .map(|&i| charpoly_22(&trees[i]).map(|p| (i, p)))
        .collect::<Result<_>>()?;
    let mut part_22: Vec<Option<IntPolynomial>> = vec![None; trees.len()];
    for (i, p) in computed {
        part_22[i] = Some(p);
    }

    let mut unresolved = 0;
    for m in members.iter().filter(|m| m.len() >= 2) {
        for &i in m {
            if m.iter().any(|&j| j != i && part_22[j] == part_22[i]) {
                unresolved += 1;
            }
        }
    }

    let summary = CensusSummary {
        n,
        tree_count: trees.len(),
        cospectral_class_count: members.iter().filter(|m| m.len() >= 2).count(),
        trees_in_classes: in_classes.len(),
        unresolved_by_22: unresolved,
    };
    let records = trees
        .iter()
        .zip(lap)
        .zip(part_22)
        .zip(class_ids)
        .map(|(((t, laplacian_charpoly), charpoly_22), class_id)| CensusRecord {
            n,
            canonical_code: tree_code(t).expect("enumerated trees"),
            laplacian_charpoly,
            charpoly_22,
            class_id,
        })
        .collect();
    Ok(Census { summary, records })
}

/// Convenience for tests and tools that only need the summary.
pub fn census_summary(n: usize) -> Result<CensusSummary> {
    run_census(n).map(|c| c.summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_census_rows() {
        let s = census_summary(5).unwrap();
        assert_eq!(s.row(), "3,0,0,0");
        for n in 4..=10 {
            let s = census_summary(n).unwrap();
            assert_eq!((s.cospectral_class_count, s.trees_in_classes, s.unresolved_by_22), (0, 0, 0));
        }
        assert!(run_census(3).is_err());
    }

    #[test]
    fn class_ids_follow_first_occurrence() {
        let c = run_census(11).unwrap();
        assert_eq!(c.summary.row(), "235,3,6,0");
        let mut seen = 0;
        for r in &c.records {
            assert!(r.class_id <= seen);
            if r.class_id == seen {
                seen += 1;
            }
            assert_eq!(r.charpoly_22.is_some(), c.records.iter().filter(|s| s.class_id == r.class_id).count() >= 2);
        }
    }

    #[test]
    fn deterministic_output() {
        let mut a = Vec::new();
        let mut b = Vec::new();
        run_census_with_jobs(9, Some(1)).unwrap().write_jsonl(&mut a).unwrap();
        run_census_with_jobs(9, Some(4)).unwrap().write_jsonl(&mut b).unwrap();
        assert_eq!(a, b);
        let first: serde_json::Value = serde_json::from_slice(a.split(|&c| c == b'\n').next().unwrap()).unwrap();
        let keys: Vec<&String> = first.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 5);
    }
}
