//! Graph arguments: a graph6 string, or a path to an edge-list file.
//!
//! Edge-list files hold one `u v` pair per line. A line with a single integer
//! sets the vertex count (otherwise it is one more than the largest index).
//! `#` starts a comment.

use edgerep::graph::graph6_decode;
use edgerep::{Error, Graph, Result};
use std::path::Path;

pub fn read_graph(arg: &str) -> Result<Graph> {
    let path = Path::new(arg);
    if path.is_file() {
        parse_edge_list(&std::fs::read_to_string(path)?)
    } else {
        graph6_decode(arg)
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut pairs = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Malformed(format!("line {}: {e}", k + 1)))?;
        match fields[..] {
            [n] if declared.is_none() && pairs.is_empty() => declared = Some(n),
            [u, v] => pairs.push((u, v)),
            _ => return Err(Error::Malformed(format!("line {}: expected `u v`", k + 1))),
        }
    }
    let n = declared.unwrap_or_else(|| pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("# path\n0 1\n1 2\n\n2 3\n").unwrap();
        assert_eq!(g, Graph::path(4));
        let g = parse_edge_list("6\n0 1\n").unwrap();
        assert_eq!((g.n(), g.m()), (6, 1));
        assert!(parse_edge_list("0 1 2\n").is_err());
        assert!(parse_edge_list("0 x\n").is_err());
        assert!(parse_edge_list("2\n0 5\n").is_err());
    }
}
