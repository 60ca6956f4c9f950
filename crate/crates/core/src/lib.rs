//! The `(n-2,2)` spectral invariant of graphs.
//!
//! A graph `G` on `n` vertices acts on the space of unordered vertex pairs
//! through `X_G`, the sum of its edge transpositions. The zero-degree part of
//! that space carries the irreducible `(n-2,2)` representation of `S_n`; the
//! spectrum of `X_G` there refines the Laplacian spectrum. This crate computes
//! it exactly (integer characteristic polynomials, trace moments), numerically
//! (dense symmetric eigensolver), and through closed formulas, and reproduces
//! the tree census and the switched regular pair used to exercise it.

pub mod census;
pub mod edge_op;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod moments;
pub mod perm;
pub mod weighted;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
