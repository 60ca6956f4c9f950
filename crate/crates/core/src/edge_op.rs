//! The operator `X_G = sum of edge transpositions` on the pair space `V_n`,
//! its zero-degree subspace `W_n`, and the `(n-2,2)` spectrum.
//!
//! `V_n` has the basis of unordered pairs `{a, b}`. It splits as trivial +
//! standard + `(n-2,2)`; the first two summands are spanned by the star
//! vectors `E_i = sum_{j != i} e_{ij}` and `X_G` acts there like `mI - L_G`.
//! So the exact `(n-2,2)` characteristic polynomial is a polynomial quotient.

use crate::error::{Error, Result};
use crate::graph::{laplacian, Graph};
use crate::linalg::{
    charpoly_exact, real_roots, symmetric_eigen, IntMatrix, IntPolynomial, RealMatrix,
};
use serde::Serialize;

/// Colex numbering of the pairs `{i, j}`, `i < j`, of `{0..n-1}`:
/// `(0,1), (0,2), (1,2), (0,3), ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairIndex {
    n: usize,
}

impl PairIndex {
    pub fn new(n: usize) -> Self {
        PairIndex { n }
    }

    pub fn len(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, a: usize, b: usize) -> usize {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        debug_assert!(i != j && j < self.n);
        j * (j - 1) / 2 + i
    }

    pub fn pair(&self, index: usize) -> (usize, usize) {
        // largest j with j(j-1)/2 <= index
        let mut j = (((8 * index + 1) as f64).sqrt() as usize).div_ceil(2);
        while j * (j - 1) / 2 > index {
            j -= 1;
        }
        while (j + 1) * j / 2 <= index {
            j += 1;
        }
        (index - j * (j - 1) / 2, j)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
    }
}

/// `dim W_n = n(n-3)/2`.
pub fn dim_22(n: usize) -> usize {
    n * n.saturating_sub(3) / 2
}

fn require_rep(n: usize) -> Result<()> {
    if n <= 3 {
        Err(Error::RepresentationAbsent { n })
    } else {
        Ok(())
    }
}

/// Matrix of `X_G` on `V_n` in the colex pair basis.
///
/// Column `ab` has diagonal `m - d_a - d_b + 2[ab in E]` and a unit entry at
/// `bc` for each edge `ac` (`c != b`) and at `ac` for each edge `bc` (`c != a`).
pub fn build_full_operator(g: &Graph) -> IntMatrix {
    let n = g.n();
    let idx = PairIndex::new(n);
    let m = g.m() as i64;
    let deg = g.degrees();
    let mut x = IntMatrix::zeros(idx.len(), idx.len());
    for (a, b) in idx.pairs() {
        let col = idx.index(a, b);
        let diag = m - deg[a] as i64 - deg[b] as i64 + 2 * g.has_edge(a, b) as i64;
        x.set(col, col, diag);
        for c in g.neighbors(a).filter(|&c| c != b) {
            x.add_to(idx.index(b, c), col, 1);
        }
        for c in g.neighbors(b).filter(|&c| c != a) {
            x.add_to(idx.index(a, c), col, 1);
        }
    }
    x
}

/// `mI - L_G`, the action of `X_G` on the vertex permutation module.
pub fn build_vertex_operator(g: &Graph) -> IntMatrix {
    let mut v = IntMatrix::zeros(g.n(), g.n());
    let l = laplacian(g);
    for i in 0..g.n() {
        for j in 0..g.n() {
            let delta = if i == j { g.m() as i64 } else { 0 };
            v.set(i, j, delta - l.get_i64(i, j));
        }
    }
    v
}

/// Star vector `E_i` in the pair basis.
pub fn star_vector(n: usize, i: usize) -> Vec<f64> {
    let idx = PairIndex::new(n);
    let mut v = vec![0.0; idx.len()];
    for j in (0..n).filter(|&j| j != i) {
        v[idx.index(i, j)] = 1.0;
    }
    v
}

/// Orthogonal projector onto `W_n`, the complement of the star span.
///
/// With `S` the matrix of star vectors, `S^T S = (n-2)I + J`, whose inverse
/// is `(I - J/(2n-2)) / (n-2)`; then `P = I - S (S^T S)^{-1} S^T`.
pub fn w_projector(n: usize) -> Result<RealMatrix> {
    require_rep(n)?;
    let idx = PairIndex::new(n);
    let big_n = idx.len();
    let nf = n as f64;
    let mut p = RealMatrix::identity(big_n);
    for (a, b) in idx.pairs() {
        let row = idx.index(a, b);
        for (c, d) in idx.pairs() {
            let col = idx.index(c, d);
            // (S G^{-1} S^T)_{ab,cd} = sum over i in {a,b}, k in {c,d} of G^{-1}_{ik}
            let mut s = 0.0;
            for i in [a, b] {
                for k in [c, d] {
                    let ginv = (if i == k { 1.0 } else { 0.0 } - 1.0 / (2.0 * nf - 2.0)) / (nf - 2.0);
                    s += ginv;
                }
            }
            p[(row, col)] -= s;
        }
    }
    Ok(p)
}

const GRAM_SCHMIDT_DROP: f64 = 1e-9;

/// Orthonormal basis of `W_n` (columns), from modified Gram-Schmidt on the
/// projector's columns.
pub fn w_basis(n: usize) -> Result<RealMatrix> {
    let p = w_projector(n)?;
    let big_n = p.rows();
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(dim_22(n));
    for j in 0..big_n {
        let mut v = p.column(j);
        for q in &basis {
            let dot: f64 = v.iter().zip(q).map(|(a, b)| a * b).sum();
            for (x, y) in v.iter_mut().zip(q) {
                *x -= dot * y;
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm >= GRAM_SCHMIDT_DROP {
            v.iter_mut().for_each(|x| *x /= norm);
            basis.push(v);
        }
    }
    if basis.len() != dim_22(n) {
        return Err(Error::Inconsistent(format!(
            "W_{n} basis has {} vectors, expected {}",
            basis.len(),
            dim_22(n)
        )));
    }
    Ok(RealMatrix::from_columns(&basis, big_n))
}

fn to_real(m: &IntMatrix) -> RealMatrix {
    RealMatrix::from_rows(&m.to_f64_rows())
}

/// Matrix of `X_G` restricted to `W_n` in the orthonormal basis of [`w_basis`].
pub fn restricted_operator(g: &Graph) -> Result<RealMatrix> {
    let q = w_basis(g.n())?;
    let x = to_real(&build_full_operator(g));
    Ok(&(&q.transpose() * &x) * &q)
}

/// `||(I - P) X P||_F / max(1, ||X||_F)`; zero when `W_n` is invariant.
pub fn invariance_residual(g: &Graph) -> Result<f64> {
    let p = w_projector(g.n())?;
    let x = to_real(&build_full_operator(g));
    let comp = RealMatrix::identity(p.rows()).sub(&p);
    let r = &(&comp * &x) * &p;
    Ok(r.frobenius_norm() / x.frobenius_norm().max(1.0))
}

/// Sorted `(n-2,2)` eigenvalues.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum22 {
    pub eigenvalues: Vec<f64>,
    pub tolerance: f64,
}

/// Default tolerance for the numeric eigensolver.
pub const DEFAULT_TOL: f64 = 1e-10;

pub fn spectrum_22(g: &Graph, tol: f64) -> Result<Spectrum22> {
    let a = restricted_operator(g)?;
    let eig = symmetric_eigen(&a, tol.min(1e-13))?;
    let scale = a.frobenius_norm();
    for (k, &lambda) in eig.values.iter().enumerate() {
        let v = eig.vectors.column(k);
        let av = a.mul_vec(&v);
        let res = av
            .iter()
            .zip(&v)
            .map(|(x, y)| (x - lambda * y).powi(2))
            .sum::<f64>()
            .sqrt();
        if res > tol * scale.max(1.0) {
            return Err(Error::NonConvergence {
                sweeps: eig.sweeps,
                off_norm: res,
            });
        }
    }
    Ok(Spectrum22 {
        eigenvalues: eig.values,
        tolerance: tol,
    })
}

/// The three polynomials of the factorization
/// `charpoly(X on V_n) = charpoly(mI - L) * charpoly_22`.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization {
    pub full: IntPolynomial,
    pub vertex: IntPolynomial,
    pub part_22: IntPolynomial,
}

pub fn charpoly_factorization(g: &Graph) -> Result<Factorization> {
    require_rep(g.n())?;
    let full = charpoly_exact(&build_full_operator(g));
    let vertex = charpoly_exact(&build_vertex_operator(g));
    let part_22 = full.exact_div(&vertex)?;
    Ok(Factorization {
        full,
        vertex,
        part_22,
    })
}

/// Exact `det(tI - X_G|_{W_n})`, of degree `n(n-3)/2`.
pub fn charpoly_22(g: &Graph) -> Result<IntPolynomial> {
    charpoly_factorization(g).map(|f| f.part_22)
}

/// Checks `charpoly(mI - L)(t) = (-1)^n charpoly(L)(m - t)` exactly, i.e. the
/// vertex-module eigenvalues are `m - mu` for Laplacian eigenvalues `mu`.
pub fn standard_rep_check(g: &Graph) -> bool {
    let lhs = charpoly_exact(&build_vertex_operator(g));
    let mut rhs = charpoly_exact(&laplacian(g)).compose_linear(g.m() as i64, -1);
    if g.n() % 2 == 1 {
        rhs = &IntPolynomial::zero() - &rhs;
    }
    lhs == rhs
}

/// Real roots of `charpoly_22`, sorted, isolated exactly and refined to `tol`.
pub fn charpoly_22_roots(g: &Graph, tol: f64) -> Result<Vec<f64>> {
    real_roots(&charpoly_22(g)?, tol)
}
