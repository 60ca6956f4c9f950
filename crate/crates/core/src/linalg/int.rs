use super::IntPolynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Mul, Sub};

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    /// Entry as `i64`; panics if it does not fit.
    pub fn get_i64(&self, i: usize, j: usize) -> i64 {
        self.get(i, j).to_i64().expect("entry fits in i64")
    }

    pub fn set(&mut self, i: usize, j: usize, value: impl Into<BigInt>) {
        self.data[i * self.cols + j] = value.into();
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.cols + j] += value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get_i64(i, j)).collect())
            .collect()
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_f64().expect("finite entry"))
                    .collect()
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigInt {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    pub fn add_scalar_diagonal(&mut self, c: &BigInt) {
        for i in 0..self.rows.min(self.cols) {
            self.data[i * self.cols + i] += c;
        }
    }

    /// Nonzero entries per row, for matrices with small entries.
    pub(crate) fn sparse_rows(&self) -> Vec<Vec<(usize, i64)>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| (j, x.to_i64().expect("small operator entry")))
                    .collect()
            })
            .collect()
    }

    /// `sparse * dense` where `sparse` comes from [`Self::sparse_rows`].
    pub(crate) fn sparse_mul(sparse: &[Vec<(usize, i64)>], dense: &IntMatrix) -> IntMatrix {
        assert_eq!(sparse.len(), dense.rows);
        let cols = dense.cols;
        let mut out = IntMatrix::zeros(sparse.len(), cols);
        for (i, row) in sparse.iter().enumerate() {
            let target = &mut out.data[i * cols..(i + 1) * cols];
            for &(k, a) in row {
                let src = dense.row(k);
                for (t, s) in target.iter_mut().zip(src) {
                    match a {
                        1 => *t += s,
                        -1 => *t -= s,
                        _ => *t += s * a,
                    }
                }
            }
        }
        out
    }

    /// Power traces `tr(A^1), ..., tr(A^r_max)`.
    pub fn power_traces(&self, r_max: usize) -> Vec<BigInt> {
        assert!(self.is_square());
        let sparse = self.sparse_rows();
        let mut power = IntMatrix::identity(self.rows);
        (0..r_max)
            .map(|_| {
                power = Self::sparse_mul(&sparse, &power);
                power.trace()
            })
            .collect()
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Exact characteristic polynomial `det(tI - A)` by Faddeev-LeVerrier.
///
/// With `M_1 = I`, `M_k = A M_{k-1} + c_{d-k+1} I` and
/// `c_{d-k} = -tr(A M_k) / k`; every division is exact over the integers.
pub fn charpoly_exact(a: &IntMatrix) -> IntPolynomial {
    assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
    let d = a.rows();
    let sparse = a.sparse_rows();
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[d] = BigInt::one();
    let mut m = IntMatrix::zeros(d, d);
    for k in 1..=d {
        m = IntMatrix::sparse_mul(&sparse, &m);
        m.add_scalar_diagonal(&coeffs[d - k + 1]);
        let mut tr = BigInt::zero();
        for (i, row) in sparse.iter().enumerate() {
            for &(j, x) in row {
                tr += m.get(j, i) * x;
            }
        }
        let (q, r) = tr.div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev-LeVerrier division not exact at step {k}");
        coeffs[d - k] = -q;
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// Largest absolute entry, used for scaling tolerances.
pub fn max_abs_entry(a: &IntMatrix) -> BigInt {
    a.data.iter().map(|x| x.abs()).max().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(charpoly_exact(&IntMatrix::zeros(3, 3)), poly(&[0, 0, 0, 1]));
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(charpoly_exact(&swap), poly(&[-1, 0, 1]));
        let lp3 = IntMatrix::from_rows(&[vec![1, -1, 0], vec![-1, 2, -1], vec![0, -1, 1]]);
        assert_eq!(charpoly_exact(&lp3), poly(&[0, 3, -4, 1]));
        assert_eq!(charpoly_exact(&IntMatrix::zeros(0, 0)), poly(&[1]));
    }

    // Cofactor expansion as an independent determinant oracle on small matrices.
    fn det_poly(m: &[Vec<IntPolynomial>]) -> IntPolynomial {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        let mut acc = IntPolynomial::zero();
        for (j, entry) in m[0].iter().enumerate() {
            let minor: Vec<Vec<IntPolynomial>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = entry * &det_poly(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn charpoly_matches_cofactor_expansion() {
        let rows = vec![
            vec![2, -1, 0, 3],
            vec![-1, 0, 4, 1],
            vec![5, 1, -2, 0],
            vec![0, 2, 1, 1],
        ];
        let a = IntMatrix::from_rows(&rows);
        let t_minus: Vec<Vec<IntPolynomial>> = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| {
                        if i == j {
                            poly(&[-x, 1])
                        } else {
                            poly(&[-x])
                        }
                    })
                    .collect()
            })
            .collect();
        assert_eq!(charpoly_exact(&a), det_poly(&t_minus));
    }

    #[test]
    fn power_traces_match_dense_products() {
        let a = IntMatrix::from_rows(&[vec![1, 2, 0], vec![2, -1, 3], vec![0, 3, 4]]);
        let traces = a.power_traces(4);
        let mut p = IntMatrix::identity(3);
        for t in traces {
            p = &p * &a;
            assert_eq!(t, p.trace());
        }
    }
}
