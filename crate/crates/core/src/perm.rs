//! Permutations of `{0..n-1}`, cycle types, and the character of the
//! irreducible `(n-2,2)` representation.
//!
//! Composition follows `(s * t)(x) = s(t(x))`: in a product of
//! transpositions the rightmost factor acts first.

use crate::error::{Error, Result};
use crate::graph::Edge;
use std::collections::BTreeMap;
use std::ops::Mul;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Checks that `images` is a bijection of `{0..len-1}`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::Malformed(format!("{x} appears twice in images")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn transposition(e: Edge, n: usize) -> Result<Self> {
        if e.v >= n {
            return Err(Error::IndexOutOfRange { index: e.v, n });
        }
        let mut p = Self::identity(n);
        p.images.swap(e.u, e.v);
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// In-place right multiplication by the transposition `(a b)`.
    pub fn mul_transposition_right(&mut self, a: usize, b: usize) {
        self.images.swap(a, b);
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut counts = BTreeMap::new();
        let mut visited = vec![false; self.n()];
        for start in 0..self.n() {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                x = self.images[x];
                len += 1;
            }
            *counts.entry(len).or_insert(0) += 1;
        }
        CycleType { n: self.n(), counts }
    }

    /// Fixed points and two-cycles, the only data the character needs.
    pub fn fixed_and_two_cycles(&self) -> (usize, usize) {
        let mut c1 = 0;
        let mut c2 = 0;
        for (i, &x) in self.images.iter().enumerate() {
            if x == i {
                c1 += 1;
            } else if self.images[x] == i {
                c2 += 1;
            }
        }
        (c1, c2 / 2)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.n(), rhs.n(), "composing permutations of different size");
        Permutation {
            images: rhs.images.iter().map(|&x| self.images[x]).collect(),
        }
    }
}

/// `tau_{e_1} ... tau_{e_r}`; the last edge of the word acts first.
pub fn word_product(word: &[Edge], n: usize) -> Result<Permutation> {
    let mut p = Permutation::identity(n);
    for e in word {
        if e.v >= n {
            return Err(Error::IndexOutOfRange { index: e.v, n });
        }
        p.mul_transposition_right(e.u, e.v);
    }
    Ok(p)
}

/// Multiplicities of cycle lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    pub n: usize,
    pub counts: BTreeMap<usize, usize>,
}

impl CycleType {
    /// Cycle type from a list of cycle lengths >= 2, padded with fixed points.
    pub fn from_cycles(n: usize, lengths: &[usize]) -> Option<Self> {
        let moved: usize = lengths.iter().sum();
        if moved > n || lengths.iter().any(|&l| l < 2) {
            return None;
        }
        let mut counts = BTreeMap::new();
        for &l in lengths {
            *counts.entry(l).or_insert(0) += 1;
        }
        if n > moved {
            counts.insert(1, n - moved);
        }
        Some(CycleType { n, counts })
    }

    pub fn count(&self, len: usize) -> usize {
        self.counts.get(&len).copied().unwrap_or(0)
    }

    pub fn fixed_points(&self) -> usize {
        self.count(1)
    }

    pub fn two_cycles(&self) -> usize {
        self.count(2)
    }
}

/// `chi(sigma) = C(c1, 2) + c2 - c1` from fixed-point and 2-cycle counts.
pub fn character_from_counts(c1: usize, c2: usize) -> i64 {
    let c1 = c1 as i64;
    c1 * (c1 - 1) / 2 + c2 as i64 - c1
}

pub fn character_22(ct: &CycleType) -> Result<i64> {
    if ct.n <= 3 {
        return Err(Error::RepresentationAbsent { n: ct.n });
    }
    Ok(character_from_counts(ct.fixed_points(), ct.two_cycles()))
}

/// Closed-form character values on the cycle types used by the low moments.
///
/// Every field is the closed-form polynomial in `n`. A cycle type that moves
/// more than `n` points does not occur in `S_n`; [`Self::applicable`] reports
/// this, and the polynomial value is then only meaningful as a formal weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedCharacterValues {
    pub n: usize,
    /// dimension n(n-3)/2 (value at the identity)
    pub dim: i64,
    /// transposition
    pub c2: i64,
    /// 3-cycle
    pub alpha: i64,
    /// two disjoint transpositions
    pub beta: i64,
    pub c4: i64,
    pub c32: i64,
    pub c222: i64,
}

impl ClosedCharacterValues {
    /// Whether the cycle type (given by its nontrivial cycle lengths) fits in `n` points.
    pub fn applicable(&self, cycles: &[usize]) -> bool {
        cycles.iter().sum::<usize>() <= self.n
    }
}

pub fn closed_character_values(n: usize) -> Result<ClosedCharacterValues> {
    if n < 4 {
        return Err(Error::RepresentationAbsent { n });
    }
    let k = n as i64;
    Ok(ClosedCharacterValues {
        n,
        dim: k * (k - 3) / 2,
        c2: (k - 3) * (k - 4) / 2,
        alpha: (k * k - 9 * k + 18) / 2,
        beta: (k * k - 11 * k + 32) / 2,
        c4: (k * k - 11 * k + 28) / 2,
        c32: (k * k - 13 * k + 42) / 2,
        c222: (k * k - 15 * k + 60) / 2,
    })
}
