//! Real roots of integer polynomials by exact Sturm-sequence isolation.
//!
//! The polynomial is split into square-free factors (Yun), the roots of each
//! factor are isolated with Sturm counts at rational points, then refined by
//! exact bisection. Multiplicities come from the square-free decomposition.

use super::IntPolynomial;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

type Q = BigRational;

#[derive(Debug, Clone, PartialEq)]
struct QPoly(Vec<Q>);

impl QPoly {
    fn from_int(p: &IntPolynomial) -> Self {
        QPoly(p.coeffs().iter().map(|c| Q::from_integer(c.clone())).collect())
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    fn monic(mut self) -> Self {
        if let Some(lead) = self.0.last().cloned() {
            for c in &mut self.0 {
                *c /= &lead;
            }
        }
        self
    }

    fn derivative(&self) -> Self {
        QPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Q::from_integer(BigInt::from(k)))
                .collect(),
        )
        .trim()
    }

    fn sub(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let zero = Q::zero();
        QPoly(
            (0..len)
                .map(|k| self.0.get(k).unwrap_or(&zero) - other.0.get(k).unwrap_or(&zero))
                .collect(),
        )
        .trim()
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.0[dd].clone();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (QPoly(vec![]), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for j in 0..=dd {
                let delta = &c * &divisor.0[j];
                rem[k + j] -= delta;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (QPoly(quot).trim(), QPoly(rem).trim())
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while b.degree().is_some() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Positive multiple with coprime integer coefficients; signs are kept.
    fn primitive(self) -> Self {
        let den = self.0.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|c| (c * &den).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return self;
        }
        QPoly(ints.into_iter().map(|c| Q::from_integer(c / &g)).collect())
    }
}

/// Square-free factors `(factor, multiplicity)`.
fn yun(f: &QPoly) -> Vec<(QPoly, usize)> {
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let mut b = f.div_rem(&a0).0;
    let mut c = fp.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        d = c.sub(&b.derivative());
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn sturm_chain(f: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![f.clone().primitive(), f.derivative().primitive()];
    loop {
        let n = chain.len();
        if chain[n - 1].degree().is_none_or(|d| d == 0) {
            break;
        }
        let r = chain[n - 2].div_rem(&chain[n - 1]).1;
        if r.degree().is_none() {
            break;
        }
        chain.push(QPoly(r.0.into_iter().map(|c| -c).collect()).primitive());
    }
    chain
}

/// `num / 2^exp`. Every point visited by bisection from integer endpoints
/// is dyadic, which keeps evaluation in integer arithmetic.
#[derive(Debug, Clone)]
struct Dyadic {
    num: BigInt,
    exp: usize,
}

impl Dyadic {
    fn integer(v: BigInt) -> Self {
        Dyadic { num: v, exp: 0 }
    }

    fn mid(a: &Dyadic, b: &Dyadic) -> Dyadic {
        let e = a.exp.max(b.exp);
        Dyadic {
            num: (&a.num << (e - a.exp)) + (&b.num << (e - b.exp)),
            exp: e + 1,
        }
    }

    /// `b - a <= 2^-k`
    fn close(a: &Dyadic, b: &Dyadic, k: usize) -> bool {
        let e = a.exp.max(b.exp);
        let diff = (&b.num << (e - b.exp)) - (&a.num << (e - a.exp));
        (diff << k) <= BigInt::one() << e
    }

    fn to_f64(&self) -> f64 {
        Q::new(self.num.clone(), BigInt::one() << self.exp)
            .to_f64()
            .expect("finite root")
    }
}

/// Sign of `p(x)` for integer coefficients `p`, via `2^(exp deg) p(x)`.
fn sign_at(p: &[BigInt], x: &Dyadic) -> i8 {
    let Some((lead, rest)) = p.split_last() else {
        return 0;
    };
    let d = rest.len();
    let mut acc = lead.clone();
    for (i, c) in rest.iter().enumerate().rev() {
        acc = acc * &x.num + (c << (x.exp * (d - i)));
    }
    match acc.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}

fn sign_changes(chain: &[Vec<BigInt>], x: &Dyadic) -> usize {
    let signs: Vec<i8> = chain.iter().map(|p| sign_at(p, x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Roots in `(lo, hi]` of a square-free polynomial, each refined to `2^-k`.
fn isolate(chain: &[Vec<BigInt>], lo: Dyadic, hi: Dyadic, k: usize, out: &mut Vec<Dyadic>) {
    let count = sign_changes(chain, &lo) - sign_changes(chain, &hi);
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(refine(&chain[0], lo, hi, k));
        return;
    }
    let mid = Dyadic::mid(&lo, &hi);
    isolate(chain, lo, mid.clone(), k, out);
    isolate(chain, mid, hi, k, out);
}

/// Bisection for the unique root in `(lo, hi]`.
fn refine(f: &[BigInt], mut lo: Dyadic, mut hi: Dyadic, k: usize) -> Dyadic {
    // `lo` may itself be a root of `f`, so track the sign at `hi`.
    let s_hi = sign_at(f, &hi);
    if s_hi == 0 {
        return hi;
    }
    while !Dyadic::close(&lo, &hi, k) {
        let mid = Dyadic::mid(&lo, &hi);
        match sign_at(f, &mid) {
            0 => return mid,
            s if s == s_hi => hi = mid,
            _ => lo = mid,
        }
    }
    Dyadic::mid(&lo, &hi)
}

fn integer_coeffs(p: &QPoly) -> Vec<BigInt> {
    p.0.iter().map(|c| c.to_integer()).collect()
}

/// All real roots with multiplicity, sorted ascending.
///
/// Fails if the polynomial has non-real roots (characteristic polynomials of
/// symmetric matrices never do).
pub fn real_roots(p: &IntPolynomial, tol: f64) -> Result<Vec<f64>> {
    let Some(deg) = p.degree() else {
        return Err(Error::Malformed("roots of the zero polynomial".into()));
    };
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Malformed(format!("tolerance {tol} must be positive")));
    }
    let f = QPoly::from_int(p);
    // Cauchy bound: every root has |x| < 1 + max |a_i / a_d|.
    let lead = f.0[deg].abs();
    let bound = f.0[..deg]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(Q::zero(), |m, x| if x > m { x } else { m })
        .ceil()
        .to_integer()
        + BigInt::one();
    let k = (-tol.log2()).ceil().max(0.0) as usize;
    let mut roots = Vec::with_capacity(deg);
    for (factor, mult) in yun(&f) {
        let factor = factor.primitive();
        let chain: Vec<Vec<BigInt>> = sturm_chain(&factor).iter().map(integer_coeffs).collect();
        let mut found = Vec::new();
        isolate(&chain, Dyadic::integer(-bound.clone()), Dyadic::integer(bound.clone()), k, &mut found);
        if found.len() != factor.degree().unwrap() {
            return Err(Error::Inconsistent(format!(
                "factor of degree {} has only {} real roots",
                factor.degree().unwrap(),
                found.len()
            )));
        }
        for r in found {
            roots.extend(std::iter::repeat_n(r.to_f64(), mult));
        }
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn simple_and_repeated_roots() {
        let r = real_roots(&p(&[-3, 0, 1]), 1e-14).unwrap();
        assert!((r[0] + 3f64.sqrt()).abs() < 1e-12 && (r[1] - 3f64.sqrt()).abs() < 1e-12);
        assert_eq!(real_roots(&p(&[0, 0, 0, 1]), 1e-14).unwrap(), vec![0.0; 3]);
        // (t-1)^2 (t+2)^3 t
        let mut f = p(&[0, 1]);
        for _ in 0..2 {
            f = &f * &p(&[-1, 1]);
        }
        for _ in 0..3 {
            f = &f * &p(&[2, 1]);
        }
        let r = real_roots(&f, 1e-14).unwrap();
        let want = [-2.0, -2.0, -2.0, 0.0, 1.0, 1.0];
        assert_eq!(r.len(), want.len());
        assert!(r.iter().zip(want).all(|(x, y)| (x - y).abs() < 1e-12), "{r:?}");
    }

    #[test]
    fn root_on_a_bisection_point() {
        // t^2 (t - 2)^2 (t + 2): the factor t(t - 2) splits at 0 first
        let f = &(&p(&[0, 0, 1]) * &p(&[4, -4, 1])) * &p(&[2, 1]);
        let r = real_roots(&f, 1e-14).unwrap();
        let want = [-2.0, 0.0, 0.0, 2.0, 2.0];
        assert!(r.iter().zip(want).all(|(x, y)| (x - y).abs() < 1e-12), "{r:?}");
    }

    #[test]
    fn rejects_complex_roots() {
        assert!(real_roots(&p(&[1, 0, 1]), 1e-12).is_err());
        assert!(real_roots(&IntPolynomial::zero(), 1e-12).is_err());
    }
}
