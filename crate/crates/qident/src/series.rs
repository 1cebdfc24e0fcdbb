//! Truncated formal power series in `q` with integer coefficients.
//!
//! All "infinite" objects -- the pentagonal product `prod (1-q^n)`, its
//! theta-series expansion, and the shifted bilateral sums behind the
//! `L -> infinity` limits -- live here as series modulo `q^{N+1}`.
//! Bilateral sums whose exponents dip below zero are returned together
//! with an explicit global shift instead of as Laurent series.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// A power series in `q` truncated at order `N`: coefficients of
/// `q^0 .. q^N`. Arithmetic on mixed orders truncates to the smaller one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn common_order(&self, rhs: &Self) -> usize {
        self.order().min(rhs.order())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.common_order(rhs);
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.common_order(rhs);
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.common_order(rhs);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiply by the sparse polynomial `1 - q^e` (`e >= 1`) in place-order.
    fn mul_one_minus_q_pow(&self, e: usize) -> Self {
        let n = self.order();
        let mut coeffs = self.coeffs.clone();
        for i in e..=n {
            let t = self.coeffs[i - e].clone();
            coeffs[i] -= t;
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse up to the truncation order. The constant term
    /// must be a unit of `Z`, i.e. +1 or -1.
    pub fn invert(&self) -> Result<TruncatedSeries> {
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let n = self.order();
        let mut inv = vec![BigInt::zero(); n + 1];
        inv[0] = c0.clone(); // 1/c0 = c0 for c0 = +-1
        for i in 1..=n {
            let mut acc = BigInt::zero();
            for j in 1..=i {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &inv[i - j];
                }
            }
            inv[i] = -acc * c0;
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// View the series as a polynomial (exact up to the truncation order).
    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone())),
        )
    }
}

/// Copy the coefficients of `p` up to order `N`. Fails with
/// `NegativeExponent` if `p` is genuinely Laurent.
pub fn series_from_poly(p: &LaurentPoly, order: usize) -> Result<TruncatedSeries> {
    if p.min_exp().map_or(false, |e| e < 0) {
        return Err(Error::NegativeExponent);
    }
    let mut s = TruncatedSeries::zero(order);
    for (e, c) in p.terms() {
        if e as usize <= order {
            s.coeffs[e as usize] = c.clone();
        }
    }
    Ok(s)
}

/// `prod_{i >= 0, start + i*step <= N} (1 - q^{start + i*step})` truncated
/// at order `N`; factors beyond the order are invisible and omitted.
pub fn product_family(start: i64, step: i64, order: usize) -> TruncatedSeries {
    assert!(start >= 1 && step >= 1);
    let mut s = TruncatedSeries::one(order);
    let mut e = start;
    while e as usize <= order {
        s = s.mul_one_minus_q_pow(e as usize);
        e += step;
    }
    s
}

/// The pentagonal theta series `sum_j (-1)^j q^{j(3j+1)/2}` truncated at `N`.
pub fn pentagonal_theta(order: usize) -> TruncatedSeries {
    let (s, shift) = shifted_theta(0, order);
    debug_assert_eq!(shift, 0);
    s
}

fn theta_exponent(j: i64, m: i64) -> i64 {
    j * (3 * j + 1) / 2 + m * j
}

fn neg_one_pow(j: i64) -> BigInt {
    if j.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// The bilateral sum `sum_{j in Z} (-1)^j q^{j(3j+1)/2 + m*j}` as a pair
/// `(series, shift)`: the sum equals `q^shift * series`, with `shift` the
/// minimal exponent of a surviving term (0 for the identically-zero sums,
/// which occur exactly for `m = 1 mod 3`).
pub fn shifted_theta(m: i64, order: usize) -> (TruncatedSeries, i64) {
    // Vertex of the exponent parabola; the global minimum over Z is at one
    // of the two neighbouring integers.
    let j0 = (-(1 + 2 * m) as f64) / 6.0;
    let lo = j0.floor() as i64;
    let min_exp = theta_exponent(lo, m).min(theta_exponent(lo + 1, m));

    let collect = |hi_exp: i64| {
        let mut acc: std::collections::BTreeMap<i64, BigInt> = std::collections::BTreeMap::new();
        for dir in [-1i64, 1] {
            let mut j = if dir < 0 { lo } else { lo + 1 };
            while theta_exponent(j, m) <= hi_exp {
                let e = theta_exponent(j, m);
                let entry = acc.entry(e).or_insert_with(BigInt::zero);
                *entry += neg_one_pow(j);
                if entry.is_zero() {
                    acc.remove(&e);
                }
                j += dir;
            }
        }
        acc
    };

    let mut acc = collect(min_exp + order as i64);
    // If the minimal terms cancelled, the surviving minimum sits higher and
    // the window must be widened to keep `order + 1` coefficients.
    if let Some(&shift) = acc.keys().next() {
        if shift > min_exp {
            acc = collect(shift + order as i64);
        }
    }

    match acc.keys().next().copied() {
        None => (TruncatedSeries::zero(order), 0),
        Some(shift) => {
            let mut s = TruncatedSeries::zero(order);
            for (e, c) in acc {
                let i = (e - shift) as usize;
                if i <= order {
                    s.coeffs[i] = c;
                }
            }
            (s, shift)
        }
    }
}

/// Check the Jacobi-triple-product evaluation of the shifted theta sum:
/// `shifted_theta(m)` must equal
/// `prod_{n>=0} (1 - q^{3n+2+m}) (1 - q^{3n+1-m}) (1 - q^{3n+3})`
/// up to order `N`. Factors `1 - q^{-e}` with negative exponent are
/// normalized as `-q^{-e} (1 - q^e)` before truncation; a factor
/// `1 - q^0` makes the product identically zero.
pub fn triple_product_check(m: i64, order: usize) -> bool {
    let (lhs, lhs_shift) = shifted_theta(m, order);

    let mut shift = 0i64;
    let mut negate = false;
    let mut s = TruncatedSeries::one(order);

    // Middle family 1 - q^{3n+1-m}: finitely many non-positive exponents.
    let mut n = 0;
    while 3 * n + 1 - m <= 0 {
        let e = 3 * n + 1 - m;
        if e == 0 {
            // zero factor: the whole product vanishes
            return lhs.is_zero() && lhs_shift == 0;
        }
        shift += e;
        negate = !negate;
        if (-e) as usize <= order {
            s = s.mul_one_minus_q_pow((-e) as usize);
        }
        n += 1;
    }
    while (3 * n + 1 - m) as usize <= order {
        s = s.mul_one_minus_q_pow((3 * n + 1 - m) as usize);
        n += 1;
    }
    // First family 1 - q^{3n+2+m} (m >= 0 keeps these positive).
    let mut e = 2 + m;
    while e as usize <= order {
        s = s.mul_one_minus_q_pow(e as usize);
        e += 3;
    }
    // Third family 1 - q^{3n+3}.
    let mut e = 3;
    while e as usize <= order {
        s = s.mul_one_minus_q_pow(e as usize);
        e += 3;
    }
    if negate {
        s = s.neg();
    }

    lhs_shift == shift && lhs == s
}
