//! q-combinatorial primitives: Gaussian binomial coefficients in bases
//! `q`, `q^2` and `1/q`, q-Pochhammer products, and q-integers.
//!
//! `[n k] = (1-q^{n-k+1})...(1-q^n) / ((1-q)...(1-q^k))`, a polynomial of
//! degree `k(n-k)` that reduces to `C(n,k)` at `q = 1`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

fn binomial_cache() -> &'static RwLock<HashMap<(i64, i64), Arc<LaurentPoly>>> {
    static CACHE: std::sync::OnceLock<RwLock<HashMap<(i64, i64), Arc<LaurentPoly>>>> =
        std::sync::OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The Gaussian binomial coefficient `[n k]` as an exact polynomial.
///
/// Returns zero for `k < 0` or `k > n`. Negative `n` is rejected: none of
/// the identities here need it and no extension is canonical.
///
/// Computed by the product formula with stepwise exact division,
/// `b_{i} = b_{i-1} * (1 - q^{n-k+i}) / (1 - q^i)`, memoized on `(n, k)`.
/// The Pascal recurrences serve as independent oracles in the test suite.
pub fn gauss_binomial(n: i64, k: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::UnsupportedIndex(n));
    }
    if k < 0 || k > n {
        return Ok(LaurentPoly::zero());
    }
    let k = k.min(n - k); // symmetry [n k] = [n n-k]
    if let Some(hit) = binomial_cache().read().unwrap().get(&(n, k)) {
        return Ok((**hit).clone());
    }
    // Dense kernel on a flat coefficient vector: every partial product
    // prod_{j<=i} (1-q^{n-k+j})/(1-q^j) is itself the binomial [n-k+i, i],
    // so each step stays a dense polynomial of degree i(n-k).
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for i in 1..=k {
        // multiply by (1 - q^{n-k+i})
        let e = (n - k + i) as usize;
        let old_len = c.len();
        c.resize(old_len + e, BigInt::zero());
        for t in (e..old_len + e).rev() {
            let sub = c[t - e].clone();
            c[t] -= sub;
        }
        // divide by (1 - q^i): g[t] = f[t] + g[t-i], degree drops by i
        let e = i as usize;
        for t in e..c.len() {
            let add = c[t - e].clone();
            c[t] += add;
        }
        c.truncate(c.len() - e);
    }
    let b = LaurentPoly::from_terms(c.into_iter().enumerate().map(|(t, v)| (t as i64, v)));
    binomial_cache()
        .write()
        .unwrap()
        .entry((n, k))
        .or_insert_with(|| Arc::new(b.clone()));
    Ok(b)
}

/// `[n k]` with the base substitution `q -> q^m`; `m = 2` gives the
/// `q^2`-binomials of the even/odd evaluations, `m = -1` the `1/q`-binomials
/// of the lower q-Fibonacci polynomials.
pub fn gauss_binomial_base(n: i64, k: i64, m: i64) -> Result<LaurentPoly> {
    Ok(gauss_binomial(n, k)?.substitute_power(m))
}

/// `1 - q^e`.
pub fn one_minus_q_pow(e: i64) -> LaurentPoly {
    &LaurentPoly::one() - &LaurentPoly::term(1, e)
}

/// The q-Pochhammer `(q; q)_n = prod_{i=1}^{n} (1 - q^i)`.
pub fn pochhammer_qq(n: i64) -> LaurentPoly {
    assert!(n >= 0);
    pochhammer_general(1, 1, n)
}

/// `prod_{i=0}^{n-1} (1 - q^{start_exp + i*step})`; the empty product is 1.
pub fn pochhammer_general(start_exp: i64, step: i64, n: i64) -> LaurentPoly {
    assert!(n >= 0);
    let mut out = LaurentPoly::one();
    for i in 0..n {
        out = &out * &one_minus_q_pow(start_exp + i * step);
    }
    out
}

/// `prod_{i=1}^{n} (1 + q^i)`, the `(-q; q)_n` factor of the Theorem 2 sums.
pub fn product_one_plus(n: i64) -> LaurentPoly {
    assert!(n >= 0);
    let mut out = LaurentPoly::one();
    for i in 1..=n {
        out = &out * &(&LaurentPoly::one() + &LaurentPoly::term(1, i));
    }
    out
}

/// The q-integer `[m] = 1 + q + ... + q^{m-1}`; `[0] = 0`.
pub fn q_int(m: i64) -> LaurentPoly {
    assert!(m >= 0);
    LaurentPoly::from_terms((0..m).map(|e| (e, BigInt::one())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::LaurentPoly;
    use num_bigint::BigInt;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    /// Independent oracle: Pascal recurrence [n k] = [n-1 k] + q^{n-k} [n-1 k-1],
    /// computed row by row with no division and no cache.
    pub(crate) fn pascal_oracle(n: i64, k: i64) -> LaurentPoly {
        if k < 0 || k > n {
            return LaurentPoly::zero();
        }
        let mut row = vec![LaurentPoly::one()];
        for m in 1..=n {
            let mut next = Vec::with_capacity(row.len() + 1);
            for j in 0..=m {
                let a = if j <= m - 1 { row[j as usize].clone() } else { LaurentPoly::zero() };
                let b = if j >= 1 {
                    row[(j - 1) as usize].shift(m - j)
                } else {
                    LaurentPoly::zero()
                };
                next.push(&a + &b);
            }
            row = next;
        }
        row[k as usize].clone()
    }

    #[test]
    fn small_binomials() {
        assert_eq!(gauss_binomial(3, 1).unwrap(), p(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(
            gauss_binomial(4, 2).unwrap(),
            p(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)])
        );
        assert_eq!(gauss_binomial(2, 3).unwrap(), LaurentPoly::zero());
        assert_eq!(gauss_binomial(5, 0).unwrap(), LaurentPoly::one());
        assert_eq!(gauss_binomial(-1, 0), Err(Error::UnsupportedIndex(-1)));
    }

    #[test]
    fn matches_pascal_oracle() {
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(gauss_binomial(n, k).unwrap(), pascal_oracle(n, k), "[{n} {k}]");
            }
        }
    }

    #[test]
    fn base_substitutions() {
        assert_eq!(gauss_binomial_base(2, 1, 2).unwrap(), p(&[(0, 1), (2, 1)]));
        assert_eq!(gauss_binomial_base(2, 1, -1).unwrap(), p(&[(-1, 1), (0, 1)]));
        // [n k]_{1/q} = q^{-k(n-k)} [n k]
        assert_eq!(
            gauss_binomial_base(4, 2, -1).unwrap(),
            gauss_binomial(4, 2).unwrap().shift(-4)
        );
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer_qq(0), LaurentPoly::one());
        assert_eq!(pochhammer_qq(2), p(&[(0, 1), (1, -1), (2, -1), (3, 1)]));
        assert_eq!(
            pochhammer_qq(3),
            p(&[(0, 1), (1, -1), (2, -1), (4, 1), (5, 1), (6, -1)])
        );
        assert_eq!(
            pochhammer_general(2, 2, 2),
            &one_minus_q_pow(2) * &one_minus_q_pow(4)
        );
        assert_eq!(
            pochhammer_general(1, 2, 3),
            &(&one_minus_q_pow(1) * &one_minus_q_pow(3)) * &one_minus_q_pow(5)
        );
        assert_eq!(pochhammer_general(7, 3, 0), LaurentPoly::one());
    }

    #[test]
    fn q_int_values() {
        assert_eq!(q_int(1), LaurentPoly::one());
        assert_eq!(q_int(3), p(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(q_int(0), LaurentPoly::zero());
    }
}
