//! Finite generalizations of Euler's pentagonal number theorem.
//!
//! The central object is the finite sum
//!
//! ```text
//! h(L, k) = sum_{j=-L}^{2L} (-1)^j q^{j(3j+1)/2 + kj} [2L-j, L+j]
//! ```
//!
//! which specializes to the Berkovich-Garvan evaluation `h(L, 0) = 1`.
//! [`h_closed`] is its closed form: a `k+1`-term sum over q-binomials
//! weighted by the sparse signed monomial sequence [`w_seq`]. The closed
//! form holds with the *reciprocal* variant of `w` (exponent `-n(n-1)/6`);
//! the variant with exponent `+n(n-1)/6` is kept so that its disagreement
//! with the brute-force sum is itself a testable fact.
//!
//! The supporting cast: the q-Fibonacci polynomials [`qfib_F`] (at `x = 1`,
//! extended to negative index), their `1/q` images [`f_lower`], and the
//! bivariate family [`G_direct`]/[`G_extended`] whose `s = -q` evaluations
//! collapse to `w`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{BivarPoly, LaurentPoly, Monomial};
use crate::qcomb::{gauss_binomial, gauss_binomial_base};

/// Which exponent sign the `w` sequence carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum WVariant {
    /// `w(n) = (-1)^{floor(n/3)} q^{+n(n-1)/6}`, zero for `n = 2 mod 3`.
    AsPrinted,
    /// The `q -> 1/q` image, exponent `-n(n-1)/6`. This is the variant the
    /// brute-force sum forces in the closed form, hence the default.
    #[default]
    Reciprocal,
}

fn half(a: i64, b: i64) -> i64 {
    debug_assert_eq!((a * b) % 2, 0);
    a * b / 2
}

/// `C(a, 2) = a(a-1)/2` for any integer `a`.
fn choose2(a: i64) -> i64 {
    half(a, a - 1)
}

fn sign_pow(j: i64) -> i64 {
    if j.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The sparse signed monomial sequence `w(n)`, defined for all integers:
/// zero for `n = 2 (mod 3)`, otherwise `(-1)^{floor(n/3)} q^{+-n(n-1)/6}`
/// with the exponent sign chosen by `variant`. Floor is toward minus
/// infinity and the residue is taken in `{0, 1, 2}`; this is the only
/// convention under which the reflection `w(-n) = w(n+1)` holds.
pub fn w_seq(n: i64, variant: WVariant) -> LaurentPoly {
    if n.rem_euclid(3) == 2 {
        return LaurentPoly::zero();
    }
    let sign = sign_pow(n.div_euclid(3));
    let e6 = n * (n - 1) / 6;
    let e = match variant {
        WVariant::AsPrinted => e6,
        WVariant::Reciprocal => -e6,
    };
    LaurentPoly::term(sign, e)
}

/// Brute-force evaluation of `h(L, k)` by direct summation over
/// `j = -L .. 2L`. Genuinely Laurent: exponents `j(3j+1)/2 + kj` go
/// negative for `j < 0`.
pub fn h_direct(big_l: i64, k: i64) -> LaurentPoly {
    assert!(big_l >= 0 && k >= 0);
    let mut acc = LaurentPoly::zero();
    for j in -big_l..=2 * big_l {
        let b = gauss_binomial(2 * big_l - j, big_l + j).expect("2L - j >= 0");
        if b.is_zero() {
            continue;
        }
        let e = half(j, 3 * j + 1) + k * j;
        acc = &acc + &b.mul_term(&BigInt::from(sign_pow(j)), e);
    }
    acc
}

/// The closed form of `h(L, k)`:
/// `sum_{j=0}^{k} q^{C(j+1,2) + jL} [k j] (-1)^j w(-k-j)`, with `w` taken
/// in the given variant. Equals [`h_direct`] exactly for the
/// [`WVariant::Reciprocal`] variant.
pub fn h_closed_with(big_l: i64, k: i64, variant: WVariant) -> LaurentPoly {
    assert!(big_l >= 0 && k >= 0);
    let mut acc = LaurentPoly::zero();
    for j in 0..=k {
        let w = w_seq(-k - j, variant);
        if w.is_zero() {
            continue;
        }
        let b = gauss_binomial(k, j).expect("k >= 0");
        let term = (&b * &w).mul_term(&BigInt::from(sign_pow(j)), choose2(j + 1) + j * big_l);
        acc = &acc + &term;
    }
    acc
}

/// [`h_closed_with`] in the working (reciprocal) variant.
pub fn h_closed(big_l: i64, k: i64) -> LaurentPoly {
    h_closed_with(big_l, k, WVariant::Reciprocal)
}

/// The q-Fibonacci polynomial `F_n(1, s)`, for all integer `n`:
/// `sum_k [n-k-1, k] q^{C(k+1,2)} s^k` for `n >= 0`, and the reflection
/// `F_{-n}(1, s) = (-1)^{n-1} F_n(1, s) / s^n` for negative index.
pub fn qfib_f(n: i64) -> BivarPoly {
    if n < 0 {
        let m = -n;
        return qfib_f(m).mul_term(
            &LaurentPoly::term(sign_pow(m - 1), 0),
            0,
            -m,
        );
    }
    let mut acc = BivarPoly::zero();
    let mut k = 0;
    while 2 * k <= n - 1 {
        let b = gauss_binomial(n - k - 1, k).expect("n - k - 1 >= 0");
        acc = &acc + &BivarPoly::monomial_s(b.shift(choose2(k + 1)), k);
        k += 1;
    }
    acc
}

/// The lower q-Fibonacci polynomial `f_n(s) = F_n(1, s)|_{q -> 1/q}`.
/// For `n >= 0` this is the explicit sum
/// `sum_k [n-1-k, k]_{1/q} q^{-C(k+1,2)} s^k`; negative `n` goes through
/// the reflection of [`qfib_f`].
pub fn f_lower(n: i64) -> BivarPoly {
    if n < 0 {
        return qfib_f(n).substitute_power_q(-1);
    }
    let mut acc = BivarPoly::zero();
    let mut k = 0;
    while 2 * k <= n - 1 {
        let b = gauss_binomial_base(n - 1 - k, k, -1).expect("n - 1 - k >= 0");
        acc = &acc + &BivarPoly::monomial_s(b.shift(-choose2(k + 1)), k);
        k += 1;
    }
    acc
}

/// Direct summation of the bivariate family
/// `G(L, i, s) = sum_{j=-L}^{2L+i} s^j q^{j(3j-1)/2 - ij} [2L+i-j, L+j]`.
/// Defined only when the index range is nonempty, i.e. `2L + i >= -L`.
pub fn g_direct(big_l: i64, i: i64) -> Result<BivarPoly> {
    assert!(big_l >= 0);
    if 2 * big_l + i < -big_l {
        return Err(Error::EmptyRange(big_l, i));
    }
    let mut acc = BivarPoly::zero();
    for j in -big_l..=2 * big_l + i {
        let b = gauss_binomial(2 * big_l + i - j, big_l + j).expect("2L + i - j >= 0");
        if b.is_zero() {
            continue;
        }
        acc = &acc + &BivarPoly::monomial_s(b.shift(half(j, 3 * j - 1) - i * j), j);
    }
    Ok(acc)
}

/// `G(L, i, s)` through the q-Fibonacci closed form
/// `q^{L(3L+1)/2 + iL} s^{-L} f_{3L+i+1}(s)`, valid for every integer `i`
/// (this is how `G` extends below the direct sum's range).
pub fn g_extended(big_l: i64, i: i64) -> BivarPoly {
    assert!(big_l >= 0);
    f_lower(3 * big_l + i + 1).mul_term(
        &LaurentPoly::one(),
        half(big_l, 3 * big_l + 1) + i * big_l,
        -big_l,
    )
}

/// The `L -> infinity` limit of `h(L, m)`: the `j = 0` term of the closed
/// form, `w(-m)` in the reciprocal variant. Zero exactly when
/// `m = 1 (mod 3)`; otherwise a single signed monomial with non-positive
/// exponent. The series identity
/// `shifted_theta(m) = h_limit(m) * prod (1 - q^n)` is the justification
/// and lives in the verification suites.
pub fn h_limit(m: i64) -> LaurentPoly {
    assert!(m >= 0);
    w_seq(-m, WVariant::Reciprocal)
}

/// `(A_{n,0}, A_{n,1}, A_{n,2})` with `A_{n,i} = sum_{j = i (mod 3)} C(n, j)`
/// over ordinary binomial coefficients.
pub fn binomial_class_sums(n: i64) -> (BigInt, BigInt, BigInt) {
    assert!(n >= 0);
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::one()];
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    let mut sums = [BigInt::from(0), BigInt::from(0), BigInt::from(0)];
    for (j, c) in row.into_iter().enumerate() {
        sums[j % 3] += c;
    }
    let [a0, a1, a2] = sums;
    (a0, a1, a2)
}

/// Evaluate `G(L, n, -q)`; equals `w(n)` in the reciprocal variant,
/// independently of `L`.
pub fn g_at_neg_q(big_l: i64, n: i64) -> LaurentPoly {
    g_extended(big_l, n).substitute_s(Monomial::neg_q_pow(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::LaurentPoly;
    use num_bigint::BigInt;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn w_seq_values() {
        for v in [WVariant::AsPrinted, WVariant::Reciprocal] {
            assert_eq!(w_seq(0, v), LaurentPoly::one());
            assert_eq!(w_seq(2, v), LaurentPoly::zero());
        }
        assert_eq!(w_seq(3, WVariant::AsPrinted), p(&[(1, -1)]));
        assert_eq!(w_seq(3, WVariant::Reciprocal), p(&[(-1, -1)]));
        assert_eq!(w_seq(4, WVariant::AsPrinted), p(&[(2, -1)]));
        assert_eq!(w_seq(-2, WVariant::Reciprocal), p(&[(-1, -1)]));
    }

    #[test]
    fn w_reflection() {
        for v in [WVariant::AsPrinted, WVariant::Reciprocal] {
            for n in -30..=30 {
                assert_eq!(w_seq(-n, v), w_seq(n + 1, v), "n = {n}");
            }
        }
    }

    #[test]
    fn h_direct_small() {
        for big_l in 0..=8 {
            assert_eq!(h_direct(big_l, 0), LaurentPoly::one(), "L = {big_l}");
        }
        for k in 0..=6 {
            assert_eq!(h_direct(0, k), LaurentPoly::one(), "k = {k}");
        }
        assert_eq!(h_direct(1, 1), p(&[(1, 1)]));
        for big_l in 1..=8 {
            let expected = &p(&[(-1, -1)])
                + &gauss_binomial(2, 1).unwrap().shift(big_l - 1);
            assert_eq!(h_direct(big_l, 2), expected, "L = {big_l}");
        }
    }

    #[test]
    fn h_closed_matches_direct() {
        for big_l in 0..=6 {
            for k in 0..=8 {
                assert_eq!(h_closed(big_l, k), h_direct(big_l, k), "L = {big_l}, k = {k}");
            }
        }
    }

    #[test]
    fn h_closed_printed_variant_disagrees() {
        // The +n(n-1)/6 exponent variant breaks the closed form for k >= 2.
        assert_ne!(h_closed_with(1, 2, WVariant::AsPrinted), h_direct(1, 2));
    }

    #[test]
    fn qfib_values() {
        assert_eq!(qfib_f(0), BivarPoly::zero());
        assert_eq!(qfib_f(1), BivarPoly::one());
        assert_eq!(
            qfib_f(3),
            BivarPoly::from_terms([(0, LaurentPoly::one()), (1, p(&[(1, 1)]))])
        );
        assert_eq!(qfib_f(-1), BivarPoly::monomial_s(LaurentPoly::one(), -1));
    }

    #[test]
    fn f_lower_values() {
        assert_eq!(f_lower(1), BivarPoly::one());
        assert_eq!(
            f_lower(4),
            BivarPoly::from_terms([(0, LaurentPoly::one()), (1, p(&[(-2, 1), (-1, 1)]))])
        );
        // f_2(-q) = 1, the n = 0 instance of the theta evaluation
        assert_eq!(
            f_lower(2).substitute_s(Monomial::neg_q_pow(1)),
            LaurentPoly::one()
        );
        // two routes agree: explicit sum vs. 1/q image of F_n
        for n in 0..=12 {
            assert_eq!(f_lower(n), qfib_f(n).substitute_power_q(-1), "n = {n}");
        }
    }

    #[test]
    fn g_direct_values() {
        let g10 = g_direct(1, 0).unwrap();
        assert_eq!(
            g10,
            BivarPoly::from_terms([(-1, p(&[(2, 1)])), (0, p(&[(0, 1), (1, 1)]))])
        );
        assert_eq!(g10.substitute_s(Monomial::neg_q_pow(1)), LaurentPoly::one());
        assert_eq!(
            g_direct(1, -1).unwrap().substitute_s(Monomial::neg_q_pow(1)),
            LaurentPoly::zero()
        );
        assert_eq!(g_direct(0, -1), Err(Error::EmptyRange(0, -1)));
    }

    #[test]
    fn g_extended_matches_direct() {
        for big_l in 0..=4 {
            for i in -(2 * big_l)..=5 {
                if 2 * big_l + i < -big_l {
                    continue;
                }
                assert_eq!(
                    g_extended(big_l, i),
                    g_direct(big_l, i).unwrap(),
                    "L = {big_l}, i = {i}"
                );
            }
        }
    }

    #[test]
    fn g_at_neg_q_is_w() {
        for big_l in 0..=5 {
            for n in -10..=10 {
                assert_eq!(
                    g_at_neg_q(big_l, n),
                    w_seq(n, WVariant::Reciprocal),
                    "L = {big_l}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn h_limit_values() {
        assert_eq!(h_limit(0), LaurentPoly::one());
        assert_eq!(h_limit(1), LaurentPoly::zero());
        assert_eq!(h_limit(3), p(&[(-2, -1)]));
        // constant term of h_direct(L, 3) for a few L
        for big_l in 1..=6 {
            assert_eq!(h_direct(big_l, 3).coeff(-2), BigInt::from(-1));
        }
    }

    #[test]
    fn class_sums_values() {
        let (a0, a1, a2) = binomial_class_sums(7);
        assert_eq!((a1.clone(), a2.clone()), (BigInt::from(43), BigInt::from(42)));
        assert_eq!(a1 - a2, BigInt::one());
        assert_eq!(&a0 + BigInt::from(43) + BigInt::from(42), BigInt::from(128));
        assert_eq!(
            binomial_class_sums(0),
            (BigInt::one(), BigInt::from(0), BigInt::from(0))
        );
        let (_, a1, a2) = binomial_class_sums(4);
        assert_eq!(a1 - a2, BigInt::from(-1));
    }
}
