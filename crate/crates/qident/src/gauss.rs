//! Rogers-Szego polynomials and the finite Gauss-type evaluations.
//!
//! `r_n(x, a) = sum_k [n k] x^k a^{n-k}`; Gauss's theorem gives
//! `r_{2n+1}(1, -1) = 0` and `r_{2n}(1, -1) = (1-q)(1-q^3)...(1-q^{2n-1})`.
//! This module computes `r_n(1, -q^k)` two independent ways (direct sum
//! and the generating-function formula), forms the ratio families
//! `b(n, k)` and `c(n, k)`, and evaluates them through the
//! q-Fibonacci-like polynomials `f(k, s)` of the explicit closed forms.
//!
//! Every division here is claimed exact by a theorem; a nonzero remainder
//! is an identity failure and surfaces as `NonzeroRemainder`.

use num_bigint::BigInt;

use crate::error::Result;
use crate::poly::{BivarPoly, LaurentPoly, Monomial};
use crate::qcomb::{
    gauss_binomial, gauss_binomial_base, one_minus_q_pow, pochhammer_general, pochhammer_qq,
    product_one_plus,
};

fn sign_pow(j: i64) -> i64 {
    if j.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn choose2(a: i64) -> i64 {
    a * (a - 1) / 2
}

/// Direct summation of `r_n(x, a)` with monomial arguments.
pub fn rs_direct(n: i64, x: Monomial, a: Monomial) -> LaurentPoly {
    assert!(n >= 0);
    let mut acc = LaurentPoly::zero();
    for k in 0..=n {
        let b = gauss_binomial(n, k).expect("n >= 0");
        let xk = x.pow(k);
        let ank = a.pow(n - k);
        let c = BigInt::from((xk.sign() * ank.sign()) as i64);
        acc = &acc + &b.mul_term(&c, xk.exponent() + ank.exponent());
    }
    acc
}

/// Gauss's evaluation: `r_n(1, -1)` as a product -- zero for odd `n`,
/// `prod_{i=1}^{m} (1 - q^{2i-1})` for `n = 2m`.
pub fn gauss_eval(n: i64) -> LaurentPoly {
    assert!(n >= 0);
    if n % 2 == 1 {
        return LaurentPoly::zero();
    }
    pochhammer_general(1, 2, n / 2)
}

/// `r_n(1, -q^k)` via the generating-function formula:
/// `(q; q)_n * sum_{j+2l=n} q^{C(j,2)} [k j] / (q^2; q^2)_l`, each term
/// realized as an exact division (`(q^2; q^2)_l` divides `(q; q)_n`).
/// Must equal `rs_direct(n, 1, -q^k)`.
pub fn rs_qk_via_gf(n: i64, k: i64) -> Result<LaurentPoly> {
    assert!(n >= 0 && k >= 0);
    let poch_n = pochhammer_qq(n);
    let mut acc = LaurentPoly::zero();
    for j in (n % 2..=n.min(k)).step_by(2) {
        let l = (n - j) / 2;
        let b = gauss_binomial(k, j)?;
        if b.is_zero() {
            continue;
        }
        let quot = poch_n.exact_div(&pochhammer_general(2, 2, l))?;
        acc = &acc + &(&b * &quot).shift(choose2(j));
    }
    Ok(acc)
}

/// `b(n, k) = -r_{2n-1}(q^k, -1) / r_{2n}(1, -1)`. Polynomiality of the
/// ratio is part of the theorem; a nonzero remainder is a failure signal.
pub fn b_ratio(n: i64, k: i64) -> Result<LaurentPoly> {
    assert!(n >= 1 && k >= 0);
    let num = -&rs_direct(2 * n - 1, Monomial::q_pow(k), Monomial::neg_q_pow(0));
    num.exact_div(&gauss_eval(2 * n))
}

/// `c(n, k) = r_{2n}(1, -q^k) / r_{2n}(1, -1)`; also equals
/// `q^{-k} (b(n+1, k+1) - b(n+1, k))`.
pub fn c_ratio(n: i64, k: i64) -> Result<LaurentPoly> {
    assert!(n >= 0 && k >= 0);
    let num = rs_direct(2 * n, Monomial::q_pow(0), Monomial::neg_q_pow(k));
    num.exact_div(&gauss_eval(2 * n))
}

/// `f(k, s)` by the defining recurrence
/// `f(k, s) = (1 + q^{k-1}) f(k-1, s) - q^{k-2} s f(k-2, s)`,
/// `f(0, s) = 0`, `f(1, s) = 1`.
pub fn f_poly_rec(k: i64) -> BivarPoly {
    assert!(k >= 0);
    let mut prev = BivarPoly::zero(); // f(0)
    if k == 0 {
        return prev;
    }
    let mut cur = BivarPoly::one(); // f(1)
    for i in 2..=k {
        let a = cur.scale_q(&(&LaurentPoly::one() + &LaurentPoly::term(1, i - 1)));
        let b = prev.mul_term(&LaurentPoly::one(), i - 2, 1);
        let next = &a - &b;
        prev = cur;
        cur = next;
    }
    cur
}

/// `f(k, s)` by the explicit sum
/// `sum_j (-1)^j q^{j^2} s^j [k-j-1, j]_{q^2} prod_{i=1}^{k-1-2j} (1 + q^i)`.
/// Must equal [`f_poly_rec`].
pub fn f_poly_closed(k: i64) -> BivarPoly {
    assert!(k >= 0);
    let mut acc = BivarPoly::zero();
    let mut j = 0;
    while 2 * j <= k - 1 {
        let b = gauss_binomial_base(k - j - 1, j, 2).expect("k - j - 1 >= 0");
        let coeff = (&b * &product_one_plus(k - 1 - 2 * j))
            .mul_term(&BigInt::from(sign_pow(j)), j * j);
        acc = &acc + &BivarPoly::monomial_s(coeff, j);
        j += 1;
    }
    acc
}

/// The odd half of Theorem 2:
/// `r_{2n-1}(1, -q^k) / r_{2n}(1, -1)
///   = sum_j (-1)^j q^{j^2 + 2jn} [k-j-1, j]_{q^2} prod_{i=1}^{k-1-2j} (1+q^i)`.
/// Equals `b_ratio(n, k)` and `f(k, s)` at `s = q^{2n}`.
pub fn theorem2_odd(n: i64, k: i64) -> LaurentPoly {
    assert!(n >= 1 && k >= 0);
    let mut acc = LaurentPoly::zero();
    let mut j = 0;
    while 2 * j <= k - 1 {
        let b = gauss_binomial_base(k - j - 1, j, 2).expect("k - j - 1 >= 0");
        let term = (&b * &product_one_plus(k - 1 - 2 * j))
            .mul_term(&BigInt::from(sign_pow(j)), j * j + 2 * j * n);
        acc = &acc + &term;
        j += 1;
    }
    acc
}

/// The even half of Theorem 2:
/// `r_{2n}(1, -q^k) / r_{2n}(1, -1)
///   = sum_j (-1)^j q^{j^2 + 2jn} ([k]/[2k-2j]) [k-j, j]_{q^2}
///     prod_{i=1}^{k-2j} (1+q^i)`.
/// The bracket ratio is realized as the exact division of the full term by
/// `1 - q^{2k-2j}`; the indeterminate `[0]/[0]` at `k = 0` is defined as 1,
/// forced by the oracle `c(n, 0) = 1`. Equals `c_ratio(n, k)`.
pub fn theorem2_even(n: i64, k: i64) -> Result<LaurentPoly> {
    assert!(n >= 0 && k >= 0);
    if k == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut acc = LaurentPoly::zero();
    let mut j = 0;
    while 2 * j <= k {
        let b = gauss_binomial_base(k - j, j, 2).expect("k - j >= 0");
        let num = &(&one_minus_q_pow(k) * &b) * &product_one_plus(k - 2 * j);
        let term = num
            .exact_div(&one_minus_q_pow(2 * k - 2 * j))?
            .mul_term(&BigInt::from(sign_pow(j)), j * j + 2 * j * n);
        acc = &acc + &term;
        j += 1;
    }
    Ok(acc)
}

/// The alternate odd product form after the generating-function formula:
/// `r_{2n-1}(1, -q^k) = r_{2n}(1, -1) * sum_j q^{C(2j+1,2)} [k, 2j+1]
/// prod_{i=n-j}^{n-1} (1 - q^{2i})`.
pub fn odd_alternate_form(n: i64, k: i64) -> LaurentPoly {
    assert!(n >= 1 && k >= 0);
    let mut acc = LaurentPoly::zero();
    let mut j = 0;
    while 2 * j + 1 <= k {
        if j >= n {
            break; // product would contain the zero factor 1 - q^0
        }
        let b = gauss_binomial(k, 2 * j + 1).expect("k >= 0");
        let prod = pochhammer_general(2 * (n - j), 2, j);
        acc = &acc + &(&b * &prod).shift(choose2(2 * j + 1));
        j += 1;
    }
    acc
}

/// The alternate even product form:
/// `r_{2n}(1, -q^k) = r_{2n}(1, -1) * sum_j q^{C(2j,2)} [k, 2j]
/// prod_{i=n-j+1}^{n} (1 - q^{2i})`.
pub fn even_alternate_form(n: i64, k: i64) -> LaurentPoly {
    assert!(n >= 0 && k >= 0);
    let mut acc = LaurentPoly::zero();
    let mut j = 0;
    while 2 * j <= k {
        if j >= n + 1 {
            break;
        }
        let b = gauss_binomial(k, 2 * j).expect("k >= 0");
        let prod = pochhammer_general(2 * (n - j + 1), 2, j);
        acc = &acc + &(&b * &prod).shift(choose2(2 * j));
        j += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{LaurentPoly, Monomial};
    use num_bigint::BigInt;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    fn one() -> Monomial {
        Monomial::one()
    }

    fn neg_one() -> Monomial {
        Monomial::neg_q_pow(0)
    }

    #[test]
    fn rs_direct_values() {
        assert_eq!(rs_direct(2, one(), neg_one()), p(&[(0, 1), (1, -1)]));
        assert_eq!(rs_direct(3, one(), neg_one()), LaurentPoly::zero());
        assert_eq!(rs_direct(0, Monomial::q_pow(2), neg_one()), LaurentPoly::one());
        assert_eq!(
            rs_direct(1, one(), Monomial::neg_q_pow(3)),
            p(&[(0, 1), (3, -1)])
        );
    }

    #[test]
    fn gauss_eval_values() {
        assert_eq!(gauss_eval(2), p(&[(0, 1), (1, -1)]));
        assert_eq!(gauss_eval(4), p(&[(0, 1), (1, -1), (3, -1), (4, 1)]));
        assert_eq!(gauss_eval(1), LaurentPoly::zero());
        for m in 0..=10 {
            assert_eq!(gauss_eval(2 * m), rs_direct(2 * m, one(), neg_one()), "m = {m}");
        }
    }

    #[test]
    fn gf_formula_matches_direct() {
        for n in 0..=10 {
            for k in 0..=6 {
                assert_eq!(
                    rs_qk_via_gf(n, k).unwrap(),
                    rs_direct(n, one(), Monomial::neg_q_pow(k)),
                    "n = {n}, k = {k}"
                );
            }
        }
        assert_eq!(rs_qk_via_gf(2, 1).unwrap(), p(&[(0, 1), (1, -1)]));
        for n in 0..=8 {
            assert_eq!(rs_qk_via_gf(n, 0).unwrap(), gauss_eval(n), "n = {n}");
        }
        for m in 1..=10 {
            assert_eq!(rs_qk_via_gf(2 * m - 1, 1).unwrap(), gauss_eval(2 * m), "m = {m}");
        }
    }

    #[test]
    fn b_ratio_values() {
        for n in 1..=10 {
            assert_eq!(b_ratio(n, 1).unwrap(), LaurentPoly::one(), "n = {n}");
            assert_eq!(b_ratio(n, 2).unwrap(), p(&[(0, 1), (1, 1)]), "n = {n}");
        }
        assert_eq!(b_ratio(1, 3).unwrap(), p(&[(0, 1), (1, 1), (2, 1)]));
    }

    #[test]
    fn c_ratio_values() {
        for n in 0..=10 {
            assert_eq!(c_ratio(n, 0).unwrap(), LaurentPoly::one(), "n = {n}");
        }
        for n in 1..=10 {
            assert_eq!(c_ratio(n, 1).unwrap(), LaurentPoly::one(), "n = {n}");
        }
        assert_eq!(c_ratio(1, 2).unwrap(), p(&[(0, 1), (1, 1), (3, -1)]));
    }

    #[test]
    fn f_poly_values() {
        assert_eq!(f_poly_rec(0), BivarPoly::zero());
        assert_eq!(f_poly_rec(1), BivarPoly::one());
        assert_eq!(
            f_poly_rec(2),
            BivarPoly::monomial_s(p(&[(0, 1), (1, 1)]), 0)
        );
        let k3 = BivarPoly::from_terms([
            (0, &p(&[(0, 1), (1, 1)]) * &p(&[(0, 1), (2, 1)])),
            (1, p(&[(1, -1)])),
        ]);
        assert_eq!(f_poly_rec(3), k3);
        assert_eq!(f_poly_closed(3), k3);
        assert_eq!(f_poly_closed(1), BivarPoly::one());
        assert_eq!(f_poly_closed(2), f_poly_rec(2));
        for k in 0..=12 {
            assert_eq!(f_poly_closed(k), f_poly_rec(k), "k = {k}");
        }
    }

    #[test]
    fn theorem2_matches_ratios() {
        for n in 1..=6 {
            for k in 0..=8 {
                assert_eq!(theorem2_odd(n, k), b_ratio(n, k).unwrap(), "odd n={n} k={k}");
                assert_eq!(
                    theorem2_even(n, k).unwrap(),
                    c_ratio(n, k).unwrap(),
                    "even n={n} k={k}"
                );
            }
        }
        assert_eq!(theorem2_odd(3, 0), LaurentPoly::zero());
    }

    #[test]
    fn theorem2_table_rows() {
        // odd table rows at k = 4 and 5, even at k = 2, 3, 4
        for n in 1..=8 {
            let b4 = &gauss_binomial(4, 1).unwrap()
                + &(&gauss_binomial(4, 3).unwrap() * &one_minus_q_pow(2 * n - 2)).shift(3);
            assert_eq!(theorem2_odd(n, 4), b4, "n = {n}");

            let b5 = &(&gauss_binomial(5, 1).unwrap()
                + &(&gauss_binomial(5, 3).unwrap() * &one_minus_q_pow(2 * n - 2)).shift(3))
                + &(&one_minus_q_pow(2 * n - 2) * &one_minus_q_pow(2 * n - 4)).shift(10);
            assert_eq!(theorem2_odd(n, 5), b5, "n = {n}");

            let c2 = &LaurentPoly::one() + &one_minus_q_pow(2 * n).shift(1);
            assert_eq!(theorem2_even(n, 2).unwrap(), c2, "n = {n}");

            let c3 = &LaurentPoly::one()
                + &(&one_minus_q_pow(2 * n) * &gauss_binomial(3, 2).unwrap()).shift(1);
            assert_eq!(theorem2_even(n, 3).unwrap(), c3, "n = {n}");

            let c4 = &(&LaurentPoly::one()
                + &(&one_minus_q_pow(2 * n) * &gauss_binomial(4, 2).unwrap()).shift(1))
                + &(&one_minus_q_pow(2 * n) * &one_minus_q_pow(2 * n - 2)).shift(6);
            assert_eq!(theorem2_even(n, 4).unwrap(), c4, "n = {n}");
        }
    }

    #[test]
    fn alternate_forms_match() {
        for n in 1..=5 {
            for k in 0..=6 {
                assert_eq!(
                    odd_alternate_form(n, k),
                    b_ratio(n, k).unwrap(),
                    "odd n={n} k={k}"
                );
            }
        }
        for n in 0..=5 {
            for k in 0..=6 {
                assert_eq!(
                    even_alternate_form(n, k),
                    c_ratio(n, k).unwrap(),
                    "even n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn sign_identity_r_odd() {
        // r_{2n-1}(q^k, -1) = -r_{2n-1}(1, -q^k), by binomial symmetry
        for n in 1..=6 {
            for k in 0..=6 {
                assert_eq!(
                    rs_direct(2 * n - 1, Monomial::q_pow(k), neg_one()),
                    -&rs_direct(2 * n - 1, one(), Monomial::neg_q_pow(k)),
                    "n={n} k={k}"
                );
            }
        }
    }
}
