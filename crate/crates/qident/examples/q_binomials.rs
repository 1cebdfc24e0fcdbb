//! Gaussian binomials and q-Pochhammer products: the exact-arithmetic
//! primitives everything else is built on.
//!
//! Run with `cargo run --example q_binomials`.

use qident::qcomb::{
    gauss_binomial, gauss_binomial_base, pochhammer_general, pochhammer_qq, product_one_plus,
    q_int,
};

fn main() {
    // [n k] is a polynomial with nonnegative coefficients, symmetric in
    // its exponents, reducing to C(n, k) at q = 1
    println!("Gaussian binomials:");
    for (n, k) in [(4, 2), (5, 2), (6, 3)] {
        let b = gauss_binomial(n, k).unwrap();
        println!("  [{n} {k}] = {b}");
        println!("        at q = 1: {}", b.eval_int(1));
    }

    // base substitutions: q^2-binomials for the even/odd evaluations,
    // 1/q-binomials for the lower q-Fibonacci polynomials
    println!("\nbase q^2:  [4 2] = {}", gauss_binomial_base(4, 2, 2).unwrap());
    println!("base 1/q:  [4 2] = {}", gauss_binomial_base(4, 2, -1).unwrap());
    // [n k]_{1/q} = q^{-k(n-k)} [n k]
    assert_eq!(
        gauss_binomial_base(4, 2, -1).unwrap(),
        gauss_binomial(4, 2).unwrap().shift(-4)
    );

    // Pochhammer products in arithmetic progressions of exponents
    println!("\n(q; q)_4        = {}", pochhammer_qq(4));
    println!("(q; q^2)_3      = {}", pochhammer_general(1, 2, 3));
    println!("(-q; q)_3       = {}", product_one_plus(3));
    println!("[5] (q-integer) = {}", q_int(5));

    // Pascal recurrence, checked exactly: [n k] = [n-1 k-1] + q^k [n-1 k]
    let (n, k) = (10, 4);
    let lhs = gauss_binomial(n, k).unwrap();
    let rhs = &gauss_binomial(n - 1, k - 1).unwrap() + &gauss_binomial(n - 1, k).unwrap().shift(k);
    assert_eq!(lhs, rhs);
    println!("\nPascal recurrence holds at ({n}, {k})");

    // large indices stay exact: the central coefficient of [100 50]
    let big = gauss_binomial(100, 50).unwrap();
    let mid = (big.max_exp().unwrap() + big.min_exp().unwrap()) / 2;
    println!("central coefficient of [100 50]: {}", big.coeff(mid));
}
