//! Rogers-Szego polynomials: Gauss's evaluation at (1, -1) and the
//! generalized evaluations at (1, -q^k) with their q-Fibonacci-like
//! closed forms.
//!
//! Run with `cargo run --example rogers_szego`.

use qident::gauss::{
    b_ratio, c_ratio, f_poly_closed, f_poly_rec, gauss_eval, rs_direct, rs_qk_via_gf,
    theorem2_even, theorem2_odd,
};
use qident::poly::Monomial;

fn main() {
    // Gauss: r_{2n}(1, -1) = (1-q)(1-q^3)...(1-q^{2n-1}), odd index vanishes
    let one = Monomial::one();
    let neg_one = Monomial::neg_q_pow(0);
    for n in [4, 6] {
        println!("r_{n}(1, -1) = {}", rs_direct(n, one, neg_one));
        println!("product form = {}", gauss_eval(n));
    }
    println!("r_5(1, -1) = {}", rs_direct(5, one, neg_one));

    // the generating-function formula (a sum over Gauss evaluations)
    // reproduces r_n(1, -q^k) exactly
    let (n, k) = (6, 3);
    let via_gf = rs_qk_via_gf(n, k).unwrap();
    let direct = rs_direct(n, one, Monomial::neg_q_pow(k));
    println!("\nr_{n}(1, -q^{k}) direct = {direct}");
    assert_eq!(via_gf, direct);

    // normalized ratios: b(n, k) for odd degree, c(n, k) for even; both
    // are polynomials because the Gauss product divides exactly
    println!("\nb(n, 2) = -r_{{2n-1}}(1, -q^2) / r_{{2n}}(1, -1):");
    for n in 1..=4 {
        println!("  n = {n}: {}", b_ratio(n, 2).unwrap());
    }
    println!("c(n, 2) = r_{{2n}}(1, -q^2) / r_{{2n}}(1, -1):");
    for n in 1..=4 {
        println!("  n = {n}: {}", c_ratio(n, 2).unwrap());
    }

    // the closed forms of Theorem 2 agree with the ratios termwise
    for kk in 0..=5 {
        assert_eq!(theorem2_odd(4, kk), b_ratio(4, kk).unwrap());
        assert_eq!(theorem2_even(4, kk).unwrap(), c_ratio(4, kk).unwrap());
    }
    println!("\ntheorem2_odd(4, k) = b(4, k) and theorem2_even(4, k) = c(4, k) for k <= 5");

    // behind them sits a Fibonacci-like recurrence f(k, s), whose closed
    // form matches the recurrence for every k
    for kk in 0..=8 {
        assert_eq!(f_poly_rec(kk), f_poly_closed(kk));
    }
    println!("f(k, s): recurrence = closed form for k <= 8; f(5, s) = {}", f_poly_rec(5));
}
