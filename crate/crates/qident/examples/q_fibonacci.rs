//! q-Fibonacci polynomials and the bivariate family G(L, i, s) behind the
//! closed form of the finite pentagonal sums.
//!
//! Run with `cargo run --example q_fibonacci`.

use qident::pentagon::{f_lower, g_direct, h_limit, qfib_f, w_seq, WVariant};
use qident::poly::Monomial;

fn main() {
    // F_n(1, s) at q = 1 collapses to ordinary Fibonacci polynomials
    println!("q-Fibonacci F_n(1, s) for n = 0..7:");
    for n in 0..=7 {
        println!("  F_{n} = {}", qfib_f(n));
    }

    // the lower family f_n(s) = F_n(1, s) with q -> 1/q satisfies the
    // shifted recurrence f_n(qs) = f_{n-1}(s) + s f_{n-2}(s)
    let n = 9;
    let lhs = f_lower(n).shift_s(1);
    let rhs = &f_lower(n - 1) + &f_lower(n - 2).mul_term(&qident::LaurentPoly::one(), 0, 1);
    println!("\nf_{n}(qs) = f_{}(s) + s f_{}(s): {}", n - 1, n - 2, lhs == rhs);

    // negative indices through the reflection F_{-n} = (-1)^{n-1} F_n / s^n
    println!("\nnegative index: F_-4 = {}", qfib_f(-4));

    // G(L, i, s) packages h(L, k): substituting s = q^k recovers the sums,
    // and s^L G(L, i, s) is a single shifted q-Fibonacci polynomial
    let g = g_direct(2, 0).unwrap();
    println!("\nG(2, 0, s) = {g}");
    println!("G(2, 0, s) at s = q^3: {}", g.substitute_s(Monomial::q_pow(3)));

    // the w sequence drives both the closed form and the L -> infinity
    // limits; it vanishes on one residue class mod 3
    println!("\nw(n) (reciprocal variant) for n = -4..6:");
    for n in -4..=6 {
        println!("  w({n:2}) = {}", w_seq(n, WVariant::Reciprocal));
    }
    println!("\nlim_L h(L, m) as a monomial, m = 0..6:");
    for m in 0..=6 {
        println!("  m = {m}: {}", h_limit(m));
    }
}
