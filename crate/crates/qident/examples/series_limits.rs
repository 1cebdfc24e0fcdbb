//! Truncated power series: Euler's pentagonal number theorem, the
//! L -> infinity limits of the finite sums, and Jacobi triple products.
//!
//! Run with `cargo run --example series_limits`.

use qident::pentagon::h_limit;
use qident::series::{
    pentagonal_theta, product_family, shifted_theta, triple_product_check,
};

fn main() {
    let order = 40;

    // (q; q)_infinity = sum_j (-1)^j q^{j(3j+1)/2}, coefficientwise
    let product = product_family(1, 1, order);
    let theta = pentagonal_theta(order);
    println!("(q;q)_inf mod q^{}:", order + 1);
    println!("  product: {}", product.to_poly());
    println!("  theta:   {}", theta.to_poly());
    assert_eq!(product, theta);

    // the generating function of the partition numbers is its inverse
    let partitions = product.invert().unwrap();
    println!("\npartition numbers p(0)..p(12):");
    let p: Vec<String> = partitions.coeffs()[..13].iter().map(|c| c.to_string()).collect();
    println!("  {}", p.join(", "));

    // each finite sum h(L, m) tends to w(-m) * (q; q)_infinity; the
    // bilateral theta sum shifted by m reproduces exactly that
    for m in [0, 3, 4, 6] {
        let (series, shift) = shifted_theta(m, order);
        let limit = h_limit(m);
        println!("\nm = {m}: lim h(L, m) = {limit}");
        println!("  shifted theta = q^{shift} * ({}...)", series.truncate(8).to_poly());
    }

    // for m = 1 (mod 3) the limit vanishes and so does the whole sum
    let (vanishing, _) = shifted_theta(4, order);
    assert!(vanishing.is_zero());

    // the same sums factor as Jacobi triple products
    println!("\ntriple product check for m = 0..6:");
    for m in 0..=6 {
        println!("  m = {m}: {}", triple_product_check(m, 100));
    }
}
