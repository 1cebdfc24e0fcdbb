//! Finite pentagonal sums h(L, k): the brute-force definition, the
//! q-Fibonacci closed form, and the printed expansion table.
//!
//! Run with `cargo run --example pentagonal_sums`.

use qident::pentagon::{h_closed, h_closed_with, h_direct, WVariant};

fn main() {
    // h(L, 0) = 1 for every L: a finite pentagonal number theorem
    println!("h(L, 0) for L = 0..8:");
    for l in 0..=8 {
        println!("  L = {l}: {}", h_direct(l, 0));
    }

    // for k > 0 the sum stabilizes to a fixed Laurent polynomial once L
    // is large enough; the closed form shows the stable shape directly
    println!("\nh(L, k) for L = 6:");
    for k in 0..=4 {
        println!("  k = {k}: {}", h_direct(6, k));
    }

    // closed form vs direct sum, exact equality term by term
    let l = 9;
    let k = 5;
    let direct = h_direct(l, k);
    let closed = h_closed(l, k);
    println!("\nh({l}, {k}) direct  = {direct}");
    println!("h({l}, {k}) closed  = {closed}");
    assert_eq!(direct, closed);

    // the closed form only matches with the reciprocal w; the as-printed
    // variant drifts as soon as k >= 2
    let printed = h_closed_with(4, 2, WVariant::AsPrinted);
    println!("\nas-printed variant at (4, 2): {printed}");
    println!("direct sum at (4, 2):        {}", h_direct(4, 2));
}
