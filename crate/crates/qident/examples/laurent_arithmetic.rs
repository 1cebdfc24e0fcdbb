//! Sparse Laurent polynomial arithmetic over arbitrary-precision
//! integers, plus the text and JSON interchange formats.
//!
//! Run with `cargo run --example laurent_arithmetic`.

use num_bigint::BigInt;

use qident::format::{parse_poly, poly_from_json, poly_to_json};
use qident::LaurentPoly;

fn main() {
    // build from terms; negative exponents are first-class
    let a = LaurentPoly::from_terms([
        (-2, BigInt::from(1)),
        (0, BigInt::from(-3)),
        (1, BigInt::from(2)),
    ]);
    let b = parse_poly("1 - q + q^2").unwrap();
    println!("a       = {a}");
    println!("b       = {b}");
    println!("a + b   = {}", &a + &b);
    println!("a * b   = {}", &a * &b);
    println!("-a      = {}", -&a);
    println!("a << 3  = {}", a.shift(3));

    // division is exact or refused: no rounding, no remainder dropped
    let prod = &a * &b;
    println!("\n(a*b)/b = {}", prod.exact_div(&b).unwrap());
    println!("a / b   = {:?}", a.exact_div(&b));

    // substitution q -> q^m; m = -1 is the reciprocal map used throughout
    println!("\na with q -> q^2: {}", a.substitute_power(2));
    println!("a with q -> 1/q: {}", a.substitute_power(-1));

    // rational evaluation at integer points (exact, via num-rational)
    println!("\na at q = 2: {}", a.eval_int(2));

    // JSON: exponent/decimal-string pairs, lossless at any size
    let j = poly_to_json(&a);
    let text = serde_json::to_string(&j).unwrap();
    println!("\nJSON: {text}");
    assert_eq!(poly_from_json(&j).unwrap(), a);

    // coefficients never overflow: 2^200 survives the round trip
    let huge = LaurentPoly::from_terms([(5, BigInt::from(2).pow(200))]);
    let huge_json = poly_to_json(&huge);
    assert_eq!(poly_from_json(&huge_json).unwrap(), huge);
    println!("2^200 coefficient round-trips exactly");
}
