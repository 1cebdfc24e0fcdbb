//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Every comparison is exact; the wall-clock budgets are
//! asserted where the criterion states one (test builds are optimized via
//! the workspace `[profile.test]`).

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;

use qident::gauss::{b_ratio, c_ratio, rs_direct, rs_qk_via_gf, theorem2_even, theorem2_odd};
use qident::pentagon::{binomial_class_sums, h_closed_with, h_direct, WVariant};
use qident::poly::Monomial;
use qident::qcomb::{pochhammer_general, pochhammer_qq};
use qident::series::{pentagonal_theta, product_family, triple_product_check};
use qident::{run_suite, Suite, SuiteConfig, VerificationReport};

fn report(criterion: usize, label: &str, pass: bool) {
    println!(
        "acceptance {criterion:2}: {label} ... {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} ({label}) failed");
}

fn within(start: Instant, budget_secs: u64) -> bool {
    start.elapsed() < Duration::from_secs(budget_secs)
}

fn suite_cases(suite: Suite, cfg: &SuiteConfig) -> Vec<qident::verify::Case> {
    run_suite(suite, cfg).cases
}

#[test]
fn criterion_01_berkovich_garvan() {
    let start = Instant::now();
    let ok = (0..=50).all(|l| h_direct(l, 0).is_one());
    report(1, "h(L,0) = 1 for 0 <= L <= 50", ok && within(start, 5));
}

#[test]
fn criterion_02_theorem1_oracle() {
    let start = Instant::now();
    let mut ok = true;
    for l in 0..=12 {
        for k in 0..=12 {
            ok &= h_closed_with(l, k, WVariant::Reciprocal) == h_direct(l, k);
        }
    }

    // the as-printed w must break somewhere with k >= 2, and the report
    // must record the failing case
    let printed_cfg = SuiteConfig {
        w_variant: WVariant::AsPrinted,
        ..SuiteConfig::default()
    };
    let printed = run_suite(Suite::Theorem1, &printed_cfg);
    let recorded = printed.cases.iter().any(|c| {
        c.id == "theorem1_oracle"
            && !c.pass
            && c.params["k"] >= 2
            && c.lhs.is_some()
            && c.rhs.is_some()
    });

    report(
        2,
        "h_closed = h_direct on the 13x13 grid; as-printed variant fails",
        ok && recorded && within(start, 10),
    );
}

#[test]
fn criterion_03_h_table() {
    let cases = suite_cases(Suite::Theorem1, &SuiteConfig::default());
    let table: Vec<_> = cases.iter().filter(|c| c.id == "h_table").collect();
    let ok = table.len() == 7 * 6 && table.iter().all(|c| c.pass);
    report(3, "displayed h(L,k) expansions, 4 <= L <= 10", ok);
}

#[test]
fn criterion_04_pentagon_recurrences() {
    let start = Instant::now();
    let r = run_suite(Suite::PentagonRecurrences, &SuiteConfig::default());
    report(
        4,
        "pentagon recurrence suite (1.3)-(1.13)",
        r.all_pass() && within(start, 30),
    );
}

#[test]
fn criterion_05_limits() {
    let start = Instant::now();
    let cases = suite_cases(Suite::Limits, &SuiteConfig::default());
    let series_ok = cases
        .iter()
        .filter(|c| c.id == "limit_series" || c.id == "limit_vanishes_3k1")
        .all(|c| c.pass);
    let triple_ok = (0..=9).all(|m| triple_product_check(m, 200));
    report(
        5,
        "shifted theta limits and triple products, m <= 9",
        series_ok && triple_ok && within(start, 10),
    );
}

#[test]
fn criterion_06_pentagonal_theorem() {
    let start = Instant::now();
    let ok = product_family(1, 1, 500) == pentagonal_theta(500);
    report(
        6,
        "pentagonal number theorem at order 500",
        ok && within(start, 5),
    );
}

#[test]
fn criterion_07_gauss_theorem() {
    let one = Monomial::one();
    let neg_one = Monomial::neg_q_pow(0);
    let mut ok = true;
    for m in 0..=20 {
        ok &= rs_direct(2 * m + 1, one, neg_one).is_zero();
        let lhs = &rs_direct(2 * m, one, neg_one) * &pochhammer_general(2, 2, m);
        ok &= lhs == pochhammer_qq(2 * m);
    }
    report(7, "Gauss's theorem, m <= 20", ok);
}

#[test]
fn criterion_08_eq_2_6_oracle() {
    let mut checked = 0;
    let mut ok = true;
    for n in 0..=20 {
        for k in 0..=10 {
            let x = Monomial::one();
            let a = Monomial::neg_q_pow(k);
            ok &= rs_qk_via_gf(n, k).unwrap() == rs_direct(n, x, a);
            checked += 1;
        }
    }
    report(8, "eq (2.6) vs direct Rogers-Szego", ok && checked == 231);
}

#[test]
fn criterion_09_theorem2() {
    let start = Instant::now();
    let mut ok = true;
    for n in 1..=8 {
        for k in 0..=10 {
            ok &= theorem2_odd(n, k) == b_ratio(n, k).unwrap();
            ok &= theorem2_even(n, k).unwrap() == c_ratio(n, k).unwrap();
        }
    }
    let cases = suite_cases(Suite::Theorem2, &SuiteConfig::default());
    let tables_ok = cases
        .iter()
        .filter(|c| c.id.starts_with("theorem2_table"))
        .all(|c| c.pass);
    report(
        9,
        "Theorem 2 vs ratio oracles and first-values tables",
        ok && tables_ok && within(start, 10),
    );
}

#[test]
fn criterion_10_gauss_recurrences() {
    let r = run_suite(Suite::GaussRecurrences, &SuiteConfig::default());
    report(10, "Gauss recurrence suite (2.7)-(2.13) and parity", r.all_pass());
}

#[test]
fn criterion_11_qcomb_identities() {
    let r = run_suite(Suite::QcombIdentities, &SuiteConfig::default());
    report(11, "q-binomial identities and conversions", r.all_pass());
}

#[test]
fn criterion_12_q1_collapse() {
    let mut ok = true;
    for l in 0..=10 {
        for k in 0..=10 {
            ok &= h_direct(l, k).eval_int(1).is_one();
        }
    }
    let (_, a1, a2) = binomial_class_sums(7);
    ok &= &a1 - &a2 == BigInt::one();
    for m in 0..=10 {
        let (_, a1, a2) = binomial_class_sums(3 * m + 1);
        let expected = if m % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        ok &= a1 - a2 == expected;
    }
    report(12, "q = 1 collapse and binomial class sums", ok);
}

#[test]
fn criterion_13_cli_verify_all() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_qident"))
        .args(["verify", "all", "--format", "json"])
        .output()
        .expect("failed to spawn qident");
    let in_budget = within(start, 120);

    let stdout = String::from_utf8(out.stdout).expect("non-UTF-8 report");
    let parsed: VerificationReport = serde_json::from_str(&stdout).expect("invalid report JSON");

    // the report must survive a serialize/parse round trip unchanged
    let rejson = serde_json::to_string(&parsed).unwrap();
    let reparsed: VerificationReport = serde_json::from_str(&rejson).unwrap();
    let round_trips = parsed.cases == reparsed.cases
        && parsed.failures == reparsed.failures
        && parsed.suite == reparsed.suite;

    report(
        13,
        "CLI `verify all`: >= 500 cases, 0 failures, < 2 min, JSON round-trip",
        out.status.success()
            && parsed.cases.len() >= 500
            && parsed.failures == 0
            && round_trips
            && in_budget,
    );
}
