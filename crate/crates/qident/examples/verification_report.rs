//! Programmatic verification: run named suites over configurable grids
//! and consume the machine-readable report.
//!
//! Run with `cargo run --release --example verification_report`.

use qident::{run_suite, Suite, SuiteConfig, VerificationReport};

fn main() {
    // a single suite with its default (acceptance-sized) grid
    let report = run_suite(Suite::GaussTheorem, &SuiteConfig::default());
    summarize(&report);

    // a smaller custom grid: bounds are per-suite knobs
    let small = SuiteConfig {
        l_max: Some(6),
        k_max: Some(6),
        ..SuiteConfig::default()
    };
    let report = run_suite(Suite::Theorem1, &small);
    summarize(&report);
    for case in report.cases.iter().take(5) {
        println!("    {} {:?} pass={}", case.id, case.params, case.pass);
    }

    // the full battery; failures carry the mismatching sides as text
    let report = run_suite(Suite::All, &SuiteConfig::default());
    summarize(&report);
    for case in report.cases.iter().filter(|c| !c.pass) {
        println!(
            "    FAIL {} {:?}: {} != {}",
            case.id,
            case.params,
            case.lhs.as_deref().unwrap_or("?"),
            case.rhs.as_deref().unwrap_or("?"),
        );
    }

    // reports serialize to JSON and round-trip losslessly
    let json = serde_json::to_string_pretty(&report).unwrap();
    let back: VerificationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back.cases, report.cases);
    println!("\nJSON report: {} bytes, round-trips exactly", json.len());
}

fn summarize(report: &VerificationReport) {
    println!(
        "suite {:<20} {:>5} cases, {} failures",
        report.suite,
        report.cases.len(),
        report.failures
    );
}
