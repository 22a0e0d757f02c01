//! Acceptance gates.  One test per criterion; the harness line per test is
//! the pass/fail record, and each criterion also prints its timing (shown
//! with --nocapture) and enforces its wall-clock budget where one is stated.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use pfg::golden::check_tables;
use pfg::graph::{build_graph, trace_moment};
use pfg::partition::enumerate_partitions;
use pfg::spectrum::{eta0_kuwong, eta0_renteln, eta_direct, eta_k, spectrum};
use pfg::suite::{run_suite, SuiteKind};

fn conclude(name: &str, started: Instant, budget_secs: Option<u64>) {
    let elapsed = started.elapsed();
    println!("[acceptance] {name}: PASS ({elapsed:.2?})");
    if let Some(budget) = budget_secs {
        assert!(
            elapsed.as_secs() < budget,
            "{name} took {elapsed:?}, budget {budget}s"
        );
    }
}

#[test]
fn golden_tables_reproduce() {
    let started = Instant::now();
    let diffs = check_tables().unwrap();
    assert!(diffs.is_empty(), "reference table mismatches: {diffs:?}");
    conclude("golden tables", started, Some(60));
}

#[test]
fn dual_recurrences_agree_through_fourteen() {
    let started = Instant::now();
    let mut at_fourteen = 0usize;
    for n in 1..=14 {
        for shape in enumerate_partitions(n) {
            assert_eq!(
                eta0_renteln(&shape),
                eta0_kuwong(&shape),
                "recurrences disagree at {shape}"
            );
            if n == 14 {
                at_fourteen += 1;
            }
        }
    }
    assert!(at_fourteen >= 135, "only {at_fourteen} shapes at n = 14");
    conclude("dual recurrences to n=14", started, Some(10));
}

#[test]
fn recurrence_matches_character_sums_through_nine() {
    let started = Instant::now();
    for n in 2..=9 {
        for k in 0..=n - 2 {
            for shape in enumerate_partitions(n) {
                assert_eq!(
                    eta_k(&shape, k).unwrap(),
                    eta_direct(&shape, k).unwrap(),
                    "oracles disagree at {shape}, k={k}"
                );
            }
        }
    }
    conclude("recurrence vs character sums to n=9", started, Some(120));
}

#[test]
fn closed_walks_match_spectral_moments() {
    let started = Instant::now();
    for n in 2..=6 {
        for k in 0..=2usize.min(n - 1) {
            let graph = build_graph(n, k).unwrap();
            let table = spectrum(n, k).unwrap();
            for m in 0..=4 {
                let walks = trace_moment(&graph, m);
                let mut weighted = BigInt::zero();
                for e in &table.entries {
                    let mut power = BigInt::from(1);
                    for _ in 0..m {
                        power *= &e.eta;
                    }
                    weighted += &e.multiplicity * power;
                }
                assert_eq!(walks, weighted, "trace mismatch at n={n} k={k} m={m}");
            }
        }
    }
    conclude("closed walks vs spectral moments", started, Some(120));
}

#[test]
fn sign_patterns_hold() {
    let started = Instant::now();
    for kind in [SuiteKind::Asp0, SuiteKind::Asp1] {
        let outcome = run_suite(kind, None).unwrap();
        assert!(
            outcome.passed(),
            "{} failures: {:?}",
            outcome.suite,
            outcome.failures
        );
    }
    conclude("sign patterns and zero sets", started, None);
}

#[test]
fn aggregate_identities_hold() {
    let started = Instant::now();
    let outcome = run_suite(SuiteKind::Mass, None).unwrap();
    assert!(
        outcome.passed(),
        "mass failures: {:?}",
        outcome.failures
    );
    conclude("aggregate identities", started, None);
}

#[test]
fn inequality_suite_is_clean() {
    let started = Instant::now();
    let outcome = run_suite(SuiteKind::Inequalities, None).unwrap();
    assert!(
        outcome.passed(),
        "inequality failures: {:?}",
        outcome.failures
    );
    conclude("inequality suite", started, Some(60));
}
