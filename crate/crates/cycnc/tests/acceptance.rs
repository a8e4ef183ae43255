//! One test per acceptance criterion. Each prints a PASS/FAIL line with the
//! failing checks and asserts that every check passed.

use std::io::Write;
use std::time::{Duration, Instant};

use cycnc::report::criterion;

fn accept(id: u8, budget: Option<Duration>) {
    let start = Instant::now();
    let c = criterion(id).expect("criterion runs");
    let elapsed = start.elapsed();
    let in_budget = budget.is_none_or(|b| elapsed <= b);
    let ok = c.passed() && in_budget;
    // Written to the raw stdout handle so the verdict shows even when output is captured.
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{} criterion {id}: {} ({:.2?})", if ok { "PASS" } else { "FAIL" }, c.title, elapsed);
    for check in c.failures() {
        let _ = writeln!(out, "    failed: {}: {}", check.name, check.details);
    }
    drop(out);
    if let Some(b) = budget {
        assert!(in_budget, "criterion {id} took {elapsed:.2?}, budget {b:?}");
    }
    assert!(c.passed(), "criterion {id}: {} of {} checks failed", c.failures().len(), c.checks.len());
}

#[test]
fn criterion_1_pbw() {
    accept(1, Some(Duration::from_secs(60)));
}

#[test]
fn criterion_2_homlie() {
    accept(2, None);
}

#[test]
fn criterion_3_centre() {
    accept(3, None);
}

#[test]
fn criterion_4_normal_elements() {
    accept(4, None);
}

#[test]
fn criterion_5_fibres() {
    accept(5, Some(Duration::from_secs(120)));
}

#[test]
fn criterion_6_module_families() {
    accept(6, None);
}

#[test]
fn criterion_7_ext() {
    accept(7, Some(Duration::from_secs(120)));
}

#[test]
fn criterion_8_properties() {
    accept(8, None);
}
