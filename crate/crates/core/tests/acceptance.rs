//! One test per acceptance criterion, at full scale. Each prints its
//! pass/fail line straight to stdout, past the test harness capture.

use std::io::Write;

use gtkit::verify::{run_criterion, Scale};
use gtkit::Exec;

fn check(id: usize) {
    let r = run_criterion(id, Scale::Full, Exec::default(), None);
    let _ = writeln!(std::io::stdout().lock(), "{r}");
    assert!(r.passed, "{r}");
}

#[test]
fn criterion_01_claim_reproduction() {
    check(1);
}

#[test]
fn criterion_02_closed_form_decay() {
    check(2);
}

#[test]
fn criterion_03_combinatorial_identities() {
    check(3);
}

#[test]
fn criterion_04_norm_specialization() {
    check(4);
}

#[test]
fn criterion_05_representation_axioms() {
    check(5);
}

#[test]
fn criterion_06_dimension_oracle() {
    check(6);
}

#[test]
fn criterion_07_branching_consistency() {
    check(7);
}

#[test]
fn criterion_08_commuting_projections() {
    check(8);
}

#[test]
fn criterion_09_property_based_decay() {
    check(9);
}

#[test]
fn criterion_10_tensor_finiteness() {
    check(10);
}
