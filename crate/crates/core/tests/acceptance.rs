//! One test per acceptance criterion; each prints a PASS/FAIL line.

use pinc::acceptance;

fn check(id: u32) {
    let o = acceptance::run(id).expect("criterion exists");
    let status = if o.passed { "PASS" } else { "FAIL" };
    println!("[{status}] criterion {}: {} -- {}", o.id, o.title, o.detail);
    assert!(o.passed, "criterion {} failed: {}", o.id, o.detail);
}

#[test]
fn criterion_1_even_projective_products_not_pin_c() {
    check(1);
}

#[test]
fn criterion_2_mk_squares_pin_c_without_pin() {
    check(2);
}

#[test]
fn criterion_3_five_manifold_lipschitz_witness() {
    check(3);
}

#[test]
fn criterion_4_lipschitz_family() {
    check(4);
}

#[test]
fn criterion_5_factor_criterion_agreement() {
    check(5);
}

#[test]
fn criterion_6_wu_cross_check() {
    check(6);
}

#[test]
fn criterion_7_implication_lattice() {
    check(7);
}

#[test]
fn criterion_8_oracle_equivalence() {
    check(8);
}

#[test]
fn every_criterion_is_covered() {
    let ids: Vec<u32> = acceptance::criteria().iter().map(|c| c.0).collect();
    assert_eq!(ids, (1..=8).collect::<Vec<_>>());
}
