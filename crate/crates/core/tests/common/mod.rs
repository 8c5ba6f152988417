#![allow(dead_code)]

use pinc::abelian::FgAbelianGroup;
use pinc::expr::ManifoldExpr;
use proptest::prelude::*;

pub fn group() -> impl Strategy<Value = FgAbelianGroup> {
    (0usize..=3, prop::collection::vec(2u64..=16, 0..=3))
        .prop_map(|(free, orders)| FgAbelianGroup::new(free, orders).unwrap())
}

/// Primitives with complete rings.
pub fn complete_primitive() -> impl Strategy<Value = ManifoldExpr> {
    prop_oneof![
        (1u64..=4).prop_map(ManifoldExpr::Sphere),
        (1u64..=5).prop_map(ManifoldExpr::Rp),
        (1u64..=3).prop_map(ManifoldExpr::Torus),
        Just(ManifoldExpr::Klein),
    ]
}

pub fn primitive() -> impl Strategy<Value = ManifoldExpr> {
    prop_oneof![
        4 => complete_primitive(),
        1 => (5u64..=7).prop_map(ManifoldExpr::Mk),
    ]
}

/// Products of up to four primitives with arbitrary grouping.
pub fn expr() -> impl Strategy<Value = ManifoldExpr> {
    primitive().prop_recursive(3, 4, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| ManifoldExpr::product(a, b))
    })
}

pub fn complete_expr() -> impl Strategy<Value = ManifoldExpr> {
    complete_primitive().prop_recursive(2, 3, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| ManifoldExpr::product(a, b))
    })
}
