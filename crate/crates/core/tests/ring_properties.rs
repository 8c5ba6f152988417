mod common;

use pinc::catalog::{self, ManifoldDescriptor};
use pinc::ring::{RingPresentation, Z2Class, Z2Subspace};
use pinc::steenrod::sq;
use proptest::prelude::*;

fn basis(r: &RingPresentation, n: usize) -> Vec<Z2Class> {
    (0..r.dim(n).unwrap()).map(|i| r.basis_element(n, i).unwrap()).collect()
}

/// Degrees in which products are defined without truncation.
fn top(m: &ManifoldDescriptor) -> usize {
    m.ring().complete_through().min(m.dim())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cup_is_commutative_and_associative(e in common::expr()) {
        let m = e.build().unwrap();
        let r = m.ring();
        let d = top(&m).min(4);
        for p in 0..=d {
            for q in 0..=d - p {
                for x in basis(r, p) {
                    for y in basis(r, q) {
                        let xy = r.cup(&x, &y).unwrap();
                        prop_assert_eq!(&xy, &r.cup(&y, &x).unwrap());
                        for s in 0..=d - p - q {
                            for z in basis(r, s) {
                                let left = r.cup(&xy, &z).unwrap();
                                let right = r.cup(&x, &r.cup(&y, &z).unwrap()).unwrap();
                                prop_assert_eq!(left, right);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cartan_formula(e in common::expr()) {
        let m = e.build().unwrap();
        let r = m.ring();
        let d = top(&m).min(5);
        for p in 1..=d {
            for q in 1..=d - p {
                for x in basis(r, p) {
                    for y in basis(r, q) {
                        let xy = r.cup(&x, &y).unwrap();
                        for k in 0..=(d - p - q) {
                            let mut expected = r.zero(p + q + k).unwrap();
                            for i in 0..=k {
                                let term = r.cup(&sq(r, i, &x).unwrap(), &sq(r, k - i, &y).unwrap()).unwrap();
                                expected = expected.add(&term).unwrap();
                            }
                            prop_assert_eq!(sq(r, k, &xy).unwrap(), expected);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unstable_squares(e in common::expr()) {
        let m = e.build().unwrap();
        let r = m.ring();
        let d = top(&m);
        for n in 1..=d.min(4) {
            for x in basis(r, n) {
                if 2 * n <= d {
                    prop_assert_eq!(sq(r, n, &x).unwrap(), r.cup(&x, &x).unwrap());
                }
                prop_assert_eq!(sq(r, 0, &x).unwrap(), x.clone());
            }
        }
    }

    #[test]
    fn product_dimensions_follow_kunneth(a in common::primitive(), b in common::primitive()) {
        let (x, y) = (a.build().unwrap(), b.build().unwrap());
        let p = catalog::product(&x, &y).unwrap();
        for n in 0..=p.ring().complete_through() {
            let mut expected = 0;
            for i in 0..=n {
                expected += x.ring().dim(i).unwrap() * y.ring().dim(n - i).unwrap();
            }
            prop_assert_eq!(p.ring().dim(n).unwrap(), expected);
        }
    }

    #[test]
    fn decompose_recomposes(a in common::primitive(), b in common::primitive(), bits in any::<u64>()) {
        let p = catalog::product(&a.build().unwrap(), &b.build().unwrap()).unwrap();
        let r = p.ring();
        let n = r.dim(2).unwrap().min(63);
        let x = Z2Class::new(2, pinc::gf2::Gf2Vec::from_mask(n, bits & ((1u64 << n) - 1)));
        let [a20, a11, a02] = r.decompose(&x).unwrap();
        let comps = r.bigraded_components(&x).unwrap();
        prop_assert_eq!(comps.len(), 3);
        prop_assert_eq!(a20.add(&a11).unwrap().add(&a02).unwrap(), x);
    }

    #[test]
    fn subspace_tensor_dimension(a in common::primitive(), b in common::primitive()) {
        let (x, y) = (a.build().unwrap(), b.build().unwrap());
        let p = catalog::product(&x, &y).unwrap();
        let t = p.ring().subspace_tensor(x.lift_l1(), y.lift_l1()).unwrap();
        prop_assert_eq!(t.dim(), x.lift_l1().dim() * y.lift_l1().dim());
        let zero = Z2Subspace::zero(1, x.ring().dim(1).unwrap());
        prop_assert_eq!(p.ring().subspace_tensor(&zero, y.lift_l1()).unwrap().dim(), 0);
    }
}

#[test]
fn cross_terms_cancel_when_squaring() {
    let n = catalog::product(
        &catalog::product(&catalog::rp(2).unwrap(), &catalog::rp(2).unwrap()).unwrap(),
        &catalog::sphere(1).unwrap(),
    )
    .unwrap();
    let r = n.ring();
    let x = r.parse_class(1, "a1 + a2").unwrap();
    assert_eq!(r.format_class(&r.cup(&x, &x).unwrap()), "a1^2 + a2^2");
}

#[test]
fn sphere_top_class_squares_to_zero() {
    let s = catalog::sphere(3).unwrap();
    let x = s.ring().generator_class(0).unwrap();
    assert!(s.ring().cup(&x, &x).unwrap().is_zero());
}

#[test]
fn two_circles_give_one_class_in_degree_two() {
    let p = catalog::product(&catalog::sphere(1).unwrap(), &catalog::sphere(1).unwrap()).unwrap();
    assert_eq!(p.ring().dim(2).unwrap(), 1);
    assert_eq!(p.ring().basis_label(2, 0), "s1 s2");
}

#[test]
fn truncated_products_refuse_high_degrees() {
    let p = catalog::product(&catalog::mk(5).unwrap(), &catalog::rp(2).unwrap()).unwrap();
    assert!(matches!(
        p.ring().dim(3),
        Err(pinc::Error::UnsupportedDegree { needed: 3, .. })
    ));
}

#[test]
fn decompose_of_projective_planes() {
    let p = catalog::product(&catalog::rp(2).unwrap(), &catalog::rp(2).unwrap()).unwrap();
    let r = p.ring();
    let parts = r.decompose(p.w2()).unwrap();
    let labels: Vec<_> = parts.iter().map(|c| r.format_class(c)).collect();
    assert_eq!(labels, ["a1^2", "a1 a2", "a2^2"]);
    assert!(matches!(
        catalog::rp(2).unwrap().ring().decompose(&catalog::rp(2).unwrap().ring().zero(2).unwrap()),
        Err(pinc::Error::Misuse(_))
    ));
}
