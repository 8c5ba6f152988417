mod common;

use std::collections::HashMap;

use pinc::abelian::{cohomology_via_uct, product_homology, CoefficientRing, FgAbelianGroup};
use pinc::catalog;
use pinc::gf2::Gf2Vec;
use pinc::ring::{Generator, Monomial, RingPresentation, TableSpec, Z2Class};
use pinc::snf::{self, chain_homology, IntMatrix};
use pinc::steenrod::sq;
use proptest::prelude::*;

fn g(s: &str) -> FgAbelianGroup {
    s.parse().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn functors_match_smith_normal_form(a in common::group(), b in common::group(), m in 2u64..=12) {
        prop_assert_eq!(a.tensor(&b), snf::tensor_oracle(&a, &b));
        prop_assert_eq!(a.tor(&b), snf::tor_oracle(&a, &b));
        for r in [CoefficientRing::Integers, CoefficientRing::Modular(m)] {
            prop_assert_eq!(a.hom_to(r), snf::hom_oracle(&a, r));
            prop_assert_eq!(a.ext_to(r), snf::ext_oracle(&a, r));
        }
    }

    #[test]
    fn tensor_and_tor_are_symmetric_and_additive(a in common::group(), b in common::group(), c in common::group()) {
        prop_assert_eq!(a.tensor(&b), b.tensor(&a));
        prop_assert_eq!(a.tor(&b), b.tor(&a));
        let bc = b.direct_sum(&c);
        prop_assert_eq!(a.tensor(&bc), a.tensor(&b).direct_sum(&a.tensor(&c)));
        prop_assert_eq!(a.tor(&bc), a.tor(&b).direct_sum(&a.tor(&c)));
    }

    #[test]
    fn tor_vanishes_on_free_groups(a in common::group(), k in 0usize..=3) {
        prop_assert!(FgAbelianGroup::free(k).tor(&a).is_trivial());
    }

    #[test]
    fn mod_two_cohomology_is_elementary(hn in common::group(), hm in common::group()) {
        let c = cohomology_via_uct(&hn, &hm, CoefficientRing::Z2);
        prop_assert!(c.elementary_rank(2).is_some());
        let dim = c.elementary_rank(2).unwrap();
        let hom = hn.hom_to(CoefficientRing::Z2).elementary_rank(2).unwrap();
        let ext = hm.ext_to(CoefficientRing::Z2).elementary_rank(2).unwrap();
        prop_assert_eq!(dim, hom + ext);
    }

    #[test]
    fn odd_torsion_dies_mod_two(a in common::group()) {
        prop_assert!(a.odd_torsion().tensor(&FgAbelianGroup::cyclic(2)).is_trivial());
    }

    #[test]
    fn display_round_trips(a in common::group()) {
        prop_assert_eq!(a.to_string().parse::<FgAbelianGroup>().unwrap(), a);
    }
}

#[test]
fn fixed_functor_values() {
    assert_eq!(g("Z + Z/2").direct_sum(&g("Z/2")), g("Z + Z/2 + Z/2"));
    assert_eq!(g("Z/4").tensor(&g("Z/2")), g("Z/2"));
    assert_eq!(g("Z/2").tensor(&g("Z/3")), g("0"));
    assert_eq!(g("Z/4").tor(&g("Z/6")), g("Z/2"));
    assert_eq!(g("Z").hom_to(CoefficientRing::Z2), g("Z/2"));
    assert_eq!(g("Z/8").ext_to(CoefficientRing::Z2), g("Z/2"));
    assert_eq!(cohomology_via_uct(&g("Z"), &g("Z"), CoefficientRing::Z2), g("Z/2"));
    assert_eq!(cohomology_via_uct(&g("0"), &g("Z"), CoefficientRing::Z2), g("0"));
    assert_eq!(cohomology_via_uct(&g("0"), &g("Z"), CoefficientRing::Integers), g("0"));
}

/// Cellular chain complex as boundary matrices `d_k : C_k → C_{k-1}` (`d_0` has no columns).
struct Cellular {
    ranks: Vec<usize>,
    d: Vec<IntMatrix>,
}

impl Cellular {
    fn new(ranks: Vec<usize>, mut d: Vec<IntMatrix>) -> Self {
        d.insert(0, IntMatrix::zeros(ranks[0], 0));
        Cellular { ranks, d }
    }

    fn projective(n: usize) -> Self {
        // one cell per dimension, d_k = 1 + (-1)^k
        let d = (1..=n)
            .map(|k| IntMatrix::diagonal(1, 1, &[if k % 2 == 0 { 2 } else { 0 }]))
            .collect();
        Cellular::new(vec![1; n + 1], d)
    }

    fn sphere(n: usize) -> Self {
        let mut ranks = vec![0; n + 1];
        ranks[0] = 1;
        ranks[n] = 1;
        let d = (1..=n).map(|k| IntMatrix::zeros(ranks[k], ranks[k - 1])).collect();
        Cellular::new(ranks, d)
    }

    fn klein() -> Self {
        Cellular::new(
            vec![1, 2, 1],
            vec![IntMatrix::zeros(2, 1), IntMatrix::from_rows(&[vec![2, 0]])],
        )
    }

    fn dim(&self) -> usize {
        self.ranks.len() - 1
    }

    fn rank(&self, k: usize) -> usize {
        self.ranks.get(k).copied().unwrap_or(0)
    }

    fn boundary(&self, k: usize) -> IntMatrix {
        if k <= self.dim() {
            self.d[k].clone()
        } else if k == self.dim() + 1 {
            IntMatrix::zeros(0, self.rank(self.dim()))
        } else {
            IntMatrix::zeros(0, 0)
        }
    }

    /// `d(a ⊗ b) = da ⊗ b + (-1)^i a ⊗ db`, blocks ordered by the first degree.
    fn product(&self, other: &Cellular) -> Cellular {
        let n = self.dim() + other.dim();
        let blocks = |k: usize| -> Vec<(usize, usize, usize)> {
            let mut off = 0;
            let mut v = Vec::new();
            for i in 0..=k {
                let size = self.rank(i) * other.rank(k - i);
                v.push((i, off, size));
                off += size;
            }
            v
        };
        let ranks: Vec<usize> = (0..=n).map(|k| blocks(k).iter().map(|b| b.2).sum()).collect();
        let mut d = Vec::new();
        for k in 1..=n {
            let mut m = IntMatrix::zeros(ranks[k], ranks[k - 1]);
            let target = blocks(k - 1);
            for (i, src, _) in blocks(k) {
                let j = k - i;
                let mut place = |piece: IntMatrix, ti: usize| {
                    let (_, dst, _) = target[ti];
                    for r in 0..piece.rows() {
                        for c in 0..piece.cols() {
                            m[(src + r, dst + c)] += piece[(r, c)];
                        }
                    }
                };
                if i >= 1 {
                    place(self.boundary(i).kronecker(&IntMatrix::identity(other.rank(j))), i - 1);
                }
                if j >= 1 {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    place(IntMatrix::identity(self.rank(i)).kronecker(&other.boundary(j)).scaled(sign), i);
                }
            }
            d.push(m);
        }
        Cellular::new(ranks, d)
    }

    fn homology(&self, k: usize) -> FgAbelianGroup {
        chain_homology(&self.boundary(k + 1), &self.boundary(k))
    }
}

#[test]
fn cellular_projective_spaces_match_catalog() {
    for n in 1..=7 {
        let c = Cellular::projective(n);
        let m = catalog::rp(n).unwrap();
        for k in 0..=n {
            assert_eq!(c.homology(k), m.homology()[k], "H_{k}(RP({n}))");
        }
    }
}

#[test]
fn product_homology_matches_cellular_products() {
    let cases: Vec<(&str, Cellular, Vec<FgAbelianGroup>)> = vec![
        ("RP(2)", Cellular::projective(2), catalog::rp(2).unwrap().homology().to_vec()),
        ("RP(3)", Cellular::projective(3), catalog::rp(3).unwrap().homology().to_vec()),
        ("RP(4)", Cellular::projective(4), catalog::rp(4).unwrap().homology().to_vec()),
        ("S(2)", Cellular::sphere(2), catalog::sphere(2).unwrap().homology().to_vec()),
        ("K", Cellular::klein(), catalog::klein().unwrap().homology().to_vec()),
    ];
    for (na, ca, ha) in &cases {
        for (nb, cb, hb) in &cases {
            let p = ca.product(cb);
            let pad = |h: &Vec<FgAbelianGroup>| {
                let mut h = h.clone();
                h.resize(p.dim() + 1, FgAbelianGroup::trivial());
                h
            };
            for n in 0..=p.dim() {
                assert_eq!(
                    product_homology(&pad(ha), &pad(hb), n).unwrap(),
                    p.homology(n),
                    "H_{n}({na} × {nb})"
                );
            }
        }
    }
}

#[test]
fn projective_plane_squared_homology() {
    // Tor(H_1, H_1) sits in degree 3, so H_2 is a single Z/2
    let c = Cellular::projective(2).product(&Cellular::projective(2));
    let h: Vec<String> = (0..=4).map(|k| c.homology(k).to_string()).collect();
    assert_eq!(h, ["Z", "Z/2 + Z/2", "Z/2", "Z/2", "0"]);
    let rp2 = catalog::rp(2).unwrap();
    let mut hs = rp2.homology().to_vec();
    hs.resize(5, FgAbelianGroup::trivial());
    assert_eq!(product_homology(&hs, &hs, 2).unwrap(), g("Z/2"));
    assert_eq!(product_homology(&hs, &hs, 3).unwrap(), g("Z/2"));
    // mod-2 Betti numbers 1, 2, 3, 2, 1
    let betti: Vec<usize> = (0..=4)
        .map(|k| {
            let prev = if k == 0 { g("0") } else { c.homology(k - 1) };
            cohomology_via_uct(&c.homology(k), &prev, CoefficientRing::Z2)
                .elementary_rank(2)
                .unwrap()
        })
        .collect();
    assert_eq!(betti, [1, 2, 3, 2, 1]);
}

#[test]
fn product_homology_needs_data() {
    let h = vec![g("Z"), g("Z")];
    assert!(matches!(
        product_homology(&h, &h, 2),
        Err(pinc::Error::UnsupportedDegree { needed: 2, .. })
    ));
    assert_eq!(product_homology(&h, &h, 0).unwrap(), g("Z"));
}

#[test]
fn mk_products_have_free_low_homology() {
    let m = catalog::mk(5).unwrap();
    for n in 0..=2 {
        assert!(product_homology(m.homology(), m.homology(), n).unwrap().is_free());
    }
}

/// The connected sum of two projective planes: `a² = b² = u`, `ab = 0`.
fn connected_sum_ring() -> RingPresentation {
    let generators = vec![Generator::new("a", 1, None), Generator::new("b", 1, None)];
    let basis = vec![
        vec![Monomial(vec![0, 0])],
        vec![Monomial(vec![1, 0]), Monomial(vec![0, 1])],
        vec![Monomial(vec![2, 0])],
    ];
    let u = Gf2Vec::unit(1, 0);
    let mut products = HashMap::new();
    products.insert((0, 0, 0, 0), Gf2Vec::unit(1, 0));
    products.insert((0, 0, 1, 0), Gf2Vec::unit(2, 0));
    products.insert((0, 0, 1, 1), Gf2Vec::unit(2, 1));
    products.insert((0, 0, 2, 0), u.clone());
    products.insert((1, 0, 1, 0), u.clone());
    products.insert((1, 1, 1, 1), u.clone());
    RingPresentation::from_table(TableSpec {
        generators,
        complete_through: 2,
        full: true,
        basis,
        products,
        sq_generators: vec![
            vec![Some(Gf2Vec::unit(2, 0)), Some(u.clone())],
            vec![Some(Gf2Vec::unit(2, 1)), Some(u)],
        ],
    })
    .unwrap()
}

#[test]
fn klein_bottle_fixture() {
    let k = catalog::klein().unwrap();
    let kr = k.ring();
    let cs = connected_sum_ring();

    // homology from the cellular complex
    let c = Cellular::klein();
    for n in 0..=2 {
        assert_eq!(k.homology()[n], c.homology(n));
    }

    // x ↦ a + b, y ↦ a is a ring isomorphism H*(K) → H*(RP2 # RP2)
    let phi = |x: &Z2Class| -> Z2Class {
        match x.degree() {
            0 => x.clone(),
            1 => {
                let mut v = Gf2Vec::zeros(2);
                if x.coords().get(0) {
                    v.flip(0);
                    v.flip(1);
                }
                if x.coords().get(1) {
                    v.flip(0);
                }
                Z2Class::new(1, v)
            }
            _ => x.clone(),
        }
    };
    for i in 0..2 {
        for j in 0..2 {
            let (x, y) = (kr.basis_element(1, i).unwrap(), kr.basis_element(1, j).unwrap());
            assert_eq!(phi(&kr.cup(&x, &y).unwrap()), cs.cup(&phi(&x), &phi(&y)).unwrap());
        }
        let x = kr.basis_element(1, i).unwrap();
        assert_eq!(phi(&sq(kr, 1, &x).unwrap()), sq(&cs, 1, &phi(&x)).unwrap());
    }

    // Wu class by exhaustion in the connected-sum ring: v1 · z = Sq¹ z for all z
    let candidates: Vec<Z2Class> = (0..4u64)
        .map(|m| Z2Class::new(1, Gf2Vec::from_mask(2, m)))
        .filter(|v| {
            (0..2).all(|i| {
                let z = cs.basis_element(1, i).unwrap();
                cs.cup(v, &z).unwrap() == sq(&cs, 1, &z).unwrap()
            })
        })
        .collect();
    assert_eq!(candidates.len(), 1);
    assert_eq!(candidates[0], phi(k.w1()));
    // w2 = v2 + v1² = v1²
    assert_eq!(cs.cup(&candidates[0], &candidates[0]).unwrap(), phi(k.w2()));

    // L1 is the kernel of the Bockstein on H¹, of dimension rank H_1 = 1
    let kernel: Vec<Z2Class> = (1..4u64)
        .map(|m| Z2Class::new(1, Gf2Vec::from_mask(2, m)))
        .filter(|z| sq(kr, 1, z).unwrap().is_zero())
        .collect();
    assert_eq!(kernel.len(), 1);
    assert!(k.lift_l1().contains(&kernel[0]).unwrap());
    assert_eq!(k.lift_l1().dim(), k.homology()[1].free_rank());
    assert_eq!(k.lift_l2().dim(), 1);

    pinc::steenrod::verify_wu(&k).unwrap();
}
