//! Descriptors of primitive closed manifolds and their Cartesian products.
//!
//! A descriptor carries the mod-2 cohomology ring, low-degree integral homology,
//! the total Stiefel–Whitney class and the *lift subspaces*
//! `L¹, L² ⊂ H^{1,2}(M; Z/2)`: the images of reduction mod 2 from integral
//! cohomology. Lift subspaces are ground data for primitives and are propagated
//! to products by the Künneth rule
//!
//! ```text
//! L¹(M₁ × M₂) = L¹(M₁) ⊗ 1 + 1 ⊗ L¹(M₂)
//! L²(M₁ × M₂) = L²(M₁) ⊗ 1 + L¹(M₁) ⊗ L¹(M₂) + 1 ⊗ L²(M₂)
//! ```
//!
//! which holds because `H⁰` and `H¹` with integer coefficients are free.

use std::sync::Arc;

use crate::abelian::{cohomology_via_uct, product_homology, CoefficientRing, FgAbelianGroup};
use crate::error::{Error, Result};
use crate::gf2::Gf2Vec;
use crate::ring::{Generator, Monomial, RingPresentation, TableSpec, Z2Class, Z2Subspace};

/// One closed manifold, primitive or product.
#[derive(Clone, Debug)]
pub struct ManifoldDescriptor {
    pub(crate) name: String,
    pub(crate) compound: bool,
    pub(crate) dim: usize,
    pub(crate) ring: Arc<RingPresentation>,
    pub(crate) homology: Vec<FgAbelianGroup>,
    pub(crate) orientable: bool,
    pub(crate) sw: Vec<Z2Class>,
    pub(crate) lift_l1: Z2Subspace,
    pub(crate) lift_l2: Z2Subspace,
    pub(crate) provenance: Vec<String>,
}

impl ManifoldDescriptor {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<RingPresentation> {
        &self.ring
    }

    pub fn is_product(&self) -> bool {
        self.compound
    }

    /// Whether the whole cohomology ring is known (needed for Wu classes).
    pub fn is_complete(&self) -> bool {
        self.ring.is_full() && self.ring.complete_through() == self.dim
    }

    /// Integral homology `H₀ … H_h` as recorded; for complete descriptors every
    /// degree up to the dimension is present.
    pub fn homology(&self) -> &[FgAbelianGroup] {
        &self.homology
    }

    /// `Hₙ(M; Z)`, zero above the dimension.
    pub fn homology_in(&self, n: usize) -> Result<FgAbelianGroup> {
        if let Some(h) = self.homology.get(n) {
            Ok(h.clone())
        } else if n > self.dim {
            Ok(FgAbelianGroup::trivial())
        } else {
            Err(Error::UnsupportedDegree {
                needed: n,
                available: self.homology.len() - 1,
                context: format!("integral homology of {}", self.name),
            })
        }
    }

    /// Homology list padded with zeros through degree `n`, when available.
    fn homology_through(&self, n: usize) -> Result<Vec<FgAbelianGroup>> {
        (0..=n).map(|k| self.homology_in(k)).collect()
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    /// `w_k(TM)`.
    pub fn sw(&self, k: usize) -> Result<Z2Class> {
        match self.sw.get(k) {
            Some(w) => Ok(w.clone()),
            None => self.ring.zero(k),
        }
    }

    /// `w₀ … w_D` through the ring's known degree.
    pub fn sw_total(&self) -> &[Z2Class] {
        &self.sw
    }

    pub fn w1(&self) -> &Z2Class {
        &self.sw[1]
    }

    pub fn w2(&self) -> &Z2Class {
        &self.sw[2]
    }

    pub fn lift_l1(&self) -> &Z2Subspace {
        &self.lift_l1
    }

    pub fn lift_l2(&self) -> &Z2Subspace {
        &self.lift_l2
    }

    /// The fundamental class, present iff the ring is complete.
    pub fn top_class(&self) -> Option<Z2Class> {
        self.is_complete().then(|| self.ring.basis_element(self.dim, 0).ok()).flatten()
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    fn display_factor(&self) -> String {
        if self.compound {
            format!("({})", self.name)
        } else {
            self.name.clone()
        }
    }

    /// Checks every descriptor invariant. Run on every primitive and product.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvariantViolation(format!("{}: {msg}", self.name)));
        let ring = &self.ring;
        if ring.complete_through() < 2 && !ring.is_full() {
            return bad("ring data must reach degree 2".into());
        }
        if self.homology.len() < 3 {
            return bad("integral homology must be recorded through degree 2".into());
        }
        if self.homology[0] != FgAbelianGroup::free(1) {
            return bad(format!("H_0 = {} but a closed connected manifold has H_0 = Z", self.homology[0]));
        }
        if self.sw.len() != ring.complete_through().max(2) + 1 {
            return bad("total Stiefel–Whitney class does not cover the known degrees".into());
        }
        for (k, w) in self.sw.iter().enumerate() {
            ring.check_class(w)?;
            if w.degree() != k {
                return bad(format!("w{k} is stored in degree {}", w.degree()));
            }
        }
        if !self.sw[0].coords().get(0) {
            return bad("w0 must be 1".into());
        }
        if self.orientable != self.w1().is_zero() {
            return bad(format!(
                "orientable = {} but w1 = {}",
                self.orientable,
                ring.format_class(self.w1())
            ));
        }
        let top = ring.complete_through().min(self.homology.len() - 1);
        for n in 0..=top {
            let uct = match n {
                0 => self.homology[0].hom_to(CoefficientRing::Z2),
                _ => cohomology_via_uct(&self.homology[n], &self.homology[n - 1], CoefficientRing::Z2),
            };
            let expected = uct.elementary_rank(2).expect("Z/2 cohomology is elementary abelian");
            if ring.dim(n)? != expected {
                return bad(format!(
                    "dim H^{n}(Z/2) = {} but the universal coefficient theorem gives {expected}",
                    ring.dim(n)?
                ));
            }
        }
        if self.lift_l1.degree() != 1 || self.lift_l1.ambient_dim() != ring.dim(1)? {
            return bad("L1 does not live in H^1".into());
        }
        if self.lift_l2.degree() != 2 || self.lift_l2.ambient_dim() != ring.dim(2)? {
            return bad("L2 does not live in H^2".into());
        }
        let h1 = &self.homology[1];
        if self.lift_l1.dim() != h1.free_rank() {
            return bad(format!(
                "dim L1 = {} but H_1 = {} has free rank {}",
                self.lift_l1.dim(),
                h1,
                h1.free_rank()
            ));
        }
        // image of H²(M;Z) = Ext(H₁) ⊕ Hom(H₂, Z) under reduction is that group ⊗ Z/2
        let l2_expected = h1.two_torsion_count() + self.homology[2].free_rank();
        if self.lift_l2.dim() != l2_expected {
            return bad(format!(
                "dim L2 = {} but H^2(M;Z) ⊗ Z/2 has dimension {l2_expected}",
                self.lift_l2.dim()
            ));
        }
        let w1_sq = ring.cup(self.w1(), self.w1())?;
        if !self.lift_l2.contains(&w1_sq)? {
            return bad("w1^2 is not in L2".into());
        }
        if self.is_complete() && ring.dim(self.dim)? != 1 {
            return bad("top degree must be one-dimensional".into());
        }
        Ok(())
    }
}

fn binomial_parity(n: usize, k: usize) -> bool {
    // Lucas: C(n, k) is odd iff the bits of k are a subset of those of n
    k <= n && (n & k) == k
}

fn single_generator_ring(base: &str, degree: usize, nilpotence: u32, through: usize, full: bool) -> Result<Arc<RingPresentation>> {
    Ok(Arc::new(RingPresentation::truncated_polynomial(
        vec![Generator::new(base, degree, Some(nilpotence))],
        through,
        full,
    )?))
}

fn trivial_sw(ring: &RingPresentation) -> Result<Vec<Z2Class>> {
    let mut sw = vec![ring.one()];
    for k in 1..=ring.complete_through().max(2) {
        sw.push(ring.zero(k)?);
    }
    Ok(sw)
}

fn finish(d: ManifoldDescriptor) -> Result<ManifoldDescriptor> {
    d.validate()?;
    Ok(d)
}

/// Real projective space `RPⁿ`: `H* = Z/2[a]/(a^{n+1})`, `w = (1 + a)^{n+1}`.
pub fn rp(n: usize) -> Result<ManifoldDescriptor> {
    if n < 1 {
        return Err(Error::UnsupportedParameter("RP(n) requires n ≥ 1".into()));
    }
    let ring = single_generator_ring("a", 1, n as u32 + 1, n, true)?;
    let sw = (0..=n.max(2))
        .map(|k| {
            let mut v = Gf2Vec::zeros(ring.dim(k)?);
            if k <= n {
                v.set(0, binomial_parity(n + 1, k));
            }
            Ok(Z2Class::new(k, v))
        })
        .collect::<Result<_>>()?;
    let homology = (0..=n.max(2))
        .map(|i| match i {
            0 => FgAbelianGroup::free(1),
            i if i < n && i % 2 == 1 => FgAbelianGroup::cyclic(2),
            i if i == n && n % 2 == 1 => FgAbelianGroup::free(1),
            _ => FgAbelianGroup::trivial(),
        })
        .collect();
    let (lift_l1, lift_l2) = if n == 1 {
        (Z2Subspace::full(1, 1), Z2Subspace::zero(2, 0))
    } else {
        // H¹(RPⁿ; Z) = 0, while H²(RPⁿ; Z) = Z/2 is generated by the Bockstein of a,
        // whose reduction is Sq¹a = a²
        (Z2Subspace::zero(1, 1), Z2Subspace::full(2, 1))
    };
    finish(ManifoldDescriptor {
        name: format!("RP({n})"),
        compound: false,
        dim: n,
        ring,
        homology,
        orientable: n % 2 == 1,
        sw,
        lift_l1,
        lift_l2,
        provenance: vec![
            "ring Z/2[a]/(a^(n+1)); w = (1+a)^(n+1)".into(),
            "H_i = Z/2 for odd i < n, 0 for even 0 < i < n; H_n = Z (n odd) or 0 (n even)".into(),
            "L2 spanned by a^2 = Sq^1 a, the reduction of the integral Bockstein of a".into(),
        ],
    })
}

/// The sphere `Sⁿ`.
pub fn sphere(n: usize) -> Result<ManifoldDescriptor> {
    if n < 1 {
        return Err(Error::UnsupportedParameter("S(n) requires n ≥ 1".into()));
    }
    let ring = single_generator_ring("s", n, 2, n, true)?;
    let mut homology = vec![FgAbelianGroup::trivial(); n.max(2) + 1];
    homology[0] = FgAbelianGroup::free(1);
    homology[n] = FgAbelianGroup::free(1);
    let sw = trivial_sw(&ring)?;
    let lift_l1 = Z2Subspace::full(1, ring.dim(1)?);
    let lift_l2 = Z2Subspace::full(2, ring.dim(2)?);
    finish(ManifoldDescriptor {
        name: format!("S({n})"),
        compound: false,
        dim: n,
        ring,
        homology,
        orientable: true,
        sw,
        lift_l1,
        lift_l2,
        provenance: vec![
            "ring Z/2[s]/(s^2), deg s = n; stably parallelizable, w = 1".into(),
            "free homology, so every class lifts".into(),
        ],
    })
}

/// The torus `Tⁿ = (S¹)ⁿ`, stored as one primitive with generators `t1 … tn`.
pub fn torus(n: usize) -> Result<ManifoldDescriptor> {
    if n < 1 {
        return Err(Error::UnsupportedParameter("T(n) requires n ≥ 1".into()));
    }
    let generators = (1..=n).map(|i| Generator::new(format!("t{i}"), 1, Some(2))).collect();
    let ring = Arc::new(RingPresentation::truncated_polynomial(generators, n, true)?);
    let mut homology: Vec<FgAbelianGroup> = (0..=n)
        .map(|i| {
            let c = (0..i).fold(1usize, |acc, k| acc * (n - k) / (k + 1));
            FgAbelianGroup::free(c)
        })
        .collect();
    while homology.len() < 3 {
        homology.push(FgAbelianGroup::trivial());
    }
    let sw = trivial_sw(&ring)?;
    let lift_l1 = Z2Subspace::full(1, ring.dim(1)?);
    let lift_l2 = Z2Subspace::full(2, ring.dim(2)?);
    finish(ManifoldDescriptor {
        name: format!("T({n})"),
        compound: false,
        dim: n,
        ring,
        homology,
        orientable: true,
        sw,
        lift_l1,
        lift_l2,
        provenance: vec![
            "exterior ring on n degree-1 generators; parallelizable, w = 1".into(),
            "H_i = Z^C(n,i), free, so every class lifts".into(),
        ],
    })
}

/// The non-orientable `k`-manifold `(Möbius band × S^{k-2}) ∪ (S¹ × D^{k-1})`,
/// known only through degree 2: `H₀ = Z`, `H₁ = Z`, `H₂ = 0`.
pub fn mk(k: usize) -> Result<ManifoldDescriptor> {
    if k < 5 {
        return Err(Error::UnsupportedParameter(
            "M(k) requires k ≥ 5 (its homology H_0 = Z, H_1 = Z, H_2 = 0 is only established for k ≥ 5)".into(),
        ));
    }
    let ring = single_generator_ring("x", 1, 2, 2, false)?;
    let x = ring.generator_class(0)?;
    let sw = vec![ring.one(), x, ring.zero(2)?];
    finish(ManifoldDescriptor {
        name: format!("M({k})"),
        compound: false,
        dim: k,
        lift_l1: Z2Subspace::full(1, 1),
        lift_l2: Z2Subspace::zero(2, 0),
        ring,
        homology: vec![FgAbelianGroup::free(1), FgAbelianGroup::free(1), FgAbelianGroup::trivial()],
        orientable: false,
        sw,
        provenance: vec![
            "H_0 = Z, H_1 = Z, H_2 = 0 (k ≥ 5); hence H^1(Z/2) = span{x}, H^2(Z/2) = 0 and x^2 = 0".into(),
            "non-orientable with a single nonzero degree-1 class, so w1 = x; w2 = 0 because H^2 = 0".into(),
            "L1 = span{x}: H^1(M;Z) = Z reduces onto H^1(M;Z/2)".into(),
            "known only through degree 2".into(),
        ],
    })
}

/// The Klein bottle. Basis `x, y` of `H¹` with `x² = 0`, `xy = y² = u`;
/// `w₁ = x`, `w₂ = 0`, `H₁ = Z ⊕ Z/2`.
#[cfg(feature = "klein")]
pub fn klein() -> Result<ManifoldDescriptor> {
    use std::collections::HashMap;
    let generators = vec![Generator::new("x", 1, Some(2)), Generator::new("y", 1, None)];
    let basis = vec![
        vec![Monomial(vec![0, 0])],
        vec![Monomial(vec![1, 0]), Monomial(vec![0, 1])],
        vec![Monomial(vec![1, 1])],
    ];
    let u = Gf2Vec::unit(1, 0);
    let mut products = HashMap::new();
    products.insert((0, 0, 0, 0), Gf2Vec::unit(1, 0));
    products.insert((0, 0, 1, 0), Gf2Vec::unit(2, 0));
    products.insert((0, 0, 1, 1), Gf2Vec::unit(2, 1));
    products.insert((0, 0, 2, 0), u.clone());
    products.insert((1, 0, 1, 1), u.clone());
    products.insert((1, 1, 1, 1), u.clone());
    let sq_generators = vec![
        vec![Some(Gf2Vec::unit(2, 0)), Some(Gf2Vec::zeros(1))],
        vec![Some(Gf2Vec::unit(2, 1)), Some(u)],
    ];
    let ring = Arc::new(RingPresentation::from_table(TableSpec {
        generators,
        complete_through: 2,
        full: true,
        basis,
        products,
        sq_generators,
    })?);
    let w1 = ring.generator_class(0)?;
    finish(ManifoldDescriptor {
        name: "K".into(),
        compound: false,
        dim: 2,
        lift_l1: Z2Subspace::span(1, 2, [&w1])?,
        lift_l2: Z2Subspace::full(2, 1),
        sw: vec![ring.one(), w1, ring.zero(2)?],
        ring,
        homology: vec![FgAbelianGroup::free(1), "Z + Z/2".parse()?, FgAbelianGroup::trivial()],
        orientable: false,
        provenance: vec![
            "cellular chain complex with 2-cell attached along a b a b^-1: H_1 = Z + Z/2, H_2 = 0".into(),
            "ring isomorphic to the connected-sum ring of two projective planes via x = a1 + a2, y = a1".into(),
            "w1 = x (sum of the summands' w1), w2 = 0 (Euler characteristic 0); checked by Wu's formula".into(),
            "L1 = {z : z^2 = 0} = span{x}, the kernel of the Bockstein; L2 = H^2 since H^3(K;Z) = 0".into(),
        ],
    })
}

/// Cartesian product. Cohomology through the degree both factors determine,
/// Whitney product of total classes, Künneth homology, and lift subspaces by the
/// rule in the module docs.
pub fn product(m1: &ManifoldDescriptor, m2: &ManifoldDescriptor) -> Result<ManifoldDescriptor> {
    let degree = RingPresentation::achievable_degree(&m1.ring, &m2.ring);
    let ring = Arc::new(RingPresentation::kunneth_tensor(&m1.ring, &m2.ring, degree)?);

    let mut sw = Vec::with_capacity(degree + 1);
    for n in 0..=degree {
        let mut w = ring.zero(n)?;
        for i in 0..=n {
            let (a, b) = (m1.sw(i)?, m2.sw(n - i)?);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            w = w.add(&ring.cross(&a, &b)?)?;
        }
        sw.push(w);
    }

    let h_top = if m1.is_complete() && m2.is_complete() {
        m1.dim + m2.dim
    } else {
        let avail = |m: &ManifoldDescriptor| if m.is_complete() { usize::MAX } else { m.homology.len() - 1 };
        avail(m1).min(avail(m2))
    };
    let (h1, h2) = (m1.homology_through(h_top)?, m2.homology_through(h_top)?);
    let homology = (0..=h_top)
        .map(|n| product_homology(&h1, &h2, n))
        .collect::<Result<Vec<_>>>()?;

    let unit1 = Z2Subspace::full(0, 1);
    let lift_l1 = ring
        .subspace_tensor(&m1.lift_l1, &unit1)?
        .sum(&ring.subspace_tensor(&unit1, &m2.lift_l1)?)?;
    let lift_l2 = ring
        .subspace_tensor(&m1.lift_l2, &unit1)?
        .sum(&ring.subspace_tensor(&m1.lift_l1, &m2.lift_l1)?)?
        .sum(&ring.subspace_tensor(&unit1, &m2.lift_l2)?)?;

    finish(ManifoldDescriptor {
        name: format!("{} * {}", m1.name, m2.display_factor()),
        compound: true,
        dim: m1.dim + m2.dim,
        ring,
        homology,
        orientable: m1.orientable && m2.orientable,
        sw,
        lift_l1,
        lift_l2,
        provenance: vec![format!("product of {} and {}", m1.name, m2.name)],
    })
}

/// A real vector bundle described by its first two Stiefel–Whitney classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleDescriptor {
    pub rank: usize,
    pub w1: Z2Class,
    pub w2: Z2Class,
    pub description: String,
}

/// The trivial bundle `θᵏ`.
pub fn trivial_bundle(ring: &RingPresentation, k: usize) -> Result<BundleDescriptor> {
    Ok(BundleDescriptor {
        rank: k,
        w1: ring.zero(1)?,
        w2: ring.zero(2)?,
        description: format!("θ^{k}"),
    })
}

/// The line bundle with `w₁ = α`.
pub fn line_bundle(ring: &RingPresentation, alpha: &Z2Class) -> Result<BundleDescriptor> {
    if alpha.degree() != 1 {
        return Err(Error::Misuse("a line bundle is determined by a degree-1 class".into()));
    }
    ring.check_class(alpha)?;
    Ok(BundleDescriptor {
        rank: 1,
        w1: alpha.clone(),
        w2: ring.zero(2)?,
        description: format!("l({})", ring.format_class(alpha)),
    })
}

/// Whitney sum: `w₁ = w₁ + w₁'`, `w₂ = w₂ + w₁w₁' + w₂'`.
pub fn whitney_sum(ring: &RingPresentation, b1: &BundleDescriptor, b2: &BundleDescriptor) -> Result<BundleDescriptor> {
    for c in [&b1.w1, &b1.w2, &b2.w1, &b2.w2] {
        ring.check_class(c)?;
    }
    Ok(BundleDescriptor {
        rank: b1.rank + b2.rank,
        w1: b1.w1.add(&b2.w1)?,
        w2: b1.w2.add(&ring.cup(&b1.w1, &b2.w1)?)?.add(&b2.w2)?,
        description: format!("{} ⊕ {}", b1.description, b2.description),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_plane_classes() {
        let m = rp(2).unwrap();
        let r = m.ring();
        let w: Vec<_> = m.sw_total().iter().map(|w| r.format_class(w)).collect();
        assert_eq!(w, ["1", "a", "a^2"]);
        assert!(!m.orientable());
        assert_eq!(m.lift_l1().dim(), 0);
        assert!(m.lift_l2().contains(&r.parse_class(2, "a^2").unwrap()).unwrap());
        assert!(!m.lift_l1().contains(&r.generator_class(0).unwrap()).unwrap());
    }

    #[test]
    fn odd_projective_spaces_are_orientable() {
        for n in 1..=9 {
            assert_eq!(rp(n).unwrap().orientable(), n % 2 == 1);
        }
    }

    #[test]
    fn circle_lifts_everything() {
        let s = sphere(1).unwrap();
        assert!(s.orientable());
        assert_eq!(s.lift_l1().dim(), 1);
        assert_eq!(s.lift_l1().ambient_dim(), 1);
    }

    #[test]
    fn mk_data() {
        let m = mk(5).unwrap();
        assert!(!m.orientable());
        assert!(m.w2().is_zero());
        assert_eq!(m.lift_l1().dim(), m.ring().dim(1).unwrap());
        assert!(m.top_class().is_none());
        assert!(matches!(mk(3), Err(Error::UnsupportedParameter(_))));
        assert!(matches!(rp(0), Err(Error::UnsupportedParameter(_))));
    }

    #[test]
    fn product_of_projective_planes() {
        let p = product(&rp(2).unwrap(), &rp(2).unwrap()).unwrap();
        let r = p.ring();
        assert_eq!(r.format_class(p.w2()), "a1^2 + a1 a2 + a2^2");
        let l2: Vec<_> = p.lift_l2().basis().iter().map(|c| r.format_class(c)).collect();
        assert_eq!(l2, ["a1^2", "a2^2"]);
        assert_eq!(p.name(), "RP(2) * RP(2)");
        assert_eq!(p.homology()[2], "Z/2".parse().unwrap());
        assert_eq!(p.homology()[3], "Z/2".parse().unwrap());
    }

    #[test]
    fn product_with_high_sphere_keeps_low_degrees() {
        let m = rp(2).unwrap();
        let p = product(&m, &sphere(3).unwrap()).unwrap();
        for k in 0..=2 {
            assert_eq!(p.ring().dim(k).unwrap(), m.ring().dim(k).unwrap());
            assert_eq!(p.sw(k).unwrap(), p.ring().embed_left(&m.sw(k).unwrap()).unwrap());
        }
        assert_eq!(p.lift_l2().dim(), 1);
    }

    #[test]
    fn mk_squared_lifts_all_of_h2() {
        let p = product(&mk(5).unwrap(), &mk(5).unwrap()).unwrap();
        assert_eq!(p.lift_l2().dim(), p.ring().dim(2).unwrap());
        assert_eq!(p.ring().complete_through(), 2);
        assert_eq!(p.dim(), 10);
    }

    #[test]
    fn nested_product_name() {
        let a = rp(2).unwrap();
        let b = product(&sphere(1).unwrap(), &sphere(2).unwrap()).unwrap();
        assert_eq!(product(&a, &b).unwrap().name(), "RP(2) * (S(1) * S(2))");
    }

    #[test]
    fn line_bundle_sum_on_projective_planes() {
        let p = product(&rp(2).unwrap(), &rp(2).unwrap()).unwrap();
        let r = p.ring();
        let a1 = r.parse_class(1, "a1").unwrap();
        let a2 = r.parse_class(1, "a2").unwrap();
        let e = whitney_sum(r, &line_bundle(r, &a1).unwrap(), &line_bundle(r, &a2).unwrap()).unwrap();
        assert_eq!(r.format_class(&e.w1), "a1 + a2");
        assert_eq!(r.format_class(&e.w2), "a1 a2");
        assert_eq!(e.description, "l(a1) ⊕ l(a2)");
        let stable = whitney_sum(r, &e, &trivial_bundle(r, 3).unwrap()).unwrap();
        assert_eq!((stable.w1, stable.w2, stable.rank), (e.w1, e.w2, 5));
    }

    #[cfg(feature = "klein")]
    #[test]
    fn klein_bottle_is_valid() {
        let k = klein().unwrap();
        assert!(!k.orientable());
        assert!(k.lift_l1().contains(k.w1()).unwrap());
        assert_eq!(k.homology()[1], "Z + Z/2".parse().unwrap());
    }
}
