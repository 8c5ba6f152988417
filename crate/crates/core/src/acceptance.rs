//! The acceptance suite: eight criteria, each a self-contained check that returns
//! a one-line summary on success and the first counterexample on failure.
//! `pinc verify` and the `acceptance` test target both run [`run_all`].

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{product_homology, CoefficientRing, FgAbelianGroup};
use crate::catalog::{self, ManifoldDescriptor};
use crate::decide::{self, LipschitzSearch, LipschitzVerdict, PinCDecision};
use crate::error::Result;
use crate::expr::{parse, ManifoldExpr};
use crate::gf2::Gf2Vec;
use crate::ring::{Z2Class, Z2Subspace};
use crate::snf;
use crate::steenrod;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn() -> std::result::Result<String, String>;

/// `(id, title, check)` for every criterion.
pub fn criteria() -> Vec<(u32, &'static str, Check)> {
    vec![
        (1, "RP(2k) * RP(2l) is not pin^c, residue a1 a2", even_projective_products as Check),
        (2, "M(k) * M(k) is pin^c without pin structures, free low homology", mk_squares),
        (3, "RP(2) * RP(2) * S(1) is Lipschitz but not pin^c", lipschitz_five_manifold),
        (4, "RP(2k) * RP(2l) * (3-manifold) is Lipschitz but not pin^c", lipschitz_family),
        (5, "factor criterion agrees with the product class for pin^c", factor_criterion_agreement),
        (6, "Wu's formula reproduces Stiefel–Whitney classes", wu_cross_check),
        (7, "implications between structures hold on the corpus", implication_lattice),
        (8, "group functors and subspace membership match brute-force oracles", oracle_equivalence),
    ]
}

pub fn run(id: u32) -> Option<CriterionOutcome> {
    criteria().into_iter().find(|c| c.0 == id).map(|(id, title, check)| outcome(id, title, check))
}

pub fn run_all() -> Vec<CriterionOutcome> {
    criteria()
        .into_iter()
        .map(|(id, title, check)| outcome(id, title, check))
        .collect()
}

fn outcome(id: u32, title: &'static str, check: Check) -> CriterionOutcome {
    let (passed, detail) = match check() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionOutcome {
        id,
        title,
        passed,
        detail,
    }
}

/// Turns a library error into a criterion failure.
fn ok<T>(r: Result<T>, context: &str) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{context}: {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report(text: &str) -> std::result::Result<decide::DecisionReport, String> {
    let e = ok(parse(text), text)?;
    ok(e.report(&LipschitzSearch::default()), text)
}

fn even_projective_products() -> std::result::Result<String, String> {
    let mut n = 0;
    for k in 1..=3 {
        for l in 1..=3 {
            let text = format!("RP({}) * RP({})", 2 * k, 2 * l);
            let r = report(&text)?;
            ensure(!r.pin_c.holds, || format!("{text}: reported pin^c"))?;
            let PinCDecision::Obstructed { residue } = &r.pin_c_decision else {
                return Err(format!("{text}: no obstruction residue"));
            };
            let ring = r.manifold.ring();
            let a1a2 = ok(ring.parse_class(2, "a1 a2"), &text)?;
            ensure(residue == &a1a2, || {
                format!("{text}: residue {} instead of a1 a2", ring.format_class(residue))
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} products, all obstructed by a1 a2"))
}

fn mk_squares() -> std::result::Result<String, String> {
    for k in 5..=7 {
        let text = format!("M({k}) * M({k})");
        let r = report(&text)?;
        ensure(r.pin_c.holds, || format!("{text}: not pin^c"))?;
        ensure(!r.pin_plus.holds && !r.pin_minus.holds, || {
            format!("{text}: a pin structure was reported for a product of non-orientable factors")
        })?;
        let m = ok(catalog::mk(k), &text)?;
        ensure(!m.orientable(), || format!("M({k}) reported orientable"))?;
        let h = m.homology();
        for n in 0..=2 {
            let g = ok(product_homology(h, h, n), &text)?;
            ensure(g.is_free(), || format!("{text}: H_{n} = {g} is not free"))?;
            ensure(r.manifold.homology()[n] == g, || format!("{text}: stored H_{n} differs"))?;
        }
    }
    Ok("k = 5, 6, 7: pin^c, neither pin+ nor pin-, H_0..H_2 free".into())
}

/// Checks a Lipschitz witness: `w₂(TN) + w₂(E)` must be the stored lifted class
/// and lie in `L²`.
fn check_witness(r: &decide::DecisionReport, text: &str) -> std::result::Result<String, String> {
    let LipschitzVerdict::YesWithWitness(w) = &r.lipschitz else {
        return Err(format!("{text}: Lipschitz status {}", r.lipschitz.status()));
    };
    let m = &r.manifold;
    let sum = ok(m.w2().add(&w.bundle.w2), text)?;
    ensure(sum == w.lifted_class, || format!("{text}: witness class mismatch"))?;
    ensure(ok(m.lift_l2().contains(&sum), text)?, || {
        format!("{text}: w2 + w2(E) is not in L2")
    })?;
    Ok(w.bundle.description.clone())
}

fn lipschitz_five_manifold() -> std::result::Result<String, String> {
    let text = "RP(2) * RP(2) * S(1)";
    let r = report(text)?;
    ensure(!r.pin_c.holds, || format!("{text}: reported pin^c"))?;
    let bundle = check_witness(&r, text)?;
    let m = &r.manifold;
    let w = r.lipschitz.witness().expect("checked above");
    let w1_sq = ok(m.ring().cup(m.w1(), m.w1()), text)?;
    let sum = ok(m.w2().add(&w.bundle.w2), text)?;
    ensure(sum == w1_sq, || {
        format!(
            "{text}: w2 + w2(E) = {} but w1^2 = {}",
            m.ring().format_class(&sum),
            m.ring().format_class(&w1_sq)
        )
    })?;
    ensure(bundle == "l(a1) ⊕ l(a2)", || format!("{text}: witness {bundle}"))?;
    Ok(format!("E = {bundle}, w2(TN) + w2(E) = w1(TN)^2"))
}

fn lipschitz_family() -> std::result::Result<String, String> {
    let mut n = 0;
    for k in [1, 3] {
        for l in [1, 3] {
            for tail in ["S(3)", "T(3)", "S(1) * S(1) * S(1)"] {
                let text = format!("RP({}) * RP({}) * {tail}", 2 * k, 2 * l);
                let r = report(&text)?;
                ensure(!r.pin_c.holds, || format!("{text}: reported pin^c"))?;
                check_witness(&r, &text)?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} manifolds, each with a verified rank-2 witness"))
}

/// The primitives the product suites range over.
pub fn primitive_corpus() -> Vec<ManifoldExpr> {
    use ManifoldExpr::*;
    let mut v: Vec<ManifoldExpr> = (1..=4).map(Sphere).collect();
    v.extend((2..=5).map(Rp));
    v.extend([Torus(2), Torus(3), Mk(5), Mk(6)]);
    v
}

/// Ordered pairs of primitives, plus pairs with a product of two primitives on
/// either side, up to total dimension 10.
pub fn product_corpus() -> Vec<(ManifoldExpr, ManifoldExpr)> {
    let prims = primitive_corpus();
    let mut pairs = Vec::new();
    for a in &prims {
        for b in &prims {
            pairs.push((a.clone(), b.clone()));
        }
    }
    let mut nested = Vec::new();
    for (a, b) in &pairs {
        let ab = ManifoldExpr::product(a.clone(), b.clone());
        for c in &prims {
            if ab.dimension() + c.dimension() <= 10 {
                nested.push((ab.clone(), c.clone()));
                nested.push((c.clone(), ab.clone()));
            }
        }
    }
    pairs.extend(nested);
    pairs
}

fn build_all(exprs: &[ManifoldExpr]) -> std::result::Result<Vec<ManifoldDescriptor>, String> {
    exprs.iter().map(|e| ok(e.build(), &e.to_string())).collect()
}

fn factor_criterion_agreement() -> std::result::Result<String, String> {
    let corpus = product_corpus();
    let mut yes = 0;
    for (a, b) in &corpus {
        let (x, y) = (ok(a.build(), &a.to_string())?, ok(b.build(), &b.to_string())?);
        let name = format!("{a} * ({b})");
        let fast = ok(decide::product_pin_c_fast_path(&x, &y), &name)?;
        let p = ok(catalog::product(&x, &y), &name)?;
        let general = ok(decide::decide_pin_c(&p), &name)?.holds();
        ensure(fast.holds == general, || {
            format!("{name}: factor criterion {} ({}), product class {general}", fast.holds, fast.case.describe())
        })?;
        yes += usize::from(general);
    }
    Ok(format!("{} pairs agree ({yes} pin^c, {} not)", corpus.len(), corpus.len() - yes))
}

/// Complete catalog manifolds and products of dimension at most `max_dim`.
pub fn complete_corpus(max_dim: u64) -> Vec<ManifoldExpr> {
    use ManifoldExpr::*;
    let mut prims: Vec<ManifoldExpr> = Vec::new();
    for n in 1..=max_dim {
        prims.extend([Sphere(n), Rp(n), Torus(n)]);
    }
    #[cfg(feature = "klein")]
    if max_dim >= 2 {
        prims.push(Klein);
    }
    let mut all = prims.clone();
    let mut frontier = prims.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in &prims {
                if a.dimension() + b.dimension() <= max_dim {
                    next.push(ManifoldExpr::product(a.clone(), b.clone()));
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

fn wu_cross_check() -> std::result::Result<String, String> {
    let corpus = complete_corpus(5);
    let mut three = 0;
    for e in &corpus {
        let name = e.to_string();
        let m = ok(e.build(), &name)?;
        let data = ok(steenrod::verify_wu(&m), &name)?;
        ensure(data.wu_classes[0] == m.ring().one(), || format!("{name}: v0 ≠ 1"))?;
        for (i, v) in data.wu_classes.iter().enumerate() {
            ensure(2 * i <= m.dim() || v.is_zero(), || format!("{name}: v{i} ≠ 0 above half the dimension"))?;
        }
        if m.dim() == 3 {
            ensure(ok(decide::decide_pin_minus(&m), &name)?, || format!("{name}: w2 + w1^2 ≠ 0"))?;
            three += 1;
        }
    }
    Ok(format!(
        "{} complete manifolds of dimension ≤ 5 ({three} of dimension 3, all pin-)",
        corpus.len()
    ))
}

/// Checks the implications on one descriptor.
pub fn check_implications(m: &ManifoldDescriptor) -> std::result::Result<(), String> {
    let name = m.name();
    let spin = decide::decide_spin(m);
    let plus = decide::decide_pin_plus(m);
    let minus = ok(decide::decide_pin_minus(m), name)?;
    let pin_c = ok(decide::decide_pin_c(m), name)?.holds();
    ensure(!spin || (plus && minus && m.orientable()), || format!("{name}: spin without pin±"))?;
    ensure(!plus || pin_c, || format!("{name}: pin+ without pin^c"))?;
    ensure(!minus || pin_c, || format!("{name}: pin- without pin^c"))?;
    let w1_sq = ok(m.ring().cup(m.w1(), m.w1()), name)?;
    ensure(ok(m.lift_l2().contains(&w1_sq), name)?, || format!("{name}: w1^2 not in L2"))?;
    if m.dim() % 2 == 1 && pin_c {
        let v = ok(decide::decide_lipschitz(m, &LipschitzSearch::default()), name)?;
        ensure(v.witness().is_some(), || format!("{name}: odd-dimensional pin^c without a Lipschitz witness"))?;
    }
    Ok(())
}

fn implication_lattice() -> std::result::Result<String, String> {
    let prims = build_all(&primitive_corpus())?;
    for m in &prims {
        check_implications(m)?;
    }
    let corpus = product_corpus();
    for (a, b) in &corpus {
        let (x, y) = (ok(a.build(), &a.to_string())?, ok(b.build(), &b.to_string())?);
        let p = ok(catalog::product(&x, &y), &format!("{a} * ({b})"))?;
        check_implications(&p)?;
    }
    Ok(format!("{} descriptors", prims.len() + corpus.len()))
}

fn random_group(rng: &mut ChaCha8Rng) -> FgAbelianGroup {
    let free = rng.gen_range(0..=3);
    let count = rng.gen_range(0..=3);
    let orders: Vec<u64> = (0..count).map(|_| rng.gen_range(2..=16)).collect();
    FgAbelianGroup::new(free, orders).expect("orders ≥ 2")
}

/// Seed for the randomized oracle comparisons.
pub const ORACLE_SEED: u64 = 0x5eed_c0ff_ee00;

fn oracle_equivalence() -> std::result::Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    let groups = 256;
    let rings = [
        CoefficientRing::Integers,
        CoefficientRing::Z2,
        CoefficientRing::Modular(4),
        CoefficientRing::Modular(6),
        CoefficientRing::Modular(9),
    ];
    for _ in 0..groups {
        let (a, b) = (random_group(&mut rng), random_group(&mut rng));
        let cmp = |what: &str, got: FgAbelianGroup, want: FgAbelianGroup| {
            ensure(got == want, || format!("{what}: rule gives {got}, Smith normal form gives {want}"))
        };
        cmp(&format!("{a} ⊗ {b}"), a.tensor(&b), snf::tensor_oracle(&a, &b))?;
        cmp(&format!("Tor({a}, {b})"), a.tor(&b), snf::tor_oracle(&a, &b))?;
        for r in rings {
            cmp(&format!("Hom({a}, {r:?})"), a.hom_to(r), snf::hom_oracle(&a, r))?;
            cmp(&format!("Ext({a}, {r:?})"), a.ext_to(r), snf::ext_oracle(&a, r))?;
        }
    }
    let spaces = 300;
    for _ in 0..spaces {
        let n = rng.gen_range(1..=12usize);
        let k = rng.gen_range(0..=n + 1);
        let gens: Vec<u64> = (0..k).map(|_| rng.gen_range(0..1u64 << n)).collect();
        let mut span = HashSet::from([0u64]);
        for g in &gens {
            let shifted: Vec<u64> = span.iter().map(|x| x ^ g).collect();
            span.extend(shifted);
        }
        let classes: Vec<Z2Class> = gens.iter().map(|&g| Z2Class::new(2, Gf2Vec::from_mask(n, g))).collect();
        let s = ok(Z2Subspace::span(2, n, &classes), "span")?;
        ensure(1usize << s.dim() == span.len(), || format!("dimension {} for {} elements", s.dim(), span.len()))?;
        for x in 0..1u64 << n {
            let c = Z2Class::new(2, Gf2Vec::from_mask(n, x));
            let inside = ok(s.contains(&c), "contains")?;
            ensure(inside == span.contains(&x), || format!("membership of {x:#b} in a span of {gens:?}"))?;
            let residue_zero = ok(s.residue(&c), "residue")?.is_zero();
            ensure(residue_zero == inside, || format!("residue of {x:#b} disagrees with membership"))?;
        }
    }
    Ok(format!(
        "{groups} group pairs × (⊗, Tor, 5 Hom, 5 Ext); {spaces} subspaces of dimension ≤ 12 checked exhaustively"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes() {
        assert_eq!(primitive_corpus().len(), 12);
        assert!(product_corpus().len() > 144);
        assert!(product_corpus().iter().all(|(a, b)| a.dimension() + b.dimension() <= 12));
    }
}
