//! Existence of orientations, spin, pin±, pin^c and Lipschitz structures.
//!
//! | structure   | exists iff                                  |
//! |-------------|---------------------------------------------|
//! | orientation | `w₁ = 0`                                    |
//! | spin        | `w₁ = 0` and `w₂ = 0`                       |
//! | pin⁺        | `w₂ = 0`                                    |
//! | pin⁻        | `w₂ + w₁² = 0`                              |
//! | pin^c       | `w₂ ∈ L²` (it is the reduction of an integral class) |
//! | Lipschitz   | odd dimension and some rank-2 `E` with `w₂ + w₂(E) ∈ L²` |
//!
//! For a product `M₁ × M₂` there is also a direct criterion in terms of the
//! factors: the product is pin^c iff both factors are pin^c and either one of them
//! is orientable or both `w₁(M₁)` and `w₁(M₂)` have integral lifts. Reports for
//! products compute both routes and refuse to answer if they disagree.

use rayon::prelude::*;

use crate::catalog::{self, BundleDescriptor, ManifoldDescriptor};
use crate::error::{Error, Result};
use crate::gf2::Gf2Vec;
use crate::ring::{Membership, RingPresentation, Z2Class};

pub fn decide_orientable(m: &ManifoldDescriptor) -> bool {
    m.w1().is_zero()
}

pub fn decide_spin(m: &ManifoldDescriptor) -> bool {
    m.w1().is_zero() && m.w2().is_zero()
}

pub fn decide_pin_plus(m: &ManifoldDescriptor) -> bool {
    m.w2().is_zero()
}

/// `w₂ + w₁²`.
pub fn pin_minus_obstruction(m: &ManifoldDescriptor) -> Result<Z2Class> {
    m.w2().add(&m.ring().cup(m.w1(), m.w1())?)
}

pub fn decide_pin_minus(m: &ManifoldDescriptor) -> Result<bool> {
    Ok(pin_minus_obstruction(m)?.is_zero())
}

/// Outcome of the pin^c test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PinCDecision {
    /// `w₂` lies in `L²`; the certificate lists the `L²` basis rows summing to it.
    Lifts { certificate: Membership },
    /// `w₂` is not a reduction; `residue` is its canonical class modulo `L²`.
    Obstructed { residue: Z2Class },
}

impl PinCDecision {
    pub fn holds(&self) -> bool {
        matches!(self, PinCDecision::Lifts { .. })
    }
}

pub fn decide_pin_c(m: &ManifoldDescriptor) -> Result<PinCDecision> {
    let l2 = m.lift_l2();
    Ok(match l2.certificate(m.w2())? {
        Some(certificate) => PinCDecision::Lifts { certificate },
        None => PinCDecision::Obstructed {
            residue: l2.residue(m.w2())?,
        },
    })
}

/// Which clause of the product criterion decided the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FastPathCase {
    /// A factor is not pin^c (flags name which).
    FactorNotPinC { first: bool, second: bool },
    /// Both pin^c and a factor is orientable.
    OrientableFactor { first: bool, second: bool },
    /// Both pin^c, both non-orientable, and both `w₁` lift to integral classes.
    IntegralFirstClasses,
    /// Both pin^c and non-orientable, but some `w₁` has no integral lift.
    FirstClassWithoutLift { first: bool, second: bool },
}

impl FastPathCase {
    pub fn describe(&self) -> String {
        let which = |first: bool, second: bool| match (first, second) {
            (true, true) => "both factors",
            (true, false) => "the first factor",
            (false, true) => "the second factor",
            (false, false) => "neither factor",
        };
        match *self {
            FastPathCase::FactorNotPinC { first, second } => format!("{} not pin^c", which(first, second)),
            FastPathCase::OrientableFactor { first, second } => {
                format!("both factors pin^c and {} orientable", which(first, second))
            }
            FastPathCase::IntegralFirstClasses => {
                "both factors pin^c and non-orientable, with w1 of each the reduction of an integral class".into()
            }
            FastPathCase::FirstClassWithoutLift { first, second } => format!(
                "both factors pin^c and non-orientable, but w1 of {} has no integral lift",
                which(first, second)
            ),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FastPath {
    pub holds: bool,
    pub case: FastPathCase,
}

/// Pin^c on `M₁ × M₂` from data of the factors alone.
pub fn product_pin_c_fast_path(m1: &ManifoldDescriptor, m2: &ManifoldDescriptor) -> Result<FastPath> {
    let (p1, p2) = (decide_pin_c(m1)?.holds(), decide_pin_c(m2)?.holds());
    if !(p1 && p2) {
        return Ok(FastPath {
            holds: false,
            case: FastPathCase::FactorNotPinC { first: !p1, second: !p2 },
        });
    }
    let (o1, o2) = (m1.orientable(), m2.orientable());
    if o1 || o2 {
        return Ok(FastPath {
            holds: true,
            case: FastPathCase::OrientableFactor { first: o1, second: o2 },
        });
    }
    let (l1, l2) = (m1.lift_l1().contains(m1.w1())?, m2.lift_l1().contains(m2.w1())?);
    Ok(if l1 && l2 {
        FastPath {
            holds: true,
            case: FastPathCase::IntegralFirstClasses,
        }
    } else {
        FastPath {
            holds: false,
            case: FastPathCase::FirstClassWithoutLift { first: !l1, second: !l2 },
        }
    })
}

/// Bounds for the Lipschitz witness search.
#[derive(Clone, Copy, Debug)]
pub struct LipschitzSearch {
    /// Maximum number of `(α, β)` pairs, i.e. `4^{dim H¹}`.
    pub max_pairs: u128,
}

impl Default for LipschitzSearch {
    fn default() -> Self {
        Self { max_pairs: 1 << 26 }
    }
}

/// Families of rank-2 bundles the witness search covers.
pub const LIPSCHITZ_SEARCH_SCOPE: &str =
    "decomposable rank-2 bundles l(α) ⊕ l(β) for all α, β in H^1(M;Z/2), and orientable rank-2 bundles (whose w2 is integral)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LipschitzWitness {
    pub bundle: BundleDescriptor,
    pub alpha: Z2Class,
    pub beta: Z2Class,
    /// `w₂(TM) + w₂(E)` and the `L²` rows that sum to it.
    pub lifted_class: Z2Class,
    pub certificate: Membership,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LipschitzVerdict {
    YesWithWitness(Box<LipschitzWitness>),
    /// Nothing in the searched families works; this is not a proof of nonexistence.
    NoWitnessFound { search_scope: String },
    /// Lipschitz structures are defined for odd-dimensional manifolds only.
    NotApplicable { note: String },
}

impl LipschitzVerdict {
    pub fn status(&self) -> &'static str {
        match self {
            LipschitzVerdict::YesWithWitness(_) => "yes",
            LipschitzVerdict::NoWitnessFound { .. } => "no_witness_found",
            LipschitzVerdict::NotApplicable { .. } => "not_applicable",
        }
    }

    pub fn witness(&self) -> Option<&LipschitzWitness> {
        match self {
            LipschitzVerdict::YesWithWitness(w) => Some(w),
            _ => None,
        }
    }
}

fn line_or_trivial(ring: &RingPresentation, alpha: &Z2Class) -> Result<BundleDescriptor> {
    if alpha.is_zero() {
        catalog::trivial_bundle(ring, 1)
    } else {
        catalog::line_bundle(ring, alpha)
    }
}

/// Searches `E = l(α) ⊕ l(β)` in lexicographic order of `(α, β)`, where a class
/// is ordered by the integer whose bit `i` is its `i`-th basis coordinate.
/// `α = β = 0` (trivial `E`) comes first, so pin^c manifolds get the trivial witness.
pub fn decide_lipschitz(m: &ManifoldDescriptor, search: &LipschitzSearch) -> Result<LipschitzVerdict> {
    if m.dim().is_multiple_of(2) {
        return Ok(LipschitzVerdict::NotApplicable {
            note: format!(
                "{} has even dimension {}; Lipschitz structures are defined in odd dimensions, where pin^c is the relevant notion in even ones",
                m.name(),
                m.dim()
            ),
        });
    }
    let ring = m.ring();
    let h1 = ring.dim(1)?;
    let l2 = m.lift_l2();
    let w2 = m.w2();
    if let Some(certificate) = l2.certificate(w2)? {
        // (0, 0) is the first candidate in the search order
        return Ok(LipschitzVerdict::YesWithWitness(Box::new(LipschitzWitness {
            bundle: catalog::trivial_bundle(ring, 2)?,
            alpha: ring.zero(1)?,
            beta: ring.zero(1)?,
            lifted_class: w2.clone(),
            certificate,
        })));
    }
    let candidates = 1u128.checked_shl(2 * h1 as u32).unwrap_or(u128::MAX);
    if h1 > 31 || candidates > search.max_pairs {
        return Err(Error::SearchLimit {
            candidates,
            cap: search.max_pairs,
        });
    }
    let basis: Vec<Z2Class> = (0..h1).map(|i| ring.basis_element(1, i)).collect::<Result<_>>()?;
    let products: Vec<Vec<Gf2Vec>> = basis
        .iter()
        .map(|x| basis.iter().map(|y| ring.cup(x, y).map(|c| c.coords().clone())).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let width = ring.dim(2)?;
    let side = 1u64 << h1;

    let found = (0..side).into_par_iter().find_map_first(|alpha| {
        // rows[j] = α · b_j
        let rows: Vec<Gf2Vec> = (0..h1)
            .map(|j| {
                let mut r = Gf2Vec::zeros(width);
                for i in (0..h1).filter(|i| alpha >> i & 1 == 1) {
                    r.xor_assign(&products[i][j]);
                }
                r
            })
            .collect();
        (0..side).find_map(|beta| {
            let mut c = w2.coords().clone();
            for j in (0..h1).filter(|j| beta >> j & 1 == 1) {
                c.xor_assign(&rows[j]);
            }
            let c = Z2Class::new(2, c);
            l2.contains(&c).ok()?.then_some((alpha, beta, c))
        })
    });

    let Some((alpha, beta, lifted_class)) = found else {
        return Ok(LipschitzVerdict::NoWitnessFound {
            search_scope: LIPSCHITZ_SEARCH_SCOPE.into(),
        });
    };
    let alpha = Z2Class::new(1, Gf2Vec::from_mask(h1, alpha));
    let beta = Z2Class::new(1, Gf2Vec::from_mask(h1, beta));
    let bundle = if alpha.is_zero() && beta.is_zero() {
        catalog::trivial_bundle(ring, 2)?
    } else {
        catalog::whitney_sum(ring, &line_or_trivial(ring, &alpha)?, &line_or_trivial(ring, &beta)?)?
    };
    let certificate = l2
        .certificate(&lifted_class)?
        .ok_or_else(|| Error::InvariantViolation("Lipschitz witness failed its own membership check".into()))?;
    Ok(LipschitzVerdict::YesWithWitness(Box::new(LipschitzWitness {
        bundle,
        alpha,
        beta,
        lifted_class,
        certificate,
    })))
}

/// A boolean verdict together with the class it was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub obstruction: String,
}

#[derive(Clone, Debug)]
pub struct DecisionReport {
    /// The assembled descriptor the verdicts were read from.
    pub manifold: ManifoldDescriptor,
    pub expression: String,
    pub dimension: usize,
    pub orientable: Verdict,
    pub spin: Verdict,
    pub pin_plus: Verdict,
    pub pin_minus: Verdict,
    pub pin_c: Verdict,
    pub pin_c_decision: PinCDecision,
    pub lipschitz: LipschitzVerdict,
    pub fast_path: Option<FastPath>,
    pub trace: Vec<String>,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Runs every decider on one descriptor.
pub fn full_report(m: &ManifoldDescriptor) -> Result<DecisionReport> {
    full_report_with(m, &LipschitzSearch::default())
}

pub fn full_report_with(m: &ManifoldDescriptor, search: &LipschitzSearch) -> Result<DecisionReport> {
    let ring = m.ring();
    let f = |c: &Z2Class| ring.format_class(c);
    let mut trace = Vec::new();
    let (w1, w2) = (m.w1(), m.w2());
    let w1_sq = ring.cup(w1, w1)?;
    let pm = pin_minus_obstruction(m)?;
    trace.push(format!("w1 = {}, w2 = {}, w1^2 = {}", f(w1), f(w2), f(&w1_sq)));
    trace.push(format!(
        "L1 = span{{{}}}, L2 = span{{{}}}",
        m.lift_l1().basis().iter().map(f).collect::<Vec<_>>().join(", "),
        m.lift_l2().basis().iter().map(f).collect::<Vec<_>>().join(", ")
    ));

    let orientable = Verdict {
        holds: decide_orientable(m),
        obstruction: format!("w1 = {}", f(w1)),
    };
    let spin = Verdict {
        holds: decide_spin(m),
        obstruction: format!("w1 = {}, w2 = {}", f(w1), f(w2)),
    };
    let pin_plus = Verdict {
        holds: decide_pin_plus(m),
        obstruction: format!("w2 = {}", f(w2)),
    };
    let pin_minus = Verdict {
        holds: pm.is_zero(),
        obstruction: format!("w2 + w1^2 = {}", f(&pm)),
    };
    trace.push(format!("orientable: {} (w1 {})", yes_no(orientable.holds), if orientable.holds { "= 0" } else { "≠ 0" }));
    trace.push(format!("spin: {}", yes_no(spin.holds)));
    trace.push(format!("pin+: {} (w2 = {})", yes_no(pin_plus.holds), f(w2)));
    trace.push(format!("pin-: {} (w2 + w1^2 = {})", yes_no(pin_minus.holds), f(&pm)));

    let pin_c_decision = decide_pin_c(m)?;
    let pin_c = match &pin_c_decision {
        PinCDecision::Lifts { certificate } => {
            let rows = m.lift_l2().basis();
            let used: Vec<String> = certificate.rows.iter().map(|&k| f(&rows[k])).collect();
            let note = if used.is_empty() {
                "w2 = 0".to_string()
            } else {
                format!("w2 = {} in L2", used.join(" + "))
            };
            trace.push(format!("pin^c: yes ({note})"));
            Verdict {
                holds: true,
                obstruction: note,
            }
        }
        PinCDecision::Obstructed { residue } => {
            trace.push(format!("pin^c: no (w2 ≡ {} modulo L2, not an integral reduction)", f(residue)));
            Verdict {
                holds: false,
                obstruction: format!("w2 ≡ {} mod L2", f(residue)),
            }
        }
    };

    let lipschitz = decide_lipschitz(m, search)?;
    match &lipschitz {
        LipschitzVerdict::YesWithWitness(w) => trace.push(format!(
            "Lipschitz: yes, E = {} with w2(TM) + w2(E) = {} in L2",
            w.bundle.description,
            f(&w.lifted_class)
        )),
        LipschitzVerdict::NoWitnessFound { search_scope } => {
            trace.push(format!("Lipschitz: no witness found among {search_scope}"))
        }
        LipschitzVerdict::NotApplicable { note } => trace.push(format!("Lipschitz: not applicable ({note})")),
    }

    Ok(DecisionReport {
        manifold: m.clone(),
        expression: m.name().to_string(),
        dimension: m.dim(),
        orientable,
        spin,
        pin_plus,
        pin_minus,
        pin_c,
        pin_c_decision,
        lipschitz,
        fast_path: None,
        trace,
    })
}

/// Report for `M₁ × M₂`, computing pin^c both from the assembled product and from
/// the factor criterion.
pub fn full_report_product(m1: &ManifoldDescriptor, m2: &ManifoldDescriptor) -> Result<DecisionReport> {
    full_report_product_with(m1, m2, &LipschitzSearch::default())
}

pub fn full_report_product_with(
    m1: &ManifoldDescriptor,
    m2: &ManifoldDescriptor,
    search: &LipschitzSearch,
) -> Result<DecisionReport> {
    let p = catalog::product(m1, m2)?;
    let mut report = full_report_with(&p, search)?;
    let fast = product_pin_c_fast_path(m1, m2)?;
    if fast.holds != report.pin_c.holds {
        return Err(Error::InvariantViolation(format!(
            "{}: factor criterion says pin^c = {} ({}) but the product class says {}",
            p.name(),
            fast.holds,
            fast.case.describe(),
            report.pin_c.holds
        )));
    }
    report.trace.push(format!(
        "factor criterion agrees: pin^c {} ({})",
        yes_no(fast.holds),
        fast.case.describe()
    ));
    report.fast_path = Some(fast);
    Ok(report)
}
