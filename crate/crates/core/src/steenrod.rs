//! Steenrod squares via the Cartan formula, Wu classes by Poincaré duality, and
//! the Wu reconstruction `w = Sq(v)` of the Stiefel–Whitney classes.

use crate::catalog::ManifoldDescriptor;
use crate::error::{Error, Result};
use crate::gf2::{solve_square, Gf2Vec};
use crate::ring::{RingPresentation, Structure, Z2Class};

/// `Sq^j(g)` for each ring generator `g` and `0 ≤ j ≤ deg g`. Entries are `None`
/// when the target degree is past the ring's truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqTable {
    pub entries: Vec<Vec<Option<Z2Class>>>,
}

/// Wu classes `v₀ … v_n` of a closed manifold and the total class `Sq(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WuData {
    pub wu_classes: Vec<Z2Class>,
    pub reconstructed_sw: Vec<Z2Class>,
}

fn sq_basis(ring: &RingPresentation, k: usize, n: usize, idx: usize) -> Result<Gf2Vec> {
    let target = n + k;
    let width = ring.dim(target)?;
    if k == 0 {
        return Ok(Gf2Vec::unit(width, idx));
    }
    if k > n || width == 0 {
        return Ok(Gf2Vec::zeros(width));
    }
    match &ring.structure {
        Structure::Table(_) => {
            let m = &ring.basis[n][idx];
            let (g, rest) = ring.split_first_generator(m)?;
            if rest.degree() == 0 {
                return ring.sq_generators[g][k].clone().ok_or_else(|| ring.truncation_error(target));
            }
            // Cartan: Sq^k(g · rest) = Σ Sq^j(g) · Sq^{k-j}(rest)
            let gdeg = ring.generators[g].degree;
            let mut out = Gf2Vec::zeros(width);
            for j in 0..=k.min(gdeg) {
                let sg = ring.sq_generators[g][j]
                    .clone()
                    .ok_or_else(|| ring.truncation_error(gdeg + j))?;
                let sg = Z2Class::new(gdeg + j, sg);
                if sg.is_zero() {
                    continue;
                }
                let sr = sq(ring, k - j, &rest)?;
                if sr.is_zero() {
                    continue;
                }
                out.xor_assign(ring.cup(&sg, &sr)?.coords());
            }
            Ok(out)
        }
        Structure::Tensor(parts) => {
            // Cartan for the cross product: Sq^k(l × r) = Σ Sq^j(l) × Sq^{k-j}(r)
            let (a, li, ri) = parts.origin(n, idx);
            let mut out = Gf2Vec::zeros(width);
            for j in 0..=k.min(a) {
                if k - j > n - a {
                    continue;
                }
                let sl = sq_basis(&parts.left, j, a, li)?;
                if sl.is_zero() {
                    continue;
                }
                let sr = sq_basis(&parts.right, k - j, n - a, ri)?;
                for x in sl.ones() {
                    for y in sr.ones() {
                        out.flip(parts.index(target, a + j, x, y));
                    }
                }
            }
            Ok(out)
        }
    }
}

/// `Sq^i(x)`.
pub fn sq(ring: &RingPresentation, i: usize, x: &Z2Class) -> Result<Z2Class> {
    ring.check_class(x)?;
    let target = x.degree() + i;
    let mut out = Gf2Vec::zeros(ring.dim(target)?);
    for idx in x.coords().ones() {
        out.xor_assign(&sq_basis(ring, i, x.degree(), idx)?);
    }
    Ok(Z2Class::new(target, out))
}

/// Total square `Sq(x) = Σᵢ Sqⁱ(x)` as classes in degrees `deg x ..= 2 deg x`.
pub fn total_sq(ring: &RingPresentation, x: &Z2Class) -> Result<Vec<Z2Class>> {
    (0..=x.degree()).map(|i| sq(ring, i, x)).collect()
}

/// The generator square table of a ring.
pub fn sq_table(ring: &RingPresentation) -> Result<SqTable> {
    let mut entries = Vec::new();
    for k in 0..ring.generators().len() {
        let g = ring.generator_class(k)?;
        let row = (0..=g.degree())
            .map(|j| match sq(ring, j, &g) {
                Ok(c) => Ok(Some(c)),
                Err(Error::UnsupportedDegree { .. }) => Ok(None),
                Err(e) => Err(e),
            })
            .collect::<Result<Vec<_>>>()?;
        entries.push(row);
    }
    Ok(SqTable { entries })
}

fn require_complete(m: &ManifoldDescriptor) -> Result<usize> {
    let ring = m.ring();
    if m.top_class().is_none() || !ring.is_full() || ring.complete_through() != m.dim() {
        return Err(Error::UnsupportedDegree {
            needed: m.dim(),
            available: ring.complete_through(),
            context: format!("{} (Wu classes need the full ring through the top degree)", m.name()),
        });
    }
    Ok(m.dim())
}

/// Solves `⟨vᵢ ∪ w, [M]⟩ = ⟨Sqⁱ(w), [M]⟩` for every `w ∈ H^{n-i}` and reconstructs
/// `w = Sq(v)`.
pub fn wu_classes(m: &ManifoldDescriptor) -> Result<WuData> {
    let n = require_complete(m)?;
    let ring = m.ring();
    let mut wu = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let di = ring.dim(i)?;
        if 2 * i > n {
            // Sqⁱ vanishes on H^{n-i} when i > n - i
            wu.push(ring.zero(i)?);
            continue;
        }
        let dual = n - i;
        let dd = ring.dim(dual)?;
        if di != dd {
            return Err(Error::CorruptRingData(format!(
                "{}: dim H^{i} = {di} but dim H^{dual} = {dd}; Poincaré duality fails",
                m.name()
            )));
        }
        let mut rows = Vec::with_capacity(dd);
        let mut rhs = Gf2Vec::zeros(dd);
        for k in 0..dd {
            let w = ring.basis_element(dual, k)?;
            let row = (0..di)
                .map(|l| Ok(ring.evaluate(&ring.cup(&ring.basis_element(i, l)?, &w)?, n)))
                .collect::<Result<Vec<bool>>>()?;
            rows.push(Gf2Vec::from_bits(row));
            rhs.set(k, ring.evaluate(&sq(ring, i, &w)?, n));
        }
        let v = solve_square(&rows, &rhs).ok_or_else(|| {
            Error::CorruptRingData(format!(
                "{}: the cup pairing H^{i} × H^{dual} → Z/2 is singular",
                m.name()
            ))
        })?;
        wu.push(Z2Class::new(i, v));
    }
    let mut reconstructed = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut w = ring.zero(k)?;
        for j in 0..=k {
            let i = k - j;
            if i > j {
                continue;
            }
            w = w.add(&sq(ring, i, &wu[j])?)?;
        }
        reconstructed.push(w);
    }
    Ok(WuData {
        wu_classes: wu,
        reconstructed_sw: reconstructed,
    })
}

/// Stiefel–Whitney classes `w₀ … w_n` from Wu's formula.
pub fn sw_from_wu(m: &ManifoldDescriptor) -> Result<Vec<Z2Class>> {
    Ok(wu_classes(m)?.reconstructed_sw)
}

/// Checks Wu's formula against the descriptor's Whitney-derived classes, degree by degree.
pub fn verify_wu(m: &ManifoldDescriptor) -> Result<WuData> {
    let data = wu_classes(m)?;
    for (k, w) in data.reconstructed_sw.iter().enumerate() {
        let stored = m.sw(k)?;
        if &stored != w {
            return Err(Error::InvariantViolation(format!(
                "{}: Wu's formula gives w{k} = {} but the Whitney product gives {}",
                m.name(),
                m.ring().format_class(w),
                m.ring().format_class(&stored)
            )));
        }
    }
    Ok(data)
}
