//! Human-readable catalog documents, one TOML file per primitive.
//!
//! A document lists the ring (generators, monomial basis, nonzero products of
//! positive-degree basis pairs, Steenrod squares of generators) and the
//! manifold data (Stiefel–Whitney classes, integral homology, lift subspaces,
//! provenance). Classes are written as sums of basis labels, e.g. `"a1^2 + a1 a2"`.
//! Loading rebuilds the ring and runs the same validation as the built-in
//! constructors, so a document that loads is as trustworthy as built-in data.
//!
//! ```toml
//! format_version = 1
//! name = "RP(2)"
//! dimension = 2
//! complete_through = 2
//! vanishes_above = true
//! orientable = false
//! basis = [["1"], ["a"], ["a^2"]]
//! stiefel_whitney = ["1", "a", "a^2"]
//! homology = ["Z", "0", "0"]
//! lift_l1 = []
//! lift_l2 = ["a^2"]
//! provenance = ["..."]
//!
//! [[generators]]
//! name = "a"
//! degree = 1
//! nilpotence = 3
//!
//! [[products]]
//! left = "a"
//! right = "a"
//! value = "a^2"
//!
//! [[squares]]
//! generator = "a"
//! values = ["a", "a^2"]
//! ```

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::abelian::FgAbelianGroup;
use crate::catalog::ManifoldDescriptor;
use crate::error::{Error, Result};
use crate::gf2::Gf2Vec;
use crate::ring::{Generator, Monomial, RingPresentation, Structure, TableSpec, Z2Class, Z2Subspace};

pub const FORMAT_VERSION: u32 = 1;

/// Marks a square whose target degree is past a truncated ring's known range.
pub const UNKNOWN: &str = "unknown";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDocument {
    pub format_version: u32,
    pub name: String,
    pub dimension: usize,
    pub complete_through: usize,
    /// Every degree past `complete_through` is zero (as opposed to unknown).
    pub vanishes_above: bool,
    pub orientable: bool,
    pub basis: Vec<Vec<String>>,
    pub stiefel_whitney: Vec<String>,
    pub homology: Vec<String>,
    pub lift_l1: Vec<String>,
    pub lift_l2: Vec<String>,
    pub provenance: Vec<String>,
    pub generators: Vec<DocGenerator>,
    #[serde(default)]
    pub products: Vec<DocProduct>,
    pub squares: Vec<DocSquares>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocGenerator {
    pub name: String,
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilpotence: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocProduct {
    pub left: String,
    pub right: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocSquares {
    pub generator: String,
    /// `Sq^0 … Sq^deg` of the generator.
    pub values: Vec<String>,
}

impl CatalogDocument {
    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }
}

/// Writes a primitive descriptor as a document.
pub fn export(m: &ManifoldDescriptor) -> Result<CatalogDocument> {
    let ring = m.ring();
    let Structure::Table(_) = &ring.structure else {
        return Err(Error::Misuse(format!(
            "{} is a product; documents describe primitives only",
            m.name()
        )));
    };
    let ct = ring.complete_through();
    let f = |c: &Z2Class| ring.format_class(c);
    let mut products = Vec::new();
    for p in 1..=ct {
        for q in p..=ct - p {
            for i in 0..ring.dim(p)? {
                for j in 0..ring.dim(q)? {
                    if p == q && j < i {
                        continue;
                    }
                    let v = ring.mul_basis(p, i, q, j)?;
                    if !v.is_zero() {
                        products.push(DocProduct {
                            left: ring.basis_label(p, i),
                            right: ring.basis_label(q, j),
                            value: f(&Z2Class::new(p + q, v)),
                        });
                    }
                }
            }
        }
    }
    let squares = ring
        .generators()
        .iter()
        .enumerate()
        .map(|(k, g)| DocSquares {
            generator: ring.generator_name(k),
            values: ring.sq_generators[k]
                .iter()
                .enumerate()
                .map(|(j, v)| match v {
                    Some(v) => f(&Z2Class::new(g.degree + j, v.clone())),
                    None => UNKNOWN.into(),
                })
                .collect(),
        })
        .collect();
    Ok(CatalogDocument {
        format_version: FORMAT_VERSION,
        name: m.name().into(),
        dimension: m.dim(),
        complete_through: ct,
        vanishes_above: ring.is_full(),
        orientable: m.orientable(),
        basis: (0..=ct)
            .map(|n| Ok((0..ring.dim(n)?).map(|i| ring.basis_label(n, i)).collect()))
            .collect::<Result<_>>()?,
        stiefel_whitney: m.sw_total().iter().map(f).collect(),
        homology: m.homology().iter().map(ToString::to_string).collect(),
        lift_l1: m.lift_l1().basis().iter().map(f).collect(),
        lift_l2: m.lift_l2().basis().iter().map(f).collect(),
        provenance: m.provenance().to_vec(),
        generators: ring
            .generators()
            .iter()
            .enumerate()
            .map(|(k, g)| DocGenerator {
                name: ring.generator_name(k),
                degree: g.degree,
                nilpotence: g.nilpotence,
            })
            .collect(),
        products,
        squares,
    })
}

fn doc_err<T>(msg: String) -> Result<T> {
    Err(Error::Document(msg))
}

fn parse_monomial(label: &str, names: &HashMap<&str, usize>, count: usize) -> Result<Monomial> {
    let mut m = Monomial::one(count);
    if label.trim() == "1" {
        return Ok(m);
    }
    for factor in label.split_whitespace() {
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => match e.parse::<u32>() {
                Ok(e) if e >= 1 => (n, e),
                _ => return doc_err(format!("bad exponent in {factor:?}")),
            },
            None => (factor, 1),
        };
        let Some(&k) = names.get(name) else {
            return doc_err(format!("unknown generator {name:?} in {label:?}"));
        };
        m.0[k] += exp;
    }
    Ok(m)
}

/// `(degree, index)` of every basis label.
type LabelIndex = HashMap<String, (usize, usize)>;

fn class_coords(text: &str, labels: &LabelIndex, basis: &[Vec<String>], degree: usize) -> Result<Gf2Vec> {
    let width = basis.get(degree).map_or(0, Vec::len);
    let mut v = Gf2Vec::zeros(width);
    if text.trim() == "0" {
        return Ok(v);
    }
    for term in text.split('+') {
        let norm = term.split_whitespace().collect::<Vec<_>>().join(" ");
        match labels.get(&norm) {
            Some(&(d, i)) if d == degree => v.flip(i),
            Some(&(d, _)) => return doc_err(format!("{norm:?} has degree {d}, expected {degree}")),
            None => return doc_err(format!("{norm:?} is not a basis label")),
        }
    }
    Ok(v)
}

/// Rebuilds and validates a descriptor from a document.
pub fn load(doc: &CatalogDocument) -> Result<ManifoldDescriptor> {
    if doc.format_version != FORMAT_VERSION {
        return doc_err(format!(
            "format_version {} is not supported (expected {FORMAT_VERSION})",
            doc.format_version
        ));
    }
    let ct = doc.complete_through;
    let names: HashMap<&str, usize> = doc.generators.iter().enumerate().map(|(k, g)| (g.name.as_str(), k)).collect();
    if names.len() != doc.generators.len() {
        return doc_err("generator names must be distinct".into());
    }
    let generators: Vec<Generator> = doc
        .generators
        .iter()
        .map(|g| {
            if g.degree == 0 || g.nilpotence.is_some_and(|e| e < 2) {
                return doc_err(format!("generator {} needs degree ≥ 1 and nilpotence ≥ 2", g.name));
            }
            Ok(Generator::new(g.name.clone(), g.degree, g.nilpotence))
        })
        .collect::<Result<_>>()?;
    let basis: Vec<Vec<Monomial>> = doc
        .basis
        .iter()
        .map(|b| b.iter().map(|l| parse_monomial(l, &names, generators.len())).collect())
        .collect::<Result<_>>()?;
    let mut labels = LabelIndex::new();
    for (n, b) in doc.basis.iter().enumerate() {
        for (i, l) in b.iter().enumerate() {
            let norm = l.split_whitespace().collect::<Vec<_>>().join(" ");
            if labels.insert(norm, (n, i)).is_some() {
                return doc_err(format!("basis label {l:?} appears twice"));
            }
        }
    }
    let mut products = HashMap::new();
    for (n, b) in basis.iter().enumerate() {
        for i in 0..b.len() {
            products.insert((0, 0, n, i), Gf2Vec::unit(b.len(), i));
        }
    }
    for p in &doc.products {
        let lookup = |l: &str| {
            let norm = l.split_whitespace().collect::<Vec<_>>().join(" ");
            labels
                .get(&norm)
                .copied()
                .ok_or_else(|| Error::Document(format!("{l:?} is not a basis label")))
        };
        let (a, b) = (lookup(&p.left)?, lookup(&p.right)?);
        if a.0 == 0 || b.0 == 0 {
            return doc_err("products with 1 are implied and must not be listed".into());
        }
        let key = if a <= b { (a.0, a.1, b.0, b.1) } else { (b.0, b.1, a.0, a.1) };
        let value = class_coords(&p.value, &labels, &doc.basis, a.0 + b.0)?;
        if products.insert(key, value).is_some() {
            return doc_err(format!("product {} · {} is listed twice", p.left, p.right));
        }
    }
    if doc.squares.len() != generators.len() {
        return doc_err("squares must be listed for every generator".into());
    }
    let mut sq_generators = vec![Vec::new(); generators.len()];
    for s in &doc.squares {
        let Some(&k) = names.get(s.generator.as_str()) else {
            return doc_err(format!("squares listed for unknown generator {:?}", s.generator));
        };
        sq_generators[k] = s
            .values
            .iter()
            .enumerate()
            .map(|(j, v)| {
                let target = generators[k].degree + j;
                if v == UNKNOWN {
                    Ok(None)
                } else if target > ct && !doc.vanishes_above {
                    doc_err(format!("Sq^{j}({}) lands past the known range; write {UNKNOWN:?}", s.generator))
                } else {
                    class_coords(v, &labels, &doc.basis, target).map(Some)
                }
            })
            .collect::<Result<_>>()?;
    }
    let ring = Arc::new(RingPresentation::from_table(TableSpec {
        generators,
        complete_through: ct,
        full: doc.vanishes_above,
        basis,
        products,
        sq_generators,
    })?);
    let class = |n: usize, t: &str| -> Result<Z2Class> {
        Ok(Z2Class::new(n, class_coords(t, &labels, &doc.basis, n)?))
    };
    let sw = doc
        .stiefel_whitney
        .iter()
        .enumerate()
        .map(|(k, t)| class(k, t))
        .collect::<Result<Vec<_>>>()?;
    let span = |n: usize, items: &[String]| -> Result<Z2Subspace> {
        let classes = items.iter().map(|t| class(n, t)).collect::<Result<Vec<_>>>()?;
        let s = Z2Subspace::span(n, ring.dim(n)?, &classes)?;
        if s.dim() != classes.len() {
            return doc_err(format!("the listed basis of L{n} is linearly dependent"));
        }
        Ok(s)
    };
    let homology = doc
        .homology
        .iter()
        .map(|h| h.parse::<FgAbelianGroup>())
        .collect::<Result<Vec<_>>>()?;
    let d = ManifoldDescriptor {
        name: doc.name.clone(),
        compound: false,
        dim: doc.dimension,
        lift_l1: span(1, &doc.lift_l1)?,
        lift_l2: span(2, &doc.lift_l2)?,
        ring,
        homology,
        orientable: doc.orientable,
        sw,
        provenance: doc.provenance.clone(),
    };
    d.validate()?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip_projective_plane() {
        let m = catalog::rp(2).unwrap();
        let doc = export(&m).unwrap();
        let text = doc.to_toml().unwrap();
        let back = CatalogDocument::from_toml(&text).unwrap();
        assert_eq!(back, doc);
        let loaded = load(&back).unwrap();
        assert_eq!(export(&loaded).unwrap(), doc);
    }

    #[test]
    fn products_are_refused() {
        let p = catalog::product(&catalog::rp(2).unwrap(), &catalog::rp(2).unwrap()).unwrap();
        assert!(matches!(export(&p), Err(Error::Misuse(_))));
    }

    #[test]
    fn tampered_documents_fail_validation() {
        let mut doc = export(&catalog::rp(2).unwrap()).unwrap();
        doc.stiefel_whitney[1] = "0".into();
        assert!(matches!(load(&doc), Err(Error::InvariantViolation(_))));

        let mut doc = export(&catalog::rp(3).unwrap()).unwrap();
        doc.products.retain(|p| p.value != "a^3");
        assert!(matches!(load(&doc), Err(Error::CorruptRingData(_))));

        let mut doc = export(&catalog::sphere(2).unwrap()).unwrap();
        doc.format_version = 2;
        assert!(matches!(load(&doc), Err(Error::Document(_))));
    }
}
