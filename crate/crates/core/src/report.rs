//! Serializable reports: the `decide`, `classes` and `wu` outputs.
//!
//! Field names are stable. New fields may be added; existing ones are never
//! renamed or removed without bumping [`SCHEMA_VERSION`].

use serde::{Deserialize, Serialize};

use crate::catalog::ManifoldDescriptor;
use crate::decide::{DecisionReport, LipschitzVerdict, PinCDecision};
use crate::error::Result;
use crate::steenrod;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub schema_version: u32,
    pub expression: String,
    pub dimension: usize,
    pub orientable: bool,
    pub spin: bool,
    pub pin_plus: bool,
    pub pin_minus: bool,
    pub pin_c: bool,
    pub lipschitz: JsonLipschitz,
    /// The class each verdict was read from, e.g. `"w2 + w1^2 = 0"`.
    pub obstructions: JsonObstructions,
    pub pin_c_witness: JsonPinC,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor_criterion: Option<JsonFactorCriterion>,
    pub trace: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonLipschitz {
    /// `yes`, `no_witness_found` or `not_applicable`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<JsonWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search_scope: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonWitness {
    pub bundle: String,
    pub alpha: String,
    pub beta: String,
    pub w2_bundle: String,
    /// `w2(TM) + w2(E)`, which lies in the lift subspace.
    pub lifted_class: String,
    /// `L2` basis elements summing to `lifted_class`.
    pub certificate: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonObstructions {
    pub orientable: String,
    pub spin: String,
    pub pin_plus: String,
    pub pin_minus: String,
    pub pin_c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonPinC {
    /// `L2` basis elements summing to `w2`, when it lifts.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<String>>,
    /// Canonical class of `w2` modulo `L2`, when it does not.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonFactorCriterion {
    pub pin_c: bool,
    pub case: String,
}

impl JsonReport {
    pub fn new(r: &DecisionReport) -> Self {
        let m = &r.manifold;
        let ring = m.ring();
        let f = |c| ring.format_class(c);
        let l2 = m.lift_l2().basis();
        let lipschitz = match &r.lipschitz {
            LipschitzVerdict::YesWithWitness(w) => JsonLipschitz {
                status: r.lipschitz.status().into(),
                witness: Some(JsonWitness {
                    bundle: w.bundle.description.clone(),
                    alpha: f(&w.alpha),
                    beta: f(&w.beta),
                    w2_bundle: f(&w.bundle.w2),
                    lifted_class: f(&w.lifted_class),
                    certificate: w.certificate.rows.iter().map(|&k| f(&l2[k])).collect(),
                }),
                search_scope: None,
                note: None,
            },
            LipschitzVerdict::NoWitnessFound { search_scope } => JsonLipschitz {
                status: r.lipschitz.status().into(),
                witness: None,
                search_scope: Some(search_scope.clone()),
                note: None,
            },
            LipschitzVerdict::NotApplicable { note } => JsonLipschitz {
                status: r.lipschitz.status().into(),
                witness: None,
                search_scope: None,
                note: Some(note.clone()),
            },
        };
        let pin_c_witness = match &r.pin_c_decision {
            PinCDecision::Lifts { certificate } => JsonPinC {
                certificate: Some(certificate.rows.iter().map(|&k| f(&l2[k])).collect()),
                residue: None,
            },
            PinCDecision::Obstructed { residue } => JsonPinC {
                certificate: None,
                residue: Some(f(residue)),
            },
        };
        JsonReport {
            schema_version: SCHEMA_VERSION,
            expression: r.expression.clone(),
            dimension: r.dimension,
            orientable: r.orientable.holds,
            spin: r.spin.holds,
            pin_plus: r.pin_plus.holds,
            pin_minus: r.pin_minus.holds,
            pin_c: r.pin_c.holds,
            lipschitz,
            obstructions: JsonObstructions {
                orientable: r.orientable.obstruction.clone(),
                spin: r.spin.obstruction.clone(),
                pin_plus: r.pin_plus.obstruction.clone(),
                pin_minus: r.pin_minus.obstruction.clone(),
                pin_c: r.pin_c.obstruction.clone(),
            },
            pin_c_witness,
            factor_criterion: r.fast_path.map(|fp| JsonFactorCriterion {
                pin_c: fp.holds,
                case: fp.case.describe(),
            }),
            trace: r.trace.clone(),
        }
    }

    /// Table of verdicts followed by the trace.
    pub fn to_text(&self, color: bool) -> String {
        let mark = |b: bool| match (b, color) {
            (true, true) => "\x1b[32myes\x1b[0m".to_string(),
            (false, true) => "\x1b[31mno\x1b[0m".to_string(),
            (true, false) => "yes".into(),
            (false, false) => "no".into(),
        };
        let mut out = format!("{}  (dimension {})\n\n", self.expression, self.dimension);
        let rows = [
            ("orientable", self.orientable, &self.obstructions.orientable),
            ("spin", self.spin, &self.obstructions.spin),
            ("pin+", self.pin_plus, &self.obstructions.pin_plus),
            ("pin-", self.pin_minus, &self.obstructions.pin_minus),
            ("pin^c", self.pin_c, &self.obstructions.pin_c),
        ];
        for (name, holds, why) in rows {
            out += &format!("  {name:<11} {:<4} {why}\n", mark(holds));
        }
        let lip = match self.lipschitz.status.as_str() {
            "yes" => {
                let w = self.lipschitz.witness.as_ref().expect("yes carries a witness");
                format!("{} E = {}", mark(true), w.bundle)
            }
            "no_witness_found" => "no witness found".into(),
            _ => "not applicable".into(),
        };
        out += &format!("  {:<11} {lip}\n\ntrace:\n", "Lipschitz");
        for t in &self.trace {
            out += &format!("  - {t}\n");
        }
        out
    }
}

/// Stiefel–Whitney classes and lift subspaces through a degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassesReport {
    pub schema_version: u32,
    pub expression: String,
    pub dimension: usize,
    pub complete_through: usize,
    pub basis: Vec<Vec<String>>,
    pub stiefel_whitney: Vec<String>,
    pub lift_l1: Vec<String>,
    pub lift_l2: Vec<String>,
    pub homology: Vec<String>,
}

impl ClassesReport {
    /// Degrees `0..=max_degree`; errors if that passes the known range.
    pub fn new(m: &ManifoldDescriptor, max_degree: Option<usize>) -> Result<Self> {
        let ring = m.ring();
        let top = max_degree.unwrap_or_else(|| ring.complete_through().min(m.dim()));
        let basis = (0..=top)
            .map(|n| Ok((0..ring.dim(n)?).map(|i| ring.basis_label(n, i)).collect()))
            .collect::<Result<_>>()?;
        let stiefel_whitney = (0..=top)
            .map(|k| Ok(ring.format_class(&m.sw(k)?)))
            .collect::<Result<_>>()?;
        let span = |s: &crate::ring::Z2Subspace| s.basis().iter().map(|c| ring.format_class(c)).collect();
        Ok(ClassesReport {
            schema_version: SCHEMA_VERSION,
            expression: m.name().into(),
            dimension: m.dim(),
            complete_through: ring.complete_through(),
            basis,
            stiefel_whitney,
            lift_l1: span(m.lift_l1()),
            lift_l2: span(m.lift_l2()),
            homology: m.homology().iter().map(ToString::to_string).collect(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}  (dimension {}, ring known through degree {})\n\n",
            self.expression, self.dimension, self.complete_through
        );
        for (k, w) in self.stiefel_whitney.iter().enumerate() {
            out += &format!("  w{k} = {w}    basis: {}\n", self.basis[k].join(", "));
        }
        out += &format!("\n  L1 = span{{{}}}\n", self.lift_l1.join(", "));
        out += &format!("  L2 = span{{{}}}\n", self.lift_l2.join(", "));
        for (n, h) in self.homology.iter().enumerate() {
            out += &format!("  H_{n} = {h}\n");
        }
        out
    }
}

/// Wu classes and the comparison `Sq(v)` against the Whitney-derived classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WuReport {
    pub schema_version: u32,
    pub expression: String,
    pub dimension: usize,
    pub wu_classes: Vec<String>,
    pub sw_from_wu: Vec<String>,
    pub sw_whitney: Vec<String>,
    pub agrees: bool,
}

impl WuReport {
    /// Errors with `UnsupportedDegree` on truncated descriptors and with
    /// `InvariantViolation` if Wu's formula disagrees with the stored classes.
    pub fn new(m: &ManifoldDescriptor) -> Result<Self> {
        let ring = m.ring();
        let data = steenrod::verify_wu(m)?;
        let fmt = |v: &[crate::ring::Z2Class]| v.iter().map(|c| ring.format_class(c)).collect::<Vec<_>>();
        let sw_whitney = (0..=m.dim()).map(|k| m.sw(k)).collect::<Result<Vec<_>>>()?;
        Ok(WuReport {
            schema_version: SCHEMA_VERSION,
            expression: m.name().into(),
            dimension: m.dim(),
            wu_classes: fmt(&data.wu_classes),
            sw_from_wu: fmt(&data.reconstructed_sw),
            sw_whitney: fmt(&sw_whitney),
            agrees: true,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}  (dimension {})\n\n", self.expression, self.dimension);
        for (k, v) in self.wu_classes.iter().enumerate() {
            out += &format!(
                "  v{k} = {v:<24} w{k} = Sq(v)_{k} = {:<24} (Whitney: {})\n",
                self.sw_from_wu[k], self.sw_whitney[k]
            );
        }
        out += if self.agrees {
            "\n  Wu's formula agrees with the Whitney product in every degree\n"
        } else {
            "\n  MISMATCH between Wu's formula and the Whitney product\n"
        };
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{product, rp, sphere};
    use crate::decide::full_report_product;

    #[test]
    fn witness_fields() {
        let a = product(&rp(2).unwrap(), &rp(2).unwrap()).unwrap();
        let r = full_report_product(&a, &sphere(1).unwrap()).unwrap();
        let j = JsonReport::new(&r);
        assert!(!j.pin_c);
        let w = j.lipschitz.witness.as_ref().unwrap();
        assert_eq!(w.bundle, "l(a1) ⊕ l(a2)");
        assert_eq!(w.lifted_class, "a1^2 + a2^2");
        assert_eq!(j.pin_c_witness.residue.as_deref(), Some("a1 a2"));
        assert!(j.factor_criterion.is_some());
    }

    #[test]
    fn text_has_no_escapes_without_color() {
        let m = rp(3).unwrap();
        let r = crate::decide::full_report(&m).unwrap();
        let t = JsonReport::new(&r).to_text(false);
        assert!(!t.contains('\x1b'));
        assert!(t.contains("pin^c"));
    }
}
