//! Report types produced by the probes: witnesses, defect reports, verdicts.

use crate::scalar::Scalar;
use crate::vector::Vector;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A concrete counterexample: the sampled ingredients that produced a defect,
/// stored in full so the defect can be recomputed from the report alone.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub x: Vector,
    /// Scalar ingredient, present for probes that scale by one.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<Scalar>,
    /// Second vector: the anchor of a profile probe, or the partner of a
    /// sampled pair.
    pub y: Vector,
    /// Third vector, used by probes over vector triples.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub x2: Option<Vector>,
    /// The raw (un-normalized) defect at these ingredients.
    pub defect: f64,
}

/// Outcome of one defect scan.
///
/// `sup_defect` is the scale-normalized sup, the quantity verdicts compare
/// against their threshold; `sup_defect_raw` is the un-normalized defect at
/// the same witnessing sample (equal to `witness.defect` when a witness is
/// present). Probes whose defects are already absolute report the two
/// fields equal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DefectReport {
    pub probe_name: String,
    pub sup_defect: f64,
    pub sup_defect_raw: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    /// How many evaluations the sup ranges over.
    pub n_samples: u64,
    /// The tolerance this probe's sup is judged against.
    pub tolerance: f64,
    pub seed: u64,
    /// Reported only by the degenerate zero probe: the smallest observed
    /// ratio `p(x) / norm(x)` over the search when no zero was found.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub min_ratio: Option<f64>,
}

impl DefectReport {
    pub(crate) fn new(
        probe_name: &str,
        sup_defect: f64,
        sup_defect_raw: f64,
        witness: Option<Witness>,
        n_samples: u64,
        tolerance: f64,
        seed: u64,
    ) -> Self {
        debug_assert!(
            sup_defect <= 0.0 || witness.is_some(),
            "{probe_name}: positive sup without witness"
        );
        DefectReport {
            probe_name: probe_name.to_string(),
            sup_defect,
            sup_defect_raw,
            witness,
            n_samples,
            tolerance,
            seed,
            min_ratio: None,
        }
    }

    pub fn exceeds_tolerance(&self) -> bool {
        self.sup_defect > self.tolerance
    }
}

/// Classification outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Every probe stayed below threshold: consistent with an inner-product
    /// norm at the tested sampling resolution.
    InnerProductConsistent,
    /// At least one probe produced a defect above threshold, with a witness.
    NotInnerProduct,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::InnerProductConsistent => write!(f, "inner-product consistent"),
            Outcome::NotInnerProduct => write!(f, "NOT an inner-product norm"),
        }
    }
}

/// Full classification result: outcome, the threshold it used, and one
/// report per probe family as evidence.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub threshold: f64,
    pub evidence: Vec<DefectReport>,
}

impl Verdict {
    /// The evidence report with the largest normalized sup.
    pub fn worst(&self) -> Option<&DefectReport> {
        self.evidence
            .iter()
            .max_by(|a, b| a.sup_defect.total_cmp(&b.sup_defect))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ScalarField;

    #[test]
    fn witness_serialization_omits_absent_parts() {
        let w = Witness {
            x: Vector::basis(ScalarField::Real, 2, 0),
            lambda: None,
            y: Vector::basis(ScalarField::Real, 2, 1),
            x2: None,
            defect: 4.0,
        };
        let json = serde_json::to_string(&w).unwrap();
        assert!(!json.contains("lambda"));
        assert!(!json.contains("x2"));
        let back: Witness = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn outcome_serialization_is_snake_case() {
        assert_eq!(
            serde_json::to_string(&Outcome::NotInnerProduct).unwrap(),
            "\"not_inner_product\""
        );
        assert_eq!(
            serde_json::to_string(&Outcome::InnerProductConsistent).unwrap(),
            "\"inner_product_consistent\""
        );
    }
}
