use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde_json::Value;
use thiserror::Error;

use super::{adversary, fam, order, sat, structure_digest, tp2, Certification, Theorem, WitnessError, WitnessReport};
use crate::structures::{AnyStructure, Feq2Structure, Hypergraph};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("malformed report: {0}")]
    Schema(String),
    #[error("missing input \"{0}\"")]
    MissingInput(String),
    #[error("input \"{name}\" should be a {expected}")]
    WrongKind { name: String, expected: &'static str },
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Verification {
    pub digest_mismatches: Vec<String>,
    /// Certifications whose recomputed form differs from the report, or
    /// payload defects found while recomputing.
    pub mismatches: Vec<String>,
    /// Reproduced certifications that do not hold.
    pub failing: Vec<String>,
    pub recomputed: Vec<Certification>,
}

impl Verification {
    pub fn ok(&self) -> bool {
        self.digest_mismatches.is_empty() && self.mismatches.is_empty() && self.failing.is_empty()
    }
}

fn decode<T: DeserializeOwned>(what: &str, value: &Value) -> Result<T, VerifyError> {
    serde_json::from_value(value.clone()).map_err(|e| VerifyError::Schema(format!("{what}: {e}")))
}

fn hypergraph<'a>(inputs: &'a BTreeMap<String, AnyStructure>, name: &str) -> Result<&'a Hypergraph, VerifyError> {
    match inputs.get(name) {
        Some(AnyStructure::Hypergraph(h)) => Ok(h),
        Some(_) => Err(VerifyError::WrongKind {
            name: name.into(),
            expected: "hypergraph",
        }),
        None => Err(VerifyError::MissingInput(name.into())),
    }
}

fn feq2<'a>(inputs: &'a BTreeMap<String, AnyStructure>, name: &str) -> Result<&'a Feq2Structure, VerifyError> {
    match inputs.get(name) {
        Some(AnyStructure::Feq2(f)) => Ok(f),
        Some(_) => Err(VerifyError::WrongKind {
            name: name.into(),
            expected: "feq2 structure",
        }),
        None => Err(VerifyError::MissingInput(name.into())),
    }
}

fn recompute(
    report: &WitnessReport,
    inputs: &BTreeMap<String, AnyStructure>,
) -> Result<Result<Vec<Certification>, WitnessError>, VerifyError> {
    let (p, w) = (&report.params, &report.witness);
    Ok(match report.theorem {
        Theorem::Fam => fam::recompute(
            &decode("params", p)?,
            &decode("witness", w)?,
            hypergraph(inputs, "ambient")?,
            hypergraph(inputs, "graph")?,
        ),
        Theorem::Order => order::recompute(
            &decode("params", p)?,
            &decode("witness", w)?,
            hypergraph(inputs, "ambient")?,
        ),
        Theorem::Adversary => adversary::recompute(
            &decode("params", p)?,
            &decode("witness", w)?,
            hypergraph(inputs, "ambient")?,
        ),
        Theorem::Sat => sat::recompute(
            &decode("params", p)?,
            &decode("witness", w)?,
            hypergraph(inputs, "ambient")?,
        ),
        Theorem::Tp2 => tp2::recompute(
            &decode("params", p)?,
            &decode("witness", w)?,
            feq2(inputs, "structure")?,
        ),
    })
}

/// Recomputes every certification of `report` from its payload and `inputs`
/// (keyed as in `report.inputs`) and compares.
pub fn verify_report(
    report: &WitnessReport,
    inputs: &BTreeMap<String, AnyStructure>,
) -> Result<Verification, VerifyError> {
    let mut out = Verification::default();
    for (name, record) in &report.inputs {
        let given = inputs
            .get(name)
            .ok_or_else(|| VerifyError::MissingInput(name.clone()))?;
        let digest = structure_digest(given);
        if digest != record.digest {
            out.digest_mismatches.push(format!(
                "input \"{name}\": digest {digest} does not match the reported {}",
                record.digest
            ));
        }
    }
    if !out.digest_mismatches.is_empty() {
        return Ok(out);
    }
    match recompute(report, inputs)? {
        Err(e) => out.mismatches.push(format!("payload rejected: {e}")),
        Ok(certs) => {
            if certs.len() != report.certified.len() {
                out.mismatches.push(format!(
                    "{} certifications reported, {} recomputed",
                    report.certified.len(),
                    certs.len()
                ));
            }
            for (reported, fresh) in report.certified.iter().zip(&certs) {
                if reported != fresh {
                    out.mismatches.push(format!("reported {reported}, recomputed {fresh}"));
                }
            }
            out.failing = certs.iter().filter(|c| !c.holds).map(|c| c.to_string()).collect();
            out.recomputed = certs;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::from_int;
    use crate::structures::random_maximal_free;
    use crate::witnesses::order_witness;

    fn setup() -> (WitnessReport, BTreeMap<String, AnyStructure>) {
        let g = random_maximal_free(15, 2, 3, 2).unwrap();
        let report = order_witness(&g, 3, 2).unwrap();
        let inputs = BTreeMap::from([("ambient".to_string(), AnyStructure::Hypergraph(g))]);
        (report, inputs)
    }

    #[test]
    fn fresh_report_verifies() {
        let (report, inputs) = setup();
        let text = report.to_json_string();
        let back = WitnessReport::from_json_str(&text).unwrap();
        assert_eq!(back, report);
        assert!(verify_report(&back, &inputs).unwrap().ok());
    }

    #[test]
    fn tampered_lhs_is_caught() {
        let (mut report, inputs) = setup();
        report.certified[1].lhs = from_int(3);
        let v = verify_report(&report, &inputs).unwrap();
        assert_eq!(v.mismatches.len(), 1);
        assert!(!v.ok());
    }

    #[test]
    fn wrong_input_is_a_digest_mismatch() {
        let (report, _) = setup();
        let other = random_maximal_free(15, 2, 3, 3).unwrap();
        let inputs = BTreeMap::from([("ambient".to_string(), AnyStructure::Hypergraph(other))]);
        let v = verify_report(&report, &inputs).unwrap();
        assert_eq!(v.digest_mismatches.len(), 1);
    }

    #[test]
    fn malformed_payload_is_a_schema_error() {
        let (mut report, inputs) = setup();
        report.witness = serde_json::json!({"nonsense": true});
        assert!(matches!(verify_report(&report, &inputs), Err(VerifyError::Schema(_))));
    }
}
