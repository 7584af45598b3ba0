//! Canonical JSON form of an obstruction certificate.
//!
//! Keys are emitted in declaration order, steps in certificate order, and no
//! timestamps or host details are recorded, so identical inputs always
//! serialize to identical bytes.

use serde::{Deserialize, Serialize};

use crate::obstruction::{
    CrossValidation, Evidence, ObstructionCertificate, StepKind, StepName, StepStatus, Verdict,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateInput {
    pub level: u64,
    pub degree: u32,
    pub prime: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub index: usize,
    pub name: StepName,
    pub kind: StepKind,
    pub statement: String,
    pub status: StepStatus,
    pub evidence: Evidence,
    pub citation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub schema_version: u32,
    pub tool_version: String,
    pub input: CertificateInput,
    pub steps: Vec<StepRecord>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_validation: Option<CrossValidation>,
}

impl CertificateDocument {
    pub fn new(cert: &ObstructionCertificate, cross_validation: Option<CrossValidation>) -> Self {
        CertificateDocument {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input: CertificateInput {
                level: cert.level,
                degree: cert.degree,
                prime: cert.prime,
            },
            steps: cert
                .steps
                .iter()
                .enumerate()
                .map(|(index, s)| StepRecord {
                    index,
                    name: s.name,
                    kind: s.kind,
                    statement: s.statement.clone(),
                    status: s.status,
                    evidence: s.evidence.clone(),
                    citation: s.citation.clone(),
                })
                .collect(),
            verdict: cert.verdict,
            cross_validation,
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("document is serializable");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Verdict implied by the recorded step statuses.
    pub fn recomputed_verdict(&self) -> Verdict {
        if self.steps.iter().all(|s| s.status == StepStatus::Pass) {
            Verdict::RuledOut
        } else {
            Verdict::Inconclusive
        }
    }
}
