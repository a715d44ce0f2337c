//! Versioned JSON run reports.

use std::collections::BTreeMap;

use hypo_core::{canonical_form, EnergyVerdict, Graph};
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "hypo-run-report/1";

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Record {
    pub canonical_id: String,
    pub n: usize,
    pub m: usize,
    /// Cyclomatic number; absent for disconnected graphs.
    pub c: Option<usize>,
    pub energy: f64,
    pub margin: f64,
    pub verdict: String,
    pub tier: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateStatus>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CertificateStatus {
    Verified { nodes: usize, cuts: usize, max_cut_size: usize, root_slack: f64 },
    Exceptional { name: String },
    Failed { reason: String, stuck: Option<String> },
}

impl Record {
    pub fn new(g: &Graph, verdict: &EnergyVerdict) -> Record {
        Record {
            canonical_id: canonical_form(g).into_string(),
            n: g.order(),
            m: g.size(),
            c: g.cyclomatic_number().ok(),
            energy: verdict.energy,
            margin: verdict.margin,
            verdict: verdict.classification.as_str().to_owned(),
            tier: verdict.tier.as_str().to_owned(),
            certificate: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub records: Vec<Record>,
    pub summary: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_s: Option<f64>,
}

impl RunReport {
    /// Sorts the records by order and canonical id and tallies them.
    pub fn new(command: &str, parameters: BTreeMap<String, Value>, mut records: Vec<Record>) -> RunReport {
        records.sort_by(|a, b| (a.n, &a.canonical_id).cmp(&(b.n, &b.canonical_id)));
        let summary = tally(&records);
        RunReport {
            schema: SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            command: command.to_owned(),
            parameters,
            records,
            summary,
            wall_time_s: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are finite") + "\n"
    }
}

fn tally(records: &[Record]) -> BTreeMap<String, usize> {
    let mut summary = BTreeMap::new();
    summary.insert("records".to_owned(), records.len());
    for r in records {
        *summary.entry(r.verdict.clone()).or_insert(0) += 1;
        if let Some(status) = &r.certificate {
            let key = match status {
                CertificateStatus::Verified { .. } => "certified",
                CertificateStatus::Exceptional { .. } => "exceptional",
                CertificateStatus::Failed { .. } => "certification_failed",
            };
            *summary.entry(key.to_owned()).or_insert(0) += 1;
        }
    }
    summary
}
