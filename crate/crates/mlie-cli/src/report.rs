//! The machine-readable verdict report: one entry per executed check plus
//! command-specific data tables. Serialization is deterministic for a fixed
//! input except for the `time_ms` fields.

use std::collections::BTreeMap;

use mlie::CheckReport;
use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA: &str = "mlie-report/1";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub inputs: Vec<String>,
    pub field: String,
    pub checks: Vec<CheckEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, serde_json::Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    /// `"pass"` or `"fail"`.
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessEntry>,
    pub time_ms: u128,
}

/// A failing check's first counterexample: the offending basis entries and
/// the defect rendered in the scalar literal syntax.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    pub defect: String,
}

impl Report {
    pub fn new(command: &str, inputs: &[String], field: String) -> Self {
        Report {
            schema: REPORT_SCHEMA.to_string(),
            command: command.to_string(),
            inputs: inputs.to_vec(),
            field,
            checks: Vec::new(),
            data: BTreeMap::new(),
        }
    }

    /// Records a check outcome. Witnesses are attached only when requested,
    /// so default reports stay small and free of instance detail.
    pub fn push_check(&mut self, check: &CheckReport, time_ms: u128, witnesses: bool) {
        let witness = match (&check.witness, witnesses) {
            (Some(w), true) => Some(WitnessEntry {
                indices: w.indices.clone(),
                labels: w.labels.clone(),
                defect: w.defect.to_string(),
            }),
            _ => None,
        };
        self.checks.push(CheckEntry {
            name: check.name.to_string(),
            verdict: if check.pass { "pass" } else { "fail" }.to_string(),
            witness,
            time_ms,
        });
    }

    pub fn insert_data<T: Serialize>(&mut self, key: &str, value: &T) {
        self.data.insert(
            key.to_string(),
            serde_json::to_value(value).expect("report data serializes"),
        );
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.verdict == "pass")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
