//! Deterministic JSON report envelope shared by the CLI checks.
//!
//! Field order is fixed (alphabetical, via declaration order plus BTreeMap
//! keys) and scalars are serialized in the textual format, never as floats,
//! so repeated runs are byte-identical.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Infeasible,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub indices: Vec<i64>,
    pub lhs: String,
    pub relation: String,
    pub rhs: String,
}

impl From<&crate::algebra::ViolationRecord> for Violation {
    fn from(v: &crate::algebra::ViolationRecord) -> Self {
        Violation {
            indices: v.indices.clone(),
            lhs: v.lhs.clone(),
            relation: v.relation.clone(),
            rhs: v.rhs.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub derived: BTreeMap<String, serde_json::Value>,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub violations: Vec<Violation>,
    pub window: Option<i64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            derived: BTreeMap::new(),
            params: BTreeMap::new(),
            status: Status::Pass,
            violations: Vec::new(),
            window: None,
        }
    }

    pub fn derive(&mut self, key: &str, value: impl Into<serde_json::Value>) {
        self.derived.insert(key.to_string(), value.into());
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    /// Pass iff there are no violations (infeasible set explicitly).
    pub fn finish_status(&mut self) {
        if self.status != Status::Infeasible {
            self.status = if self.violations.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            };
        }
    }

    pub fn to_json_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
