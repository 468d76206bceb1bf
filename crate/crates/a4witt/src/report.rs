//! JSON reports. Every number is written as a `"p/q"` string.

use std::fmt;

use a4witt_core::arith::BrauerClass;
use a4witt_core::{IdentityReport, Rational};
use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Error => "error",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Claim {
    pub id: String,
    /// Which statement the claim checks, in a few words.
    pub anchor: String,
    pub status: Status,
    pub witness: Value,
}

impl Claim {
    pub fn new(id: &str, anchor: &str, passed: bool, witness: Value) -> Self {
        let status = if passed { Status::Pass } else { Status::Fail };
        Claim { id: id.to_string(), anchor: anchor.to_string(), status, witness }
    }

    pub fn error(id: &str, anchor: &str, err: impl fmt::Display) -> Self {
        Claim { id: id.to_string(), anchor: anchor.to_string(), status: Status::Error, witness: json!(err.to_string()) }
    }

    pub fn from_identities(id: &str, anchor: &str, reports: &[IdentityReport]) -> Self {
        let passed = reports.iter().all(|r| r.holds);
        Claim::new(id, anchor, passed, Value::Array(reports.iter().map(identity).collect()))
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub claims: Vec<Claim>,
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Map::new(),
            result: None,
            claims: Vec::new(),
            seed: None,
            elapsed_ms: 0,
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    /// True when no claim failed or errored.
    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| matches!(c.status, Status::Pass | Status::Skipped))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub fn q(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn class(c: &BrauerClass) -> Value {
    Value::Array(c.places().map(|p| Value::String(p.to_string())).collect())
}

pub fn identity(r: &IdentityReport) -> Value {
    let mut m = Map::new();
    m.insert("claim".into(), json!(r.claim));
    m.insert("holds".into(), json!(r.holds));
    if let Some(l) = &r.lhs {
        m.insert("lhs".into(), json!(l));
    }
    if let Some(rhs) = &r.rhs {
        m.insert("rhs".into(), json!(rhs));
    }
    Value::Object(m)
}
