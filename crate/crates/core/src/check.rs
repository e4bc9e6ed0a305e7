//! Check records shared by the verification routines and suite reports.

use std::fmt;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// One verified claim: an identifier, the statement it traces to, a
/// status and the supporting data (keys are kept sorted).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub claim: String,
    pub anchor: String,
    pub status: Status,
    pub data: Map<String, Value>,
}

impl CheckReport {
    pub fn new(claim: impl Into<String>, anchor: impl Into<String>) -> Self {
        CheckReport { claim: claim.into(), anchor: anchor.into(), status: Status::Pass, data: Map::new() }
    }

    pub fn record(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let v = serde_json::to_value(value).unwrap_or_else(|e| Value::String(e.to_string()));
        self.data.insert(key.to_string(), v);
        self
    }

    /// Records a boolean condition; a false condition fails the report.
    pub fn require(&mut self, key: &str, ok: bool) -> bool {
        self.record(key, ok);
        if !ok {
            self.status = Status::Fail;
        }
        ok
    }

    pub fn fail(&mut self, reason: impl Into<String>) {
        self.record("failure", reason.into());
        self.status = Status::Fail;
    }

    pub fn skip(&mut self, reason: impl Into<String>) {
        self.record("skipped_because", reason.into());
        if self.status == Status::Pass {
            self.status = Status::Skipped;
        }
    }

    /// Folds a sub-report into this one under `key`.
    pub fn absorb(&mut self, key: &str, sub: &CheckReport) {
        self.record(key, sub);
        if sub.status == Status::Fail {
            self.status = Status::Fail;
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.data.get(key)
    }
}
