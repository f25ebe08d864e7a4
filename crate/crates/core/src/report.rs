//! Report clauses shared by every analysis.
//!
//! A clause records one checked statement: its name, the mathematical result
//! it instantiates, both sides of the comparison and an outcome. A clause that
//! establishes a negative fact (say "not separable") still passes; `Fail` is
//! reserved for a statement that should hold on valid input but does not.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Undefined,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Undefined => "undefined",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Clause {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    pub lhs: Value,
    pub rhs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Clause {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>, status: Status) -> Clause {
        Clause { name: name.into(), anchor: anchor.into(), status, lhs: Value::Null, rhs: Value::Null, witness: None }
    }

    /// A comparison clause that passes iff `lhs == rhs`.
    pub fn compare(name: impl Into<String>, anchor: impl Into<String>, lhs: Value, rhs: Value) -> Clause {
        let status = Status::from_bool(lhs == rhs);
        Clause { name: name.into(), anchor: anchor.into(), status, lhs, rhs, witness: None }
    }

    /// A clause recording a fact; `ok` decides pass or fail.
    pub fn check(name: impl Into<String>, anchor: impl Into<String>, ok: bool, lhs: Value, rhs: Value) -> Clause {
        Clause { name: name.into(), anchor: anchor.into(), status: Status::from_bool(ok), lhs, rhs, witness: None }
    }

    pub fn skipped(name: impl Into<String>, anchor: impl Into<String>, reason: impl Into<String>) -> Clause {
        let mut c = Clause::new(name, anchor, Status::Skipped);
        c.witness = Some(Value::String(reason.into()));
        c
    }

    pub fn undefined(name: impl Into<String>, anchor: impl Into<String>, reason: impl Into<String>) -> Clause {
        let mut c = Clause::new(name, anchor, Status::Undefined);
        c.witness = Some(Value::String(reason.into()));
        c
    }

    pub fn with_witness(mut self, witness: Value) -> Clause {
        self.witness = Some(witness);
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// True iff no clause failed.
pub fn all_pass(clauses: &[Clause]) -> bool {
    clauses.iter().all(Clause::passed)
}
