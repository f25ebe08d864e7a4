//! The report document every analysis command emits.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use falab::{Clause, Status};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(path: impl Into<String>, bytes: &[u8]) -> InputDigest {
        InputDigest { path: path.into(), sha256: hex::encode(Sha256::digest(bytes)) }
    }
}

#[derive(Clone, Debug)]
struct Stage {
    name: String,
    first: usize,
    end: usize,
    micros: u128,
}

#[derive(Clone, Debug, Default)]
pub struct ReportDoc {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub facts: BTreeMap<String, Value>,
    pub clauses: Vec<Clause>,
    stages: Vec<Stage>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

impl ReportDoc {
    pub fn new(command: impl Into<String>) -> ReportDoc {
        ReportDoc { command: command.into(), ..ReportDoc::default() }
    }

    pub fn fact(&mut self, key: &str, value: Value) {
        self.facts.insert(key.to_string(), value);
    }

    /// Runs one producer of clauses and records how long it took.
    pub fn stage<E>(&mut self, name: &str, f: impl FnOnce() -> Result<Vec<Clause>, E>) -> Result<(), E> {
        let start = Instant::now();
        let clauses = f()?;
        let micros = start.elapsed().as_micros();
        let first = self.clauses.len();
        self.clauses.extend(clauses);
        self.stages.push(Stage { name: name.to_string(), first, end: self.clauses.len(), micros });
        Ok(())
    }

    pub fn has_failure(&self) -> bool {
        self.clauses.iter().any(|c| c.status == Status::Fail)
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.has_failure())
    }

    /// Combined digest of all inputs, in the order they were read.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        for i in &self.inputs {
            h.update(i.sha256.as_bytes());
            h.update(b"\n");
        }
        hex::encode(h.finalize())
    }

    fn summary(&self) -> Value {
        let count = |s: Status| self.clauses.iter().filter(|c| c.status == s).count();
        json!({
            "pass": count(Status::Pass),
            "fail": count(Status::Fail),
            "skipped": count(Status::Skipped),
            "undefined": count(Status::Undefined),
        })
    }

    /// Timings are wall-clock and so only included on request; without
    /// them the document is a pure function of the inputs.
    pub fn to_json(&self, timings: bool) -> Value {
        let clauses: Vec<Value> = self.clauses.iter().map(|c| serde_json::to_value(c).expect("clauses serialize")).collect();
        let mut v = json!({
            "tool": "falab",
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "inputs": self.inputs.iter().map(|i| json!({"path": i.path, "sha256": i.sha256})).collect::<Vec<_>>(),
            "digest": self.digest(),
            "facts": self.facts,
            "clauses": clauses,
            "summary": self.summary(),
        });
        if timings {
            v["timings"] = self
                .stages
                .iter()
                .map(|s| json!({"stage": s.name, "clauses": [s.first, s.end], "micros": s.micros}))
                .collect();
        }
        v
    }

    pub fn emit(&self, format: Format, timings: bool) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json(timings)).expect("json");
                s.push('\n');
                s
            }
            Format::Markdown => self.markdown(timings),
        }
    }

    fn markdown(&self, timings: bool) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# falab {}\n", self.command);
        let _ = writeln!(s, "version {}, digest `{}`\n", env!("CARGO_PKG_VERSION"), self.digest());
        if !self.inputs.is_empty() {
            s.push_str("| input | sha256 |\n|---|---|\n");
            for i in &self.inputs {
                let _ = writeln!(s, "| {} | `{}` |", cell(&i.path), i.sha256);
            }
            s.push('\n');
        }
        if !self.facts.is_empty() {
            s.push_str("## Facts\n\n| fact | value |\n|---|---|\n");
            for (k, v) in &self.facts {
                let _ = writeln!(s, "| {} | {} |", cell(k), cell(&compact(v)));
            }
            s.push('\n');
        }
        s.push_str("## Clauses\n\n");
        if self.clauses.is_empty() {
            s.push_str("_no clauses_\n");
        } else {
            s.push_str("| # | clause | anchor | status | lhs | rhs | witness |\n|---|---|---|---|---|---|---|\n");
            for (n, c) in self.clauses.iter().enumerate() {
                let witness = c.witness.as_ref().map(compact).unwrap_or_default();
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {} | {} |",
                    n + 1,
                    cell(&c.name),
                    cell(&c.anchor),
                    c.status.as_str(),
                    cell(&compact(&c.lhs)),
                    cell(&compact(&c.rhs)),
                    cell(&witness)
                );
            }
        }
        if timings && !self.stages.is_empty() {
            s.push_str("\n## Timings\n\n| stage | clauses | microseconds |\n|---|---|---|\n");
            for st in &self.stages {
                let _ = writeln!(s, "| {} | {}..{} | {} |", cell(&st.name), st.first + 1, st.end, st.micros);
            }
        }
        let sum = self.summary();
        let _ = writeln!(s, "\n{} pass, {} fail, {} skipped, {} undefined", sum["pass"], sum["fail"], sum["skipped"], sum["undefined"]);
        s
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn cell(text: &str) -> String {
    text.replace('|', "\\|").replace('\n', " ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_a_valid_document() {
        let d = ReportDoc::new("check");
        let v: Value = serde_json::from_str(&d.emit(Format::Json, false)).unwrap();
        assert_eq!(v["clauses"], json!([]));
        assert_eq!(v["summary"]["pass"], 0);
        assert!(d.emit(Format::Markdown, false).contains("_no clauses_"));
        assert_eq!(d.exit_code(), 0);
    }

    #[test]
    fn one_passing_clause_is_one_row() {
        let mut d = ReportDoc::new("check");
        d.stage::<()>("s", || Ok(vec![Clause::compare("a = a", "anchor", json!(1), json!(1))])).unwrap();
        let md = d.emit(Format::Markdown, false);
        assert_eq!(md.lines().filter(|l| l.starts_with("| 1 |")).count(), 1);
        assert!(md.contains("| pass |"));
    }

    #[test]
    fn mixed_statuses_keep_execution_order() {
        let mut d = ReportDoc::new("check");
        d.stage::<()>("s", || {
            Ok(vec![
                Clause::compare("b", "x", json!(1), json!(2)),
                Clause::skipped("a", "x", "no"),
                Clause::compare("c", "x", json!(1), json!(1)),
            ])
        })
        .unwrap();
        let v = d.to_json(false);
        let names: Vec<&str> = v["clauses"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
        assert_eq!(names, ["b", "a", "c"]);
        assert_eq!(d.exit_code(), 1);
        assert_eq!(d.emit(Format::Json, false), d.emit(Format::Json, false));
        assert!(d.to_json(true).get("timings").is_some());
        assert!(d.to_json(false).get("timings").is_none());
    }

    #[test]
    fn pipes_are_escaped_in_tables() {
        let mut d = ReportDoc::new("check");
        d.fact("a|b", json!("x|y"));
        assert!(d.emit(Format::Markdown, false).contains("a\\|b"));
    }
}
