//! Verification reports.
//!
//! A report is a sequence of records. With `--json` each record is one
//! JSON object per line, starting with the header
//! `{"type":"header","format":"kgraph-report","version":1,...}` and ending
//! with a `summary`. Field order is fixed by the record definitions, so
//! identical runs give byte-identical output.

use std::fmt::Write;

use serde::Serialize;
use serde_json::{Map, Value};

use kgraph::repr::CheckReport;

pub const FORMAT: &str = "kgraph-report";
pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Record {
    Header { format: &'static str, version: u32, command: String, input: Vec<String> },
    /// One graph validation problem.
    Violation { kind: String, message: String },
    /// A listed result: a path, an extension pair, an orbit member, a slice.
    Item { kind: String, value: String },
    /// A computation that could not be completed.
    Error { message: String },
    Relation { relation: String, passed: usize, failed: usize },
    Failure { relation: String, instance: String, point: String },
    Decision {
        decision: String,
        #[serde(flatten)]
        fields: Map<String, Value>,
    },
    Summary { status: Status, checks_passed: usize, checks_failed: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    records: Vec<Record>,
    passed: usize,
    failed: usize,
    /// Set by a negative outcome that is not a check failure, such as an
    /// invalid graph or inequivalent representations.
    negative: bool,
    error: bool,
}

impl Report {
    pub fn new(command: &str, input: &[String]) -> Self {
        Report {
            records: vec![Record::Header { format: FORMAT, version: VERSION, command: command.to_string(), input: input.to_vec() }],
            passed: 0,
            failed: 0,
            negative: false,
            error: false,
        }
    }

    pub fn item(&mut self, kind: &str, value: impl Into<String>) {
        self.records.push(Record::Item { kind: kind.to_string(), value: value.into() });
    }

    pub fn violation(&mut self, kind: &str, message: String) {
        self.negative = true;
        self.records.push(Record::Violation { kind: kind.to_string(), message });
    }

    /// Append per-relation tallies (in relation order) and then every failure.
    pub fn checks(&mut self, report: &CheckReport) {
        for (relation, t) in report.tallies() {
            self.records.push(Record::Relation { relation: relation.clone(), passed: t.passed, failed: t.failed });
            self.passed += t.passed;
            self.failed += t.failed;
        }
        for f in report.failures() {
            self.records.push(Record::Failure {
                relation: f.relation.clone(),
                instance: f.instance.clone(),
                point: f.point.clone(),
            });
        }
    }

    pub fn decision(&mut self, decision: &str, fields: impl IntoIterator<Item = (&'static str, Value)>) {
        let fields = fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        self.records.push(Record::Decision { decision: decision.to_string(), fields });
    }

    pub fn error(&mut self, message: String) {
        self.error = true;
        self.records.push(Record::Error { message });
    }

    /// Whether some computation was abandoned with an error.
    pub fn has_error(&self) -> bool {
        self.error
    }

    /// Mark the run as failed without a failing check.
    pub fn negative(&mut self) {
        self.negative = true;
    }

    pub fn status(&self) -> Status {
        if self.failed > 0 || self.negative || self.error {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    /// The records, closed by the summary.
    pub fn records(&self) -> Vec<Record> {
        let mut out = self.records.clone();
        out.push(Record::Summary { status: self.status(), checks_passed: self.passed, checks_failed: self.failed });
        out
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in self.records() {
            out.push_str(&serde_json::to_string(&r).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in self.records() {
            match r {
                Record::Header { command, input, .. } => writeln!(out, "{command} {}", input.join(" ")),
                Record::Violation { kind, message } => writeln!(out, "violation {kind}: {message}"),
                Record::Item { kind, value } => writeln!(out, "{kind} {value}"),
                Record::Error { message } => writeln!(out, "error: {message}"),
                Record::Relation { relation, passed, failed } => {
                    writeln!(out, "check {relation}: {passed} passed, {failed} failed")
                }
                Record::Failure { relation, instance, point } => writeln!(out, "FAIL {relation}: {instance} at {point}"),
                Record::Decision { decision, fields } => {
                    let fs: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={}", text_value(v))).collect();
                    writeln!(out, "decision {decision}: {}", fs.join(" "))
                }
                Record::Summary { status, checks_passed, checks_failed } => {
                    let s = if status == Status::Pass { "PASS" } else { "FAIL" };
                    writeln!(out, "{s} ({checks_passed} checks passed, {checks_failed} failed)")
                }
            }
            .expect("write to string");
        }
        out
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
