use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::ReprError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

/// One failed relation instance, described well enough to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckFailure {
    pub relation: String,
    pub instance: String,
    pub point: String,
}

/// Pass/fail counts per relation plus every failing instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    tallies: BTreeMap<String, Tally>,
    failures: Vec<CheckFailure>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Record the outcome of one instance. An evaluation error counts as a
    /// failure and is appended to the instance text.
    pub fn record(
        &mut self,
        relation: &str,
        outcome: Result<bool, ReprError>,
        instance: impl FnOnce() -> String,
        point: impl FnOnce() -> String,
    ) {
        let tally = self.tallies.entry(relation.to_string()).or_default();
        match outcome {
            Ok(true) => tally.passed += 1,
            Ok(false) => {
                tally.failed += 1;
                self.failures.push(CheckFailure { relation: relation.to_string(), instance: instance(), point: point() });
            }
            Err(e) => {
                tally.failed += 1;
                self.failures.push(CheckFailure {
                    relation: relation.to_string(),
                    instance: format!("{} (error: {e})", instance()),
                    point: point(),
                });
            }
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        for (k, t) in other.tallies {
            let mine = self.tallies.entry(k).or_default();
            mine.passed += t.passed;
            mine.failed += t.failed;
        }
        self.failures.extend(other.failures);
    }

    pub fn tallies(&self) -> &BTreeMap<String, Tally> {
        &self.tallies
    }

    pub fn tally(&self, relation: &str) -> Tally {
        self.tallies.get(relation).copied().unwrap_or_default()
    }

    pub fn failures(&self) -> &[CheckFailure] {
        &self.failures
    }

    pub fn passed(&self) -> usize {
        self.tallies.values().map(|t| t.passed).sum()
    }

    pub fn failed(&self) -> usize {
        self.failures.len()
    }

    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}
