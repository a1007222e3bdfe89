//! Machine-readable results of the verification sweeps.

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;

/// Reports keep at most this many witnesses; the count is always exact.
pub const MAX_WITNESSES: usize = 16;

/// One failing case. `sets` holds the kernels (or other subsets) involved,
/// each as a sorted list of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub what: String,
    pub sets: Vec<Vec<usize>>,
}

impl Violation {
    pub fn new(what: impl Into<String>, sets: &[&ElementSet]) -> Self {
        Violation {
            what: what.into(),
            sets: sets.iter().map(|s| s.to_vec()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub group: String,
    pub order: usize,
    pub passed: bool,
    /// Number of instances examined.
    pub cases: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    /// Builds a report from per-case results gathered in a fixed order.
    pub fn from_cases(check: &str, order: usize, cases: u64, violations: Vec<Violation>) -> Self {
        let violation_count = violations.len() as u64;
        let mut violations = violations;
        violations.truncate(MAX_WITNESSES);
        CheckReport {
            check: check.to_string(),
            group: String::new(),
            order,
            passed: violation_count == 0,
            cases,
            violation_count,
            violations,
        }
    }

    pub fn with_group(mut self, name: &str) -> Self {
        self.group = name.to_string();
        self
    }
}

/// Accumulates case counts and violations from a parallel sweep. Partial
/// tallies are merged in input order, so the witness list is deterministic.
#[derive(Default, Debug)]
pub struct Tally {
    pub cases: u64,
    pub violations: Vec<Violation>,
}

impl Tally {
    pub fn case(&mut self) {
        self.cases += 1;
    }

    pub fn check(&mut self, ok: bool, violation: impl FnOnce() -> Violation) {
        self.cases += 1;
        if !ok {
            self.violations.push(violation());
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.violations.extend(other.violations);
        self
    }

    pub fn into_report(self, check: &str, order: usize) -> CheckReport {
        CheckReport::from_cases(check, order, self.cases, self.violations)
    }
}
