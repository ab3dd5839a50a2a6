//! Pass/fail reports shared by every checker.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The identity involves a degree beyond the truncation.
    OutOfTruncation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub indices: Vec<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, name: impl Into<String>, ok: bool) {
        self.record(name, None, &[], ok);
    }

    pub fn record(&mut self, name: impl Into<String>, degree: Option<usize>, indices: &[usize], ok: bool) {
        self.checks.push(Check {
            name: name.into(),
            degree,
            indices: indices.to_vec(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: None,
        });
    }

    pub fn skip(&mut self, name: impl Into<String>, degree: Option<usize>, indices: &[usize]) {
        self.checks.push(Check {
            name: name.into(),
            degree,
            indices: indices.to_vec(),
            status: Status::OutOfTruncation,
            detail: None,
        });
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}: {}", c.name);
            self.checks.push(c);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    pub fn failure_names(&self) -> Vec<String> {
        self.failures()
            .iter()
            .map(|c| match (c.degree, c.indices.as_slice()) {
                (Some(n), []) => format!("{} (degree {n})", c.name),
                (Some(n), ix) => format!("{} (degree {n}, i={ix:?})", c.name),
                _ => c.name.clone(),
            })
            .collect()
    }

    /// Whether a check with exactly this name exists and failed.
    pub fn failed(&self, name: &str) -> bool {
        self.checks.iter().any(|c| c.name == name && !c.passed())
    }

    pub fn count(&self) -> usize {
        self.checks.len()
    }
}
