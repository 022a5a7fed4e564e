//! Check records shared by all verifiers.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one named check over some number of instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub check: String,
    pub status: Status,
    pub instances: usize,
    pub violations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

/// Accumulates instances of a single check; keeps the first failure.
pub struct Check {
    suite: String,
    check: String,
    instances: usize,
    violations: usize,
    witness: Option<String>,
}

impl Check {
    pub fn new(suite: &str, check: &str) -> Self {
        Check { suite: suite.to_string(), check: check.to_string(), instances: 0, violations: 0, witness: None }
    }

    /// Records one instance; `witness` is only evaluated on failure.
    pub fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.instances += 1;
        if !ok {
            self.violations += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
        ok
    }

    pub fn fail(&mut self, witness: impl Into<String>) {
        let w = witness.into();
        self.case(false, || w);
    }

    pub fn renamed(mut self, check: &str) -> Self {
        self.check = check.to_string();
        self
    }

    pub fn violations(&self) -> usize {
        self.violations
    }

    pub fn finish(self) -> CheckRecord {
        CheckRecord {
            status: if self.violations == 0 { Status::Pass } else { Status::Fail },
            suite: self.suite,
            check: self.check,
            instances: self.instances,
            violations: self.violations,
            witness: self.witness,
        }
    }
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, c: Check) {
        self.records.push(c.finish());
    }

    pub fn single(&mut self, suite: &str, check: &str, ok: bool, witness: impl FnOnce() -> String) {
        let mut c = Check::new(suite, check);
        c.case(ok, witness);
        self.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn get(&self, check: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.check == check)
    }

    /// True if the named check exists and failed.
    pub fn failed(&self, check: &str) -> bool {
        self.get(check).is_some_and(|r| r.status == Status::Fail)
    }

    /// Prepends `prefix` to every check name.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for r in &mut self.records {
            r.check = format!("{prefix}{}", r.check);
        }
        self
    }

    pub fn with_suite(mut self, suite: &str) -> Self {
        for r in &mut self.records {
            r.suite = suite.to_string();
        }
        self
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in &self.records {
            let status = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            write!(f, "{status} {}/{} ({} cases)", r.suite, r.check, r.instances)?;
            if let Some(w) = &r.witness {
                write!(f, " violations={} witness: {w}", r.violations)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_first_witness() {
        let mut c = Check::new("s", "c");
        c.case(true, || unreachable!());
        c.case(false, || "first".into());
        c.case(false, || "second".into());
        let r = c.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.violations, 2);
        assert_eq!(r.instances, 3);
        assert_eq!(r.witness.as_deref(), Some("first"));
    }
}
