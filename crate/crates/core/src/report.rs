//! Verification reports shared by all suites.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// The identity being checked, in words.
    pub anchor: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Record one case; keeps at most a handful of counterexamples.
    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            if self.failures.len() < 5 {
                self.failures.push(detail());
            } else if self.failures.len() == 5 {
                self.failures.push("...".into());
            }
        }
    }

    pub fn fail(&mut self, detail: impl Into<String>) {
        self.cases += 1;
        self.failures.push(detail.into());
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn merge(&mut self, o: Report) {
        self.checks.extend(o.checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let s = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{s} {}/{} [{}] ({} cases)",
                self.suite, c.name, c.anchor, c.cases
            )?;
            for d in &c.failures {
                writeln!(f, "    {d}")?;
            }
        }
        Ok(())
    }
}
