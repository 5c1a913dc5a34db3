//! Validation checks and reports.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    /// Passes when `residual <= threshold`.
    AtMost,
    /// Passes when `residual > threshold`.
    Above,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// Non-finite residuals serialize as `null`.
    pub residual: f64,
    pub threshold: f64,
    pub comparison: Comparison,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl Check {
    pub fn at_most(name: impl Into<String>, residual: f64, threshold: f64) -> Self {
        Check {
            name: name.into(),
            residual,
            threshold,
            comparison: Comparison::AtMost,
            passed: residual <= threshold,
            message: None,
        }
    }

    pub fn above(name: impl Into<String>, residual: f64, threshold: f64) -> Self {
        Check {
            name: name.into(),
            residual,
            threshold,
            comparison: Comparison::Above,
            passed: residual > threshold,
            message: None,
        }
    }

    /// A check that failed outright, e.g. because construction errored.
    pub fn failed(name: impl Into<String>, message: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            residual: f64::INFINITY,
            threshold: 0.0,
            comparison: Comparison::AtMost,
            passed: false,
            message: Some(message.into()),
        }
    }

    pub fn with_message(mut self, message: impl Into<String>) -> Self {
        self.message = Some(message.into());
        self
    }
}

/// An ordered list of checks; passes iff every check passes.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Appends `other`'s checks with `prefix.` prepended to their names.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.comparison {
            Comparison::AtMost => "<=",
            Comparison::Above => ">",
        };
        let status = if self.passed { "PASS" } else { "FAIL" };
        if let (Some(m), false) = (&self.message, self.residual.is_finite()) {
            return write!(f, "{status} {}: {m}", self.name);
        }
        write!(
            f,
            "{status} {}: {:e} {op} {:e}",
            self.name, self.residual, self.threshold
        )?;
        if let Some(m) = &self.message {
            write!(f, " ({m})")?;
        }
        Ok(())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}
