//! Uniform result record for the command line.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Witness lists are cut to this length in reports.
pub const MAX_WITNESSES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), passed, witnesses: Vec::new(), residual: None }
    }

    /// Passes iff `witnesses` is empty; keeps the first few.
    pub fn from_witnesses(name: impl Into<String>, witnesses: Vec<String>) -> Self {
        let passed = witnesses.is_empty();
        Check { name: name.into(), passed, witnesses: witnesses.into_iter().take(MAX_WITNESSES).collect(), residual: None }
    }

    /// Passes iff `residual < tol`. Non-finite residuals fail.
    pub fn residual(name: impl Into<String>, residual: f64, tol: f64) -> Self {
        Check { name: name.into(), passed: residual.is_finite() && residual < tol, witnesses: Vec::new(), residual: Some(residual) }
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witnesses.push(w.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    /// Facts computed along the way, in insertion order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub info: Vec<(String, String)>,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), info: Vec::new(), checks: Vec::new(), verdict: Verdict::Pass }
    }

    pub fn info(&mut self, key: impl Into<String>, value: impl fmt::Display) -> &mut Self {
        self.info.push((key.into(), value.to_string()));
        self
    }

    pub fn push(&mut self, check: Check) -> &mut Self {
        if !check.passed {
            self.verdict = Verdict::Fail;
        }
        self.checks.push(check);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn info_value(&self, key: &str) -> Option<&str> {
        self.info.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        crate::io::parse(text)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for (k, v) in &self.info {
            writeln!(f, "  {k}: {v}")?;
        }
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name)?;
            if let Some(r) = c.residual {
                write!(f, "  (residual {r:.3e})")?;
            }
            writeln!(f)?;
            for w in &c.witnesses {
                writeln!(f, "      witness {w}")?;
            }
        }
        write!(f, "verdict: {}", if self.passed() { "pass" } else { "fail" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_tracks_checks() {
        let mut r = Report::new("x");
        r.push(Check::new("a", true));
        assert!(r.passed());
        r.push(Check::from_witnesses("b", vec!["(0, 1, 2)".into()]));
        assert!(!r.passed());
        assert!(!Check::residual("nan", f64::NAN, 1.0).passed);
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("order6-standard");
        r.info("|E|", 3).info("|J|", 2);
        r.push(Check::residual("phi", 1.234_567_890_123e-9, 1e-6));
        r.push(Check::from_witnesses("G2", (0..9).map(|i| format!("({i}, 0, 1)")).collect()));
        assert_eq!(r.checks[1].witnesses.len(), MAX_WITNESSES);
        let back = Report::from_json(&r.to_json().unwrap()).unwrap();
        assert_eq!(back, r);
        assert!(r.to_string().ends_with("verdict: fail"));
    }
}
