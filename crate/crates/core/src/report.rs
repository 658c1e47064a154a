//! Named verification outcomes shared by the engines and the CLI.

use serde::{Deserialize, Serialize};

/// Longest residual string kept verbatim in a report.
const MAX_RESIDUAL_CHARS: usize = 600;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    /// The statement being reproduced, in words.
    pub statement: String,
    pub pass: bool,
    /// Canonical form of the symbolic difference; `"0"` when it vanishes.
    pub symbolic_residual: String,
    /// Largest numeric deviation observed (0 when no numeric check ran).
    pub numeric_residual: f64,
    pub seeds: Vec<u64>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, statement: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            statement: statement.into(),
            pass: true,
            symbolic_residual: "0".into(),
            numeric_residual: 0.0,
            seeds: Vec::new(),
            detail: String::new(),
        }
    }

    /// Records a symbolic residual; any nonzero residual fails the check.
    pub fn symbolic(mut self, residual: impl ToString, is_zero: bool) -> Self {
        let s = residual.to_string();
        self.symbolic_residual = truncate(&s);
        self.pass &= is_zero;
        self
    }

    /// Records a numeric residual against a tolerance.
    pub fn numeric(mut self, residual: f64, tol: f64) -> Self {
        self.numeric_residual = if residual.is_finite() { residual } else { f64::MAX };
        self.pass &= residual.is_finite() && residual <= tol;
        self
    }

    pub fn seeds(mut self, seeds: impl IntoIterator<Item = u64>) -> Self {
        self.seeds = seeds.into_iter().collect();
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = d.into();
        self
    }

    pub fn require(mut self, ok: bool) -> Self {
        self.pass &= ok;
        self
    }

    pub fn status(&self) -> &'static str {
        if self.pass {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

fn truncate(s: &str) -> String {
    if s.chars().count() <= MAX_RESIDUAL_CHARS {
        return s.to_string();
    }
    let head: String = s.chars().take(MAX_RESIDUAL_CHARS).collect();
    format!("{head} … ({} chars total)", s.chars().count())
}

pub fn all_pass(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.pass)
}
