//! The report document and its two renderings.

use chernkit::CheckReport;
use serde::Serialize;
use serde_json::Value;

use crate::{exit, RunConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Invalid,
    Ambiguous,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Pass => exit::PASS,
            Status::Fail => exit::FAIL,
            Status::Invalid => exit::INVALID,
            Status::Ambiguous => exit::AMBIGUOUS,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Invalid => "invalid",
            Status::Ambiguous => "ambiguous",
        }
    }

    /// The more severe of two outcomes: invalid input, then ambiguity,
    /// then failure.
    pub fn worst(self, other: Status) -> Status {
        let rank = |s: Status| match s {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Ambiguous => 2,
            Status::Invalid => 3,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Document {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub config: RunConfig,
    pub status: Status,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub checks: Vec<CheckReport>,
    pub data: Value,
    /// Human-readable body for the text format.
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl Document {
    pub fn new(command: &str, cfg: &RunConfig) -> Self {
        Self {
            tool: "chernkit",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            config: cfg.clone(),
            status: Status::Pass,
            exit_code: exit::PASS,
            error: None,
            checks: Vec::new(),
            data: Value::Object(Default::default()),
            lines: Vec::new(),
        }
    }

    pub fn raise(&mut self, s: Status) {
        self.status = self.status.worst(s);
        self.exit_code = self.status.code();
    }

    pub fn push_checks(&mut self, checks: impl IntoIterator<Item = CheckReport>) {
        for c in checks {
            if !c.pass {
                self.raise(Status::Fail);
            }
            self.checks.push(c);
        }
    }

    pub fn fail_with(&mut self, s: Status, msg: impl Into<String>) {
        let msg = msg.into();
        self.lines.push(format!("error: {msg}"));
        self.error = Some(msg);
        self.raise(s);
    }

    pub fn set(&mut self, key: &str, v: impl Serialize) {
        let v = serde_json::to_value(v).expect("report data serializes");
        if let Value::Object(m) = &mut self.data {
            m.insert(key.to_string(), v);
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("chernkit {} {}\n", self.version, self.command);
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        if !self.checks.is_empty() {
            s.push_str("\nchecks:\n");
        }
        for c in &self.checks {
            s.push_str(&format!("  {} {}: {}", c.status(), c.name, c.statement));
            if c.symbolic_residual != "0" {
                s.push_str(&format!("\n       symbolic residual: {}", c.symbolic_residual));
            }
            if c.numeric_residual != 0.0 {
                s.push_str(&format!("\n       numeric residual: {:.3e}", c.numeric_residual));
            }
            if !c.detail.is_empty() {
                s.push_str(&format!("\n       {}", c.detail));
            }
            s.push('\n');
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        s.push_str(&format!(
            "\n{passed}/{} checks passed; status {} (exit {})\n",
            self.checks.len(),
            self.status.label(),
            self.exit_code
        ));
        s
    }
}
