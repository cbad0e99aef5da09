//! Report assembly and rendering. Every check carries the measured residual
//! and the tolerance it was compared against; reports render as plain text or
//! JSON and are deterministic apart from the wall-clock field.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResultEntry {
    pub name: String,
    pub value: serde_json::Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub residual: f64,
    pub tolerance: f64,
}

impl CheckResult {
    pub fn from_residual(name: &str, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            passed: residual <= tolerance,
            residual,
            tolerance,
        }
    }

    pub fn from_flag(name: &str, passed: bool, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            passed,
            residual: if passed { 0.0 } else { 1.0 },
            tolerance,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub results: Vec<ResultEntry>,
    pub checks: Vec<CheckResult>,
    pub wall_ms: u128,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs: Vec::new(),
            results: Vec::new(),
            checks: Vec::new(),
            wall_ms: 0,
        }
    }

    pub fn push_input(&mut self, path: &str, bytes: &[u8]) {
        use sha2::{Digest, Sha256};
        let digest = Sha256::digest(bytes);
        self.inputs.push(InputDigest {
            path: path.to_string(),
            sha256: format!("{digest:x}"),
        });
    }

    pub fn push_result(&mut self, name: &str, value: serde_json::Value) {
        self.results.push(ResultEntry { name: name.to_string(), value });
    }

    pub fn push_check(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.render_text(),
            OutputFormat::Json => {
                let mut text = serde_json::to_string_pretty(self).expect("report serializes");
                text.push('\n');
                text
            }
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command {}\n", self.command));
        for input in &self.inputs {
            out.push_str(&format!("input {} sha256 {}\n", input.path, input.sha256));
        }
        for entry in &self.results {
            out.push_str(&format!("{} {}\n", entry.name, value_text(&entry.value)));
        }
        for check in &self.checks {
            let status = if check.passed { "pass" } else { "FAIL" };
            out.push_str(&format!(
                "check {}: {} residual {:.3e} tol {:.3e}\n",
                check.name, status, check.residual, check.tolerance
            ));
        }
        out.push_str(&format!("wall_ms {}\n", self.wall_ms));
        out
    }
}

fn value_text(value: &serde_json::Value) -> String {
    match value {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Array(items) => items
            .iter()
            .map(value_text)
            .collect::<Vec<_>>()
            .join(" "),
        serde_json::Value::Number(n) => match n.as_f64() {
            Some(x) if x.fract() != 0.0 || x.abs() >= 1e15 => format!("{}", round_sig(x)),
            _ => n.to_string(),
        },
        other => other.to_string(),
    }
}

/// Rounds to 12 significant digits; text reports display values at the
/// precision the checks actually guarantee, JSON keeps the raw numbers.
fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let mag = x.abs().log10().floor();
    let scale = 10f64.powf(11.0 - mag);
    (x * scale).round() / scale
}

pub fn number(value: f64) -> serde_json::Value {
    serde_json::json!(value)
}
