//! Report assembly and rendering.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use humbert_core::arith::{Settings, Verdict};

pub const SCHEMA: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub witness: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SettingsEcho {
    pub mode: String,
    pub eps_zero: f64,
    pub eps_match: f64,
    pub seed: u64,
    pub parallel: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub input_digest: String,
    pub settings: SettingsEcho,
    pub checks: Vec<CheckRecord>,
    pub warnings: Vec<String>,
    pub data: Value,
    /// Wall-clock milliseconds; not covered by the determinism contract.
    pub timing_ms: f64,
}

/// Collects checks for one command.
pub struct Builder {
    command: String,
    digest_input: Vec<u8>,
    checks: Vec<CheckRecord>,
    warnings: Vec<String>,
    data: serde_json::Map<String, Value>,
}

impl Builder {
    pub fn new(command: String) -> Self {
        let digest_input = command.clone().into_bytes();
        Builder {
            command,
            digest_input,
            checks: Vec::new(),
            warnings: Vec::new(),
            data: serde_json::Map::new(),
        }
    }

    /// Extra bytes (file contents) covered by the input digest.
    pub fn digest_bytes(&mut self, bytes: &[u8]) {
        self.digest_input.push(0);
        self.digest_input.extend_from_slice(bytes);
    }

    pub fn check(&mut self, name: &str, holds: bool, witness: Value) {
        self.checks.push(CheckRecord {
            name: name.to_string(),
            status: if holds { Status::Pass } else { Status::Fail },
            witness,
        });
    }

    /// Records a verdict and warns when it was decided numerically.
    pub fn verdict(&mut self, name: &str, v: Verdict, witness: Value) {
        if v.numeric {
            self.warn(format!("{name}: decided numerically"));
        }
        self.check(name, v.holds, witness);
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        let msg = msg.into();
        if !self.warnings.contains(&msg) {
            self.warnings.push(msg);
        }
    }

    pub fn data(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report data serializes");
        self.data.insert(key.to_string(), v);
    }

    pub fn finish(mut self, settings: &Settings, seed: u64, timing_ms: f64) -> Report {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        Report {
            schema: SCHEMA,
            command: self.command,
            input_digest: hex::encode(Sha256::digest(&self.digest_input)),
            settings: SettingsEcho {
                mode: settings.mode.to_string(),
                eps_zero: settings.tol.eps_zero,
                eps_match: settings.tol.eps_match,
                seed,
                parallel: settings.parallel,
            },
            checks: self.checks,
            warnings: self.warnings,
            data: Value::Object(self.data),
            timing_ms,
        }
    }
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\ninput digest {}\n\n", self.command, self.input_digest);
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let witness = match &c.witness {
                Value::Null => String::new(),
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{status}  {:width$}  {witness}\n", c.name));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        let failed = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count();
        out.push_str(&format!(
            "\n{} checks, {} failed ({:.1} ms)\n",
            self.checks.len(),
            failed,
            self.timing_ms
        ));
        out
    }
}
