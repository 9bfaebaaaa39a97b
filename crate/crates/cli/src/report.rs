//! Suite reports and their serialized forms.

use std::time::Instant;

use anyhow::Result;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Only filled with `--timings`, so default reports stay byte-identical between runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cartan_type: String,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
    /// Cases left out because they cross a truncation boundary.
    pub truncation_loss: u64,
    pub summary: Value,
    #[serde(skip)]
    timings: bool,
}

impl SuiteReport {
    pub fn new(suite: &str, cartan_type: &str, timings: bool) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            cartan_type: cartan_type.to_string(),
            pass: true,
            checks: Vec::new(),
            truncation_loss: 0,
            summary: Value::Null,
            timings,
        }
    }

    pub fn record(&mut self, name: impl Into<String>, pass: bool, witness: Option<Value>) {
        self.checks.push(CheckRecord {
            name: name.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            witness,
            wall_ms: None,
        });
    }

    /// Runs one check and records it with its wall time.
    pub fn timed(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<(bool, Option<Value>)>) -> Result<()> {
        let t = Instant::now();
        let (pass, witness) = f()?;
        self.record(name, pass, witness);
        if self.timings {
            self.checks.last_mut().unwrap().wall_ms = Some(t.elapsed().as_millis());
        }
        Ok(())
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: &str) {
        self.checks.push(CheckRecord {
            name: name.into(),
            status: Status::Skipped,
            witness: Some(Value::String(reason.to_string())),
            wall_ms: None,
        });
    }

    pub fn finish(mut self) -> Self {
        self.pass = self.checks.iter().all(|c| c.status != Status::Fail);
        self
    }
}

/// Pretty JSON with every object's keys sorted.
pub fn to_sorted_json<T: Serialize>(x: &T) -> Result<String> {
    // serde_json's default map is ordered by key
    let v = serde_json::to_value(x)?;
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

pub fn reports_csv(reports: &[SuiteReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["suite", "type", "check", "status", "witness"])?;
    for r in reports {
        for c in &r.checks {
            let status = serde_json::to_value(c.status)?;
            let witness = c.witness.as_ref().map(|v| v.to_string()).unwrap_or_default();
            w.write_record([&r.suite, &r.cartan_type, &c.name, status.as_str().unwrap_or(""), &witness])?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
