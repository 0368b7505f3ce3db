//! Report model and serialization: one record per check, stable field
//! order, text and JSON emitters.

use serde::{Deserialize, Serialize};
use std::io::Write;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub description: String,
    pub paper_ref: String,
    pub status: Status,
    pub detail: String,
    /// Wall time; reported but excluded from determinism comparisons.
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Default, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Serialize, Deserialize)]
pub struct Report {
    pub case: String,
    pub arith: String,
    pub seed: u64,
    pub trials: u64,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn tally(&mut self) {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        self.summary = s;
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "case {}  arith {}  seed {}  trials {}\n",
            self.case, self.arith, self.seed, self.trials
        ));
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!(
                "{} {:<28} {} [{}] {} ({} ms)\n",
                tag, c.id, c.description, c.paper_ref, c.detail, c.elapsed_ms
            ));
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} skipped\n",
            self.summary.pass, self.summary.fail, self.summary.skipped
        ));
        out
    }

    pub fn emit(&self, format: Format, path: Option<&std::path::Path>) -> std::io::Result<()> {
        let body = match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        };
        match path {
            None => {
                print!("{}", body);
                Ok(())
            }
            Some(p) => {
                let mut f = std::fs::File::create(p)?;
                f.write_all(body.as_bytes())
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Json,
}
