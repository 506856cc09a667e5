//! Verification reports: JSON with a stable key order, and plain text.

use crate::hecke::Relation;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ExpectedFail,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ExpectedFail => "XFAIL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub statement: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>, statement: impl Into<String>, status: Status) -> Check {
        Check { id: id.into(), statement: statement.into(), status, witness: None }
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Check {
        self.witness = Some(w.into());
        self
    }

    /// Pass or fail; the witness is kept only on failure.
    pub fn truth(id: impl Into<String>, statement: impl Into<String>, ok: bool, witness: impl Into<String>) -> Check {
        let c = Check::new(id, statement, if ok { Status::Pass } else { Status::Fail });
        if ok {
            c
        } else {
            c.with_witness(witness)
        }
    }

    /// A passing check that reports a computed value.
    pub fn value(id: impl Into<String>, statement: impl Into<String>, value: impl Into<String>) -> Check {
        Check::new(id, statement, Status::Pass).with_witness(value)
    }

    /// A relation that must hold.
    pub fn relation(r: &Relation) -> Check {
        Check::truth(r.id.clone(), r.statement.clone(), r.holds(), r.residual.to_string())
    }

    /// A relation known to fail. If it holds after all, the check passes
    /// with a note.
    pub fn relation_expected_fail(r: &Relation, why: &str) -> Check {
        let c = Check::new(r.id.clone(), r.statement.clone(), Status::ExpectedFail);
        if r.holds() {
            Check { status: Status::Pass, ..c }.with_witness(format!("holds here, although {why}"))
        } else {
            c.with_witness(format!("{} ({why})", r.residual))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub n: usize,
    pub eps: String,
    pub point: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub symmetrize_b: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub expected_fail: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub parameters: Parameters,
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub version: String,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(suite: impl Into<String>, parameters: Parameters) -> Report {
        Report {
            suite: suite.into(),
            parameters,
            checks: Vec::new(),
            summary: Summary::default(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            timing_ms: 0,
        }
    }

    pub fn push(&mut self, check: Check) {
        debug_assert!(self.checks.iter().all(|c| c.id != check.id), "duplicate id {}", check.id);
        match check.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::ExpectedFail => self.summary.expected_fail += 1,
        }
        self.checks.push(check);
    }

    pub fn extend<I: IntoIterator<Item = Check>>(&mut self, checks: I) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let p = &self.parameters;
        let mut out = String::new();
        let _ = write!(out, "suite {} (n={}, eps={}", self.suite, p.n, p.eps);
        if let Some(pt) = &p.point {
            let _ = write!(out, ", at {pt}");
        }
        if p.symmetrize_b {
            out.push_str(", B symmetrized");
        }
        out.push_str(")\n");
        for c in &self.checks {
            let _ = writeln!(out, "[{:<5}] {}: {}", c.status.label(), c.id, c.statement);
            if let Some(w) = &c.witness {
                for line in w.lines() {
                    let _ = writeln!(out, "        {line}");
                }
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} expected failures ({} ms)",
            s.pass, s.fail, s.expected_fail, self.timing_ms
        );
        out
    }
}
