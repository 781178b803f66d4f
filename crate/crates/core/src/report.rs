//! Check records, summaries and the JSON report.

use std::time::Instant;

use serde::Serialize;

use crate::pairing::{EqMode, Verdict};
use crate::uea::Side;

/// Degree bounds and equality mode shared by all suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub dmax: u32,
    pub rmax: u32,
    pub mode: EqMode,
    pub timing: bool,
}

impl Bounds {
    pub fn new(dmax: u32, rmax: u32, mode: EqMode) -> Self {
        Bounds { dmax, rmax, mode, timing: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessPair {
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub code: String,
    pub instance: String,
    pub status: Status,
    pub witness: Option<WitnessPair>,
    pub ms: f64,
}

/// Result of one check before timing and labelling.
#[derive(Clone, Debug)]
pub enum Outcome {
    Pass,
    Fail { lhs: String, rhs: String, detail: String },
    Inconclusive(String),
}

impl Outcome {
    pub fn fail(lhs: impl ToString, rhs: impl ToString) -> Self {
        Outcome::Fail { lhs: lhs.to_string(), rhs: rhs.to_string(), detail: String::new() }
    }

    /// Exact comparison of values with a canonical form.
    pub fn compare<T: PartialEq + std::fmt::Display>(lhs: &T, rhs: &T) -> Self {
        if lhs == rhs {
            Outcome::Pass
        } else {
            Outcome::fail(lhs, rhs)
        }
    }

    /// Turns a semantic verdict into an outcome; the printers run only on failure.
    pub fn from_verdict(v: Verdict, side: Side, lhs: impl FnOnce() -> String, rhs: impl FnOnce() -> String) -> Self {
        match v {
            Verdict::Equal => Outcome::Pass,
            Verdict::Unequal(w) => Outcome::Fail { lhs: lhs(), rhs: rhs(), detail: w.render(side) },
            Verdict::Inconclusive(r) => Outcome::Inconclusive(r),
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }

    /// First non-passing outcome, or pass.
    pub fn all(items: impl IntoIterator<Item = Outcome>) -> Outcome {
        let mut pending = None;
        for o in items {
            match o {
                Outcome::Pass => {}
                f @ Outcome::Fail { .. } => return f,
                i @ Outcome::Inconclusive(_) => pending = pending.or(Some(i)),
            }
        }
        pending.unwrap_or(Outcome::Pass)
    }
}

/// Collects records for one suite.
#[derive(Debug)]
pub struct Recorder {
    suite: String,
    timing: bool,
    records: Vec<CheckRecord>,
}

impl Recorder {
    pub fn new(suite: &str, timing: bool) -> Self {
        Recorder { suite: suite.to_string(), timing, records: Vec::new() }
    }

    pub fn check(&mut self, code: &str, instance: impl Into<String>, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        let ms = if self.timing { start.elapsed().as_secs_f64() * 1e3 } else { 0.0 };
        self.push(code, instance.into(), outcome, ms);
    }

    pub fn push(&mut self, code: &str, mut instance: String, outcome: Outcome, ms: f64) {
        let (status, witness) = match outcome {
            Outcome::Pass => (Status::Pass, None),
            Outcome::Fail { lhs, rhs, detail } => {
                if !detail.is_empty() {
                    instance = format!("{instance}; {detail}");
                }
                (Status::Fail, Some(WitnessPair { lhs, rhs }))
            }
            Outcome::Inconclusive(reason) => {
                instance = format!("{instance}; {reason}");
                (Status::Inconclusive, None)
            }
        };
        self.records.push(CheckRecord {
            suite: self.suite.clone(),
            code: code.to_string(),
            instance,
            status,
            witness,
            ms,
        });
    }

    pub fn finish(self) -> Vec<CheckRecord> {
        self.records
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

impl Summary {
    pub fn tally(checks: &[CheckRecord]) -> Self {
        let mut s = Summary::default();
        for c in checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Inconclusive => s.inconclusive += 1,
            }
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub tool: String,
    pub version: String,
    pub algebra: String,
    pub dim: usize,
    pub suites: Vec<String>,
    pub dmax: u32,
    pub rmax: u32,
    pub mode: String,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub meta: Meta,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    /// Sorts records by (suite, code, instance) and tallies them.
    pub fn new(meta: Meta, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| (&a.suite, &a.code, &a.instance).cmp(&(&b.suite, &b.code, &b.instance)));
        let summary = Summary::tally(&checks);
        Report { meta, checks, summary }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// 0 all pass, 1 any fail, 2 only inconclusive beyond passes.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else if self.summary.inconclusive > 0 {
            2
        } else {
            0
        }
    }

    /// Per-code tallies plus every non-passing record with its witness.
    pub fn human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "algebra {} (dim {}), dmax={}, rmax={}, mode={}\n",
            self.meta.algebra, self.meta.dim, self.meta.dmax, self.meta.rmax, self.meta.mode
        ));
        let mut groups: Vec<(String, String, Summary)> = Vec::new();
        for c in &self.checks {
            if groups.last().is_none_or(|g| g.0 != c.suite || g.1 != c.code) {
                groups.push((c.suite.clone(), c.code.clone(), Summary::default()));
            }
            let s = &mut groups.last_mut().expect("group").2;
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Inconclusive => s.inconclusive += 1,
            }
        }
        for (suite, code, s) in &groups {
            let tag = if s.fail > 0 {
                "FAIL"
            } else if s.inconclusive > 0 {
                "INCONCLUSIVE"
            } else {
                "ok"
            };
            let code = format!("({code})");
            out.push_str(&format!(
                "  {suite:<10} {code:<14} {tag:<12} {} pass, {} fail, {} inconclusive\n",
                s.pass, s.fail, s.inconclusive
            ));
        }
        for c in self.checks.iter().filter(|c| c.status != Status::Pass) {
            let status = if c.status == Status::Fail { "fail" } else { "inconclusive" };
            out.push_str(&format!("{status} {} ({}): {}\n", c.suite, c.code, c.instance));
            if let Some(w) = &c.witness {
                out.push_str(&format!("    lhs: {}\n    rhs: {}\n", w.lhs, w.rhs));
            }
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} inconclusive\n",
            self.summary.pass, self.summary.fail, self.summary.inconclusive
        ));
        out
    }
}
