//! Suite reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// One exact check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub id: String,
    pub params: BTreeMap<String, String>,
    /// The identity being tested, written out.
    pub identity: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Record {
    pub fn new(id: impl Into<String>, identity: impl Into<String>, ok: bool) -> Self {
        Self {
            id: id.into(),
            params: BTreeMap::new(),
            identity: identity.into(),
            verdict: Verdict::from_bool(ok),
            witness: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    /// Attaches a witness, kept only when the check failed.
    pub fn witness(mut self, w: impl FnOnce() -> String) -> Self {
        if self.verdict == Verdict::Fail {
            self.witness = Some(w());
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Machine output never contains timing, so identical runs give identical
/// bytes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub system: String,
    pub max_degree: usize,
    pub seed: u64,
    pub records: Vec<Record>,
    pub passed: usize,
    pub failed: usize,
    pub status: i32,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn new(suite: &str, system: &str, max_degree: usize, seed: u64, mut records: Vec<Record>) -> Self {
        records.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = records.iter().filter(|r| r.passed()).count();
        let failed = records.len() - passed;
        Self {
            suite: suite.into(),
            system: system.into(),
            max_degree,
            seed,
            records,
            passed,
            failed,
            status: i32::from(failed > 0),
            elapsed: Duration::ZERO,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn record(&self, id: &str) -> Option<&Record> {
        self.records.binary_search_by(|r| r.id.as_str().cmp(id)).ok().map(|i| &self.records[i])
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} on {} (N = {}, seed {})", self.suite, self.system, self.max_degree, self.seed);
        for r in &self.records {
            let tag = if r.passed() { "PASS" } else { "FAIL" };
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = write!(out, "{tag} {}", r.id);
            if !params.is_empty() {
                let _ = write!(out, " [{}]", params.join(" "));
            }
            let _ = writeln!(out, "  {}", r.identity);
            if let Some(w) = &r.witness {
                let _ = writeln!(out, "     witness: {w}");
            }
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed in {:.2}s",
            self.passed,
            self.failed,
            self.elapsed.as_secs_f64()
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_counted() {
        let recs = vec![Record::new("b", "x = x", true), Record::new("a", "0 = 1", false).witness(|| "here".into())];
        let rep = SuiteReport::new("t", "s", 3, 0, recs);
        assert_eq!(rep.records[0].id, "a");
        assert_eq!((rep.passed, rep.failed, rep.status), (1, 1, 1));
        assert_eq!(rep.record("a").unwrap().witness.as_deref(), Some("here"));
        assert!(!rep.to_json().contains("elapsed"));
        let ok = Record::new("c", "", true).witness(|| unreachable!());
        assert!(ok.witness.is_none());
    }
}
