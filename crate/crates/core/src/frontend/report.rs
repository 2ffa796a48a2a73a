//! Check records and their text and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::laws::{Finding, LawReport, Status};

pub const REPORT_VERSION: u32 = 1;

/// One line of a report. Field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, String>>,
    pub counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<u64>,
    #[serde(skip)]
    pub note: Option<String>,
}

impl Check {
    pub fn from_finding(prefix: &str, f: Finding) -> Check {
        Check {
            id: format!("{prefix}/{}", f.id),
            status: f.status,
            witness: (!f.witness.is_empty()).then_some(f.witness),
            counts: f.counts,
            ms: None,
            note: f.note,
        }
    }

    /// One check per law: FAIL with the first witness, WARN when nothing was
    /// checked, PASS otherwise.
    pub fn from_laws(prefix: &str, r: &LawReport) -> Vec<Check> {
        r.entries
            .iter()
            .map(|e| {
                let status = match (&e.failure, e.instances) {
                    (Some(_), _) => Status::Fail,
                    (None, 0) => Status::Warn,
                    (None, _) => Status::Pass,
                };
                Check {
                    id: format!("{prefix}/{}", e.law),
                    status,
                    witness: e
                        .failure
                        .as_ref()
                        .map(|w| BTreeMap::from([("failure".to_string(), w.clone())])),
                    counts: BTreeMap::from([("instances".to_string(), e.instances as u64)]),
                    ms: None,
                    note: (e.instances == 0).then(|| "vacuous: no instances".to_string()),
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: u32,
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str, seed: u64) -> Report {
        Report {
            version: REPORT_VERSION,
            suite: suite.to_string(),
            seed,
            checks: Vec::new(),
        }
    }

    pub fn has_failure(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite {} (seed {})", self.suite, self.seed);
        for c in &self.checks {
            let counts: Vec<String> = c.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = write!(s, "{:<8} {}  [{}]", c.status.to_string(), c.id, counts.join(", "));
            if let Some(ms) = c.ms {
                let _ = write!(s, " {ms}ms");
            }
            let _ = writeln!(s);
            for (k, v) in c.witness.iter().flatten() {
                let _ = writeln!(s, "         {k}: {v}");
            }
            if let Some(n) = &c.note {
                let _ = writeln!(s, "         note: {n}");
            }
        }
        let fails = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        let _ = writeln!(s, "{} checks, {fails} failed", self.checks.len());
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_field_order_and_optional_fields() {
        let mut r = LawReport::new();
        r.touch("unit");
        let mut rep = Report::new("cwf", 7);
        rep.checks = Check::from_laws("cwf", &r);
        let j = rep.to_json();
        let order: Vec<usize> = ["\"version\"", "\"suite\"", "\"seed\"", "\"checks\""]
            .iter()
            .map(|k| j.find(k).unwrap())
            .collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]));
        assert!(j.contains("\"WARN\""));
        assert!(!j.contains("\"ms\"") && !j.contains("\"witness\""));
    }
}
