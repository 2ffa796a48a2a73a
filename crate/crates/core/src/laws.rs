//! Law reports shared by every checker.

use std::fmt;

use serde::Serialize;

/// The outcome of checking one law over some number of instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawEntry {
    pub law: String,
    pub instances: usize,
    pub failure: Option<String>,
}

/// A list of law outcomes. A report passes when no entry has a failure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub entries: Vec<LawEntry>,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.failure.is_none())
    }

    pub fn first_failure(&self) -> Option<(&str, &str)> {
        self.entries
            .iter()
            .find_map(|e| e.failure.as_deref().map(|f| (e.law.as_str(), f)))
    }

    pub fn entry(&self, law: &str) -> Option<&LawEntry> {
        self.entries.iter().find(|e| e.law == law)
    }

    fn slot(&mut self, law: &str) -> &mut LawEntry {
        if let Some(i) = self.entries.iter().position(|e| e.law == law) {
            &mut self.entries[i]
        } else {
            self.entries.push(LawEntry {
                law: law.to_string(),
                instances: 0,
                failure: None,
            });
            self.entries.last_mut().unwrap()
        }
    }

    /// Records that `law` was checked on one more instance. The first failing
    /// witness is kept.
    pub fn record(&mut self, law: &str, ok: bool, witness: impl FnOnce() -> String) {
        let e = self.slot(law);
        e.instances += 1;
        if !ok && e.failure.is_none() {
            e.failure = Some(witness());
        }
    }

    /// Makes sure `law` has an entry even when no instance was checked.
    pub fn touch(&mut self, law: &str) {
        self.slot(law);
    }

    pub fn merge(&mut self, other: LawReport) {
        for o in other.entries {
            let e = self.slot(&o.law);
            e.instances += o.instances;
            if e.failure.is_none() {
                e.failure = o.failure;
            }
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match &e.failure {
                None => writeln!(f, "PASS {} ({} instances)", e.law, e.instances)?,
                Some(w) => writeln!(f, "FAIL {} ({} instances): {w}", e.law, e.instances)?,
            }
        }
        Ok(())
    }
}

/// The verdict on one named check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// A principle was shown false by a witness.
    Refuted,
    /// A principle was shown true on the model at hand.
    Holds,
    /// Nothing failed, but nothing was checked either.
    Warn,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Refuted => "REFUTED",
            Status::Holds => "HOLDS",
            Status::Warn => "WARN",
        })
    }
}

/// A verdict with its witnesses and counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub id: String,
    pub status: Status,
    pub witness: std::collections::BTreeMap<String, String>,
    pub counts: std::collections::BTreeMap<String, u64>,
    pub note: Option<String>,
}

impl Finding {
    pub fn new(id: &str, status: Status) -> Finding {
        Finding {
            id: id.to_string(),
            status,
            witness: Default::default(),
            counts: Default::default(),
            note: None,
        }
    }

    pub fn with_witness(mut self, key: &str, value: impl ToString) -> Finding {
        self.witness.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_count(mut self, key: &str, n: usize) -> Finding {
        self.counts.insert(key.to_string(), n as u64);
        self
    }

    pub fn with_note(mut self, note: &str) -> Finding {
        self.note = Some(note.to_string());
        self
    }
}
