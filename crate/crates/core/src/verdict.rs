use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Indeterminate => "indeterminate",
            Status::Skipped => "skipped",
        })
    }
}

/// One offending location with what was expected there and what was found.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub location: String,
    pub expected: String,
    pub found: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
}

impl Witness {
    pub fn new(location: impl Into<String>, expected: impl Into<String>, found: impl Into<String>) -> Self {
        Witness { location: location.into(), expected: expected.into(), found: found.into(), details: BTreeMap::new() }
    }

    pub fn detail(mut self, key: &str, value: impl Into<String>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, found {}", self.location, self.expected, self.found)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { status: Status::Pass, witnesses: Vec::new() }
    }

    /// Pass when `witnesses` is empty, otherwise fail carrying them.
    pub fn from_witnesses(witnesses: Vec<Witness>) -> Self {
        let status = if witnesses.is_empty() { Status::Pass } else { Status::Fail };
        Verdict { status, witnesses }
    }

    pub fn fail(w: Witness) -> Self {
        Verdict { status: Status::Fail, witnesses: vec![w] }
    }

    pub fn indeterminate(witnesses: Vec<Witness>) -> Self {
        Verdict { status: Status::Indeterminate, witnesses }
    }

    pub fn skipped(reason: impl Into<String>) -> Self {
        Verdict { status: Status::Skipped, witnesses: vec![Witness::new("prerequisite", "passed", reason)] }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Combines sub-verdicts; any fail wins, then indeterminate.
    pub fn merge(parts: impl IntoIterator<Item = Verdict>) -> Self {
        let mut status = Status::Pass;
        let mut witnesses = Vec::new();
        for p in parts {
            status = match (status, p.status) {
                (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
                (Status::Indeterminate, _) | (_, Status::Indeterminate) => Status::Indeterminate,
                (Status::Skipped, _) | (_, Status::Skipped) => Status::Skipped,
                _ => Status::Pass,
            };
            witnesses.extend(p.witnesses);
        }
        Verdict { status, witnesses }
    }
}
