//! Certificate records and their JSON form.

use serde::{Deserialize, Serialize};

use super::interval::Interval;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Proved,
    Disproved,
    Undecided,
}

/// Outcome of one named inequality check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub check_id: String,
    /// Human-readable statement that was tested.
    pub claim: String,
    /// One interval per coordinate.
    pub domain: Vec<Interval>,
    pub verdict: Verdict,
    /// Violating point, present when `Disproved`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<f64>>,
    /// Box that could not be decided, present when `Undecided`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stuck_box: Option<Vec<Interval>>,
    pub subintervals: u64,
    pub max_depth: u32,
    pub wall_time_s: f64,
    pub compact_box_only: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uncovered_sliver: Option<Interval>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn is_proved(&self) -> bool {
        self.verdict == Verdict::Proved
    }

    /// Merge sub-certificates of a multi-part check into one record.
    ///
    /// The verdict is the first non-`Proved` part in order, or `Proved`.
    pub fn combine(check_id: &str, claim: &str, domain: Vec<Interval>, parts: Vec<Certificate>) -> Certificate {
        let failing = parts.iter().find(|c| c.verdict != Verdict::Proved);
        let mut notes: Vec<String> = Vec::new();
        for p in &parts {
            notes.push(format!("{}: {:?} ({} boxes)", p.claim, p.verdict, p.subintervals));
            notes.extend(p.notes.iter().cloned());
        }
        Certificate {
            check_id: check_id.to_string(),
            claim: claim.to_string(),
            domain,
            verdict: failing.map_or(Verdict::Proved, |c| c.verdict),
            witness: failing.and_then(|c| c.witness.clone()),
            stuck_box: failing.and_then(|c| c.stuck_box.clone()),
            subintervals: parts.iter().map(|c| c.subintervals).sum(),
            max_depth: parts.iter().map(|c| c.max_depth).max().unwrap_or(0),
            wall_time_s: parts.iter().map(|c| c.wall_time_s).sum(),
            compact_box_only: parts.iter().any(|c| c.compact_box_only),
            uncovered_sliver: parts.iter().find_map(|c| c.uncovered_sliver),
            notes,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Certificate> {
        serde_json::from_str(s).map_err(|e| Error::domain(format!("bad certificate JSON: {e}")))
    }

    /// JSON without `wall_time_s`, for reproducibility comparisons.
    pub fn reproducible_json(&self) -> String {
        let mut c = self.clone();
        c.wall_time_s = 0.0;
        c.to_json()
    }
}
