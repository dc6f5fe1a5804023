//! Degreewise comparison reports shared by the verifiers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::homology::HomologyResult;
use crate::linalg::RingSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeComparison {
    pub label: String,
    pub degree: usize,
    pub left: String,
    pub right: String,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub title: String,
    pub ring: RingSpec,
    pub comparisons: Vec<DegreeComparison>,
    pub identities: Vec<IdentityCheck>,
    pub notes: Vec<String>,
}

pub type KunnethReport = ComparisonReport;

impl ComparisonReport {
    pub fn new(title: impl Into<String>, ring: RingSpec) -> Self {
        ComparisonReport { title: title.into(), ring, comparisons: Vec::new(), identities: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.comparisons.iter().all(|c| c.equal) && self.identities.iter().all(|i| i.holds)
    }

    pub fn mismatches(&self) -> Vec<&DegreeComparison> {
        self.comparisons.iter().filter(|c| !c.equal).collect()
    }

    pub fn failed_identities(&self) -> Vec<&IdentityCheck> {
        self.identities.iter().filter(|c| !c.holds).collect()
    }

    pub fn compare(&mut self, label: &str, degree: usize, left: String, right: String) {
        let equal = left == right;
        self.comparisons.push(DegreeComparison { label: label.to_string(), degree, left, right, equal });
    }

    /// Compares two results in degrees `0..degrees` as displayed groups.
    pub fn compare_results(&mut self, label: &str, left: &HomologyResult, right: &HomologyResult, degrees: usize) {
        for n in 0..degrees {
            let l = left.group(n);
            let r = right.group(n);
            let equal = l == r;
            self.comparisons.push(DegreeComparison {
                label: label.to_string(),
                degree: n,
                left: l.display_over(left.ring),
                right: r.display_over(right.ring),
                equal,
            });
        }
    }

    pub fn identity(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.identities.push(IdentityCheck { name: name.into(), holds, detail: detail.into() });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn merge(&mut self, other: ComparisonReport) {
        self.comparisons.extend(other.comparisons);
        self.identities.extend(other.identities);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} over {}: {}", self.title, self.ring.symbol(), if self.passed() { "agree" } else { "MISMATCH" })?;
        for c in &self.comparisons {
            let mark = if c.equal { "ok " } else { "ERR" };
            writeln!(f, "  [{mark}] {} deg {}: {} | {}", c.label, c.degree, c.left, c.right)?;
        }
        for i in &self.identities {
            let mark = if i.holds { "ok " } else { "ERR" };
            writeln!(f, "  [{mark}] {}: {}", i.name, i.detail)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
