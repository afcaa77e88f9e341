//! Per-row run reports and their line-oriented machine format.
//!
//! A report line is stable for a given input up to the `elapsed_ms` field,
//! so reports can be diffed across runs and thread counts.

use std::fmt;

use frankl_core::SearchStats;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowVerdict {
    Certified,
    NotCertified,
    Error,
}

impl fmt::Display for RowVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RowVerdict::Certified => "certified",
            RowVerdict::NotCertified => "not-certified",
            RowVerdict::Error => "error",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub label: String,
    pub verdict: RowVerdict,
    /// Extension with negative share, present on not-certified rows.
    pub witness: Option<Vec<Vec<u32>>>,
    pub error: Option<String>,
    pub elapsed_ms: u128,
    pub stats: SearchStats,
}

impl RunReport {
    pub fn machine_line(&self) -> String {
        let mut line = format!(
            "label={} verdict={} elapsed_ms={} nodes={} prunes_bound={} prunes_member={}",
            self.label,
            self.verdict,
            self.elapsed_ms,
            self.stats.nodes,
            self.stats.prunes_bound,
            self.stats.prunes_member
        );
        if let Some(witness) = &self.witness {
            line.push_str(" witness=");
            line.push_str(&serde_json::to_string(witness).expect("witness serializes"));
        }
        if let Some(error) = &self.error {
            line.push_str(&format!(" error={error:?}"));
        }
        line
    }

    /// The line with the timing field blanked, for byte-level comparisons.
    pub fn stable_line(&self) -> String {
        let mut stable = self.clone();
        stable.elapsed_ms = 0;
        stable.machine_line()
    }
}
