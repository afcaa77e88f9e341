//! Candidate records: one JSON object per line with a `family` of element
//! lists, a positional `weights` vector, and an optional `label`.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::fs;
use std::path::Path;

use frankl_core::{Error as CoreError, Family, WeightFn};

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct CandidateRecord {
    pub family: Vec<Vec<u32>>,
    pub weights: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl CandidateRecord {
    pub fn parse_line(line: &str) -> Result<Self, String> {
        serde_json::from_str(line).map_err(|e| e.to_string())
    }

    /// Reads a record file: one JSON record per non-empty line, `#` lines
    /// are comments.
    pub fn parse_file(path: &Path) -> Result<Vec<CandidateRecord>, ParseError> {
        let text = fs::read_to_string(path).map_err(|e| ParseError {
            line: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        let mut records = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let record = CandidateRecord::parse_line(line).map_err(|message| ParseError {
                line: i + 1,
                message,
            })?;
            records.push(record);
        }
        Ok(records)
    }

    /// Label to report under: the explicit one, or a 1-based position.
    pub fn display_label(&self, index: usize) -> String {
        self.label
            .clone()
            .unwrap_or_else(|| format!("record{:02}", index + 1))
    }

    /// Builds the core inputs, checking that the weight vector covers every
    /// element the family mentions.
    pub fn to_inputs(&self) -> Result<(Family, WeightFn), CoreError> {
        let family = Family::from_sets(&self.family)?;
        let max_element = self.family.iter().flatten().max().copied();
        if let Some(e) = max_element {
            if self.weights.len() <= e as usize {
                return Err(CoreError::InvalidWeight(format!(
                    "weight vector has {} entries but the family mentions element {e}",
                    self.weights.len()
                )));
            }
        }
        let weights = WeightFn::new(self.weights.clone())?;
        Ok((family, weights))
    }
}
