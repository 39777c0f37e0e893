//! Trial records and the JSON-lines trial log.

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::backend::{BackendReply, Finish};
use crate::error::Result;
use crate::model::{Instance, ProblemId, Solution, VerifyOutcome};

/// Everything observed for one trial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub model: String,
    pub problem: ProblemId,
    pub level: u32,
    /// Experiment seed (one of the configured seeds), not the instance seed.
    pub seed: u64,
    pub trial_index: u32,
    pub instance: Instance,
    pub planted: Solution,
    pub prompt: String,
    /// Summed over all attempts.
    pub prompt_tokens: u64,
    pub completion_tokens: u64,
    pub raw_response: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reasoning_text: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extracted: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extract_error: Option<String>,
    /// Absent only when every attempt failed in transport.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outcome: Option<VerifyOutcome>,
    pub attempts: u32,
    pub aha_count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub backend_error: Option<String>,
    pub finish: Finish,
}

/// Identity of a trial within a run, used for resuming.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TrialKey {
    pub problem: ProblemId,
    pub level: u32,
    pub seed: u64,
    pub trial_index: u32,
}

impl TrialRecord {
    pub fn key(&self) -> TrialKey {
        TrialKey { problem: self.problem, level: self.level, seed: self.seed, trial_index: self.trial_index }
    }

    pub fn ok(&self) -> bool {
        self.outcome.as_ref().is_some_and(|o| o.ok)
    }

    /// The final reply as the backend produced it.
    pub fn reply(&self) -> BackendReply {
        BackendReply {
            text: self.raw_response.clone(),
            reasoning_text: self.reasoning_text.clone(),
            prompt_tokens: self.prompt_tokens,
            completion_tokens: self.completion_tokens,
            finish: self.finish,
        }
    }

    /// One log line: compact JSON with sorted keys, no trailing newline.
    pub fn to_log_line(&self) -> Result<String> {
        Ok(serde_json::to_string(&serde_json::to_value(self)?)?)
    }
}

/// Appends records to a log file, creating it if needed.
pub fn append_log(path: &Path, records: &[TrialRecord]) -> Result<()> {
    let file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut out = BufWriter::new(file);
    for r in records {
        writeln!(out, "{}", r.to_log_line()?)?;
    }
    out.flush()?;
    Ok(())
}

#[derive(Debug, Clone, Default)]
pub struct LogContents {
    pub records: Vec<TrialRecord>,
    /// (1-based line number, parse error) for lines that were skipped.
    pub malformed: Vec<(usize, String)>,
}

impl LogContents {
    pub fn keys(&self) -> HashSet<TrialKey> {
        self.records.iter().map(TrialRecord::key).collect()
    }
}

/// Reads a log, skipping blank lines and collecting malformed ones.
pub fn read_log(path: &Path) -> Result<LogContents> {
    let mut contents = LogContents::default();
    for (i, line) in BufReader::new(File::open(path)?).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str(&line) {
            Ok(r) => contents.records.push(r),
            Err(e) => contents.malformed.push((i + 1, e.to_string())),
        }
    }
    Ok(contents)
}
