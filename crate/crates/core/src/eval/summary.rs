//! Error, token and aha-moment counts.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::model::{ErrorCode, ProblemId};
use crate::solver::TrialRecord;

/// Rejection counts per (model, level). Solved trials and trials without
/// an outcome are not counted.
pub fn error_histogram(records: &[TrialRecord]) -> BTreeMap<(String, u32), BTreeMap<ErrorCode, u64>> {
    let mut out: BTreeMap<(String, u32), BTreeMap<ErrorCode, u64>> = BTreeMap::new();
    for r in records {
        if let Some(code) = r.outcome.as_ref().and_then(|o| o.error) {
            *out.entry((r.model.clone(), r.level)).or_default().entry(code).or_default() += 1;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct UsageStats {
    pub trials: u64,
    pub prompt_tokens: u64,
    pub completion_tokens: u64,
    pub aha_moments: u64,
    /// Trials whose reply hit the backend's token limit.
    pub length_capped: u64,
}

impl UsageStats {
    pub fn mean_prompt_tokens(&self) -> f64 {
        self.prompt_tokens as f64 / self.trials as f64
    }

    pub fn mean_completion_tokens(&self) -> f64 {
        self.completion_tokens as f64 / self.trials as f64
    }

    pub fn mean_aha(&self) -> f64 {
        self.aha_moments as f64 / self.trials as f64
    }
}

/// Token and aha totals per (model, problem, level).
pub fn usage_summary(records: &[TrialRecord]) -> BTreeMap<(String, ProblemId, u32), UsageStats> {
    let mut out: BTreeMap<(String, ProblemId, u32), UsageStats> = BTreeMap::new();
    for r in records {
        let s = out.entry((r.model.clone(), r.problem, r.level)).or_default();
        s.trials += 1;
        s.prompt_tokens += r.prompt_tokens;
        s.completion_tokens += r.completion_tokens;
        s.aha_moments += r.aha_count;
        s.length_capped += u64::from(r.finish == crate::solver::Finish::LengthCap);
    }
    out
}
