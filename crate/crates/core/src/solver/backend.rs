//! The backend contract and the offline backends.

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::prompt::parse_prompt;
use super::record::{read_log, TrialRecord};
use crate::error::Result;
use crate::gym::random_candidate;
use crate::model::{seed, Solution};
use crate::oracle::{solve_exact, OracleBudget, OracleResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Finish {
    Complete,
    /// Cut off at the backend's output token limit.
    LengthCap,
    TransportError,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BackendReply {
    pub text: String,
    /// Separate reasoning channel, for backends that expose one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reasoning_text: Option<String>,
    pub prompt_tokens: u64,
    pub completion_tokens: u64,
    pub finish: Finish,
}

impl BackendReply {
    pub fn complete(text: impl Into<String>, prompt_tokens: u64, completion_tokens: u64) -> Self {
        BackendReply {
            text: text.into(),
            reasoning_text: None,
            prompt_tokens,
            completion_tokens,
            finish: Finish::Complete,
        }
    }

    /// A failed call; `message` describes the failure.
    pub fn transport_error(message: impl Into<String>) -> Self {
        BackendReply {
            text: message.into(),
            reasoning_text: None,
            prompt_tokens: 0,
            completion_tokens: 0,
            finish: Finish::TransportError,
        }
    }
}

/// Sampling parameters passed through to the backend. `None` leaves the
/// backend's own default in place.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Sampling {
    pub temperature: Option<f64>,
    pub top_p: Option<f64>,
    pub max_tokens: Option<u32>,
}

impl Sampling {
    /// Settings used for locally served models.
    pub fn self_hosted() -> Self {
        Sampling { temperature: Some(0.6), top_p: Some(0.95), max_tokens: Some(7500) }
    }
}

/// Anything that turns a prompt into a reply. Calls may be slow and may
/// fail; failures come back as [`Finish::TransportError`] replies.
pub trait Backend: Send + Sync {
    /// Label recorded as the model name in trial logs.
    fn name(&self) -> &str;

    fn complete(&self, prompt: &str, sampling: &Sampling) -> BackendReply;

    /// Upper bound on concurrent `complete` calls, if the backend has one.
    fn max_concurrency(&self) -> Option<usize> {
        None
    }
}

fn word_count(text: &str) -> u64 {
    text.split_whitespace().count() as u64
}

fn fenced_answer(lead: &str, solution: &Solution) -> Result<String> {
    Ok(format!("{lead}\n```json\n{{\"solution\": {}}}\n```", solution.render()?))
}

/// Answers with an exact solution found by exhaustive search.
#[derive(Debug, Clone, Default)]
pub struct OracleBackend {
    pub budget: OracleBudget,
}

impl OracleBackend {
    fn answer(&self, prompt: &str) -> Result<String> {
        let target = parse_prompt(prompt)?;
        Ok(match solve_exact(&target, self.budget)? {
            OracleResult::Found(s) => fenced_answer("Exhaustive search found a solution.", &s)?,
            OracleResult::NoSolution => "The instance has no solution.".into(),
            OracleResult::Exhausted => "The search budget ran out before a solution was found.".into(),
        })
    }
}

impl Backend for OracleBackend {
    fn name(&self) -> &str {
        "oracle"
    }

    fn complete(&self, prompt: &str, _: &Sampling) -> BackendReply {
        let text = self.answer(prompt).unwrap_or_else(|e| format!("Cannot answer: {e}"));
        BackendReply::complete(text.clone(), word_count(prompt), word_count(&text))
    }
}

/// Answers with a random candidate of the right shape. The draw depends
/// only on the seed and the prompt, so replies are reproducible.
#[derive(Debug, Clone, Default)]
pub struct RandomBackend {
    pub seed: u64,
}

impl Backend for RandomBackend {
    fn name(&self) -> &str {
        "random"
    }

    fn complete(&self, prompt: &str, _: &Sampling) -> BackendReply {
        let text = parse_prompt(prompt)
            .and_then(|target| {
                let mut rng = seed::rng(seed::stable_hash(&[&self.seed.to_string(), prompt]));
                fenced_answer("Random guess.", &random_candidate(&target, &mut rng)?)
            })
            .unwrap_or_else(|e| format!("Cannot answer: {e}"));
        BackendReply::complete(text.clone(), word_count(prompt), word_count(&text))
    }
}

/// Replays stored replies keyed by prompt text.
#[derive(Debug, Clone, Default)]
pub struct FixtureBackend {
    name: String,
    replies: HashMap<String, BackendReply>,
}

impl FixtureBackend {
    pub fn new(name: impl Into<String>) -> Self {
        FixtureBackend { name: name.into(), replies: HashMap::new() }
    }

    pub fn insert(&mut self, prompt: impl Into<String>, reply: BackendReply) {
        self.replies.insert(prompt.into(), reply);
    }

    /// Replies recorded in trial logs. Trials that never got a reply are skipped.
    pub fn from_records<'a>(name: impl Into<String>, records: impl IntoIterator<Item = &'a TrialRecord>) -> Self {
        let mut backend = FixtureBackend::new(name);
        for r in records {
            if r.finish != Finish::TransportError {
                backend.insert(r.prompt.clone(), r.reply());
            }
        }
        backend
    }

    pub fn from_log(name: impl Into<String>, path: &Path) -> Result<Self> {
        let log = read_log(path)?;
        Ok(FixtureBackend::from_records(name, &log.records))
    }

    pub fn len(&self) -> usize {
        self.replies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.replies.is_empty()
    }
}

impl Backend for FixtureBackend {
    fn name(&self) -> &str {
        &self.name
    }

    fn complete(&self, prompt: &str, _: &Sampling) -> BackendReply {
        self.replies
            .get(prompt)
            .cloned()
            .unwrap_or_else(|| BackendReply::transport_error("no stored reply for this prompt"))
    }
}
