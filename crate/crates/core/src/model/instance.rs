use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::canonical::to_canonical_string;
use super::problem::ProblemId;
use super::schema::Payload;
use crate::error::{Error, Result};

/// A generated problem instance together with its provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub problem: ProblemId,
    /// Published level this instance was generated for; absent for ad-hoc configs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<u32>,
    pub seed: u64,
    pub payload: Value,
}

impl Instance {
    pub fn new(problem: ProblemId, level: Option<u32>, seed: u64, payload: Value) -> Self {
        Instance { problem, level, seed, payload }
    }

    /// Parses the payload against the problem's schema.
    pub fn parsed(&self) -> Result<Payload> {
        Payload::parse(self.problem, &self.payload)
    }

    /// Compact single-line rendering of the payload, as shown to solvers.
    pub fn render(&self) -> Result<String> {
        to_canonical_string(&self.payload)
    }
}

/// A candidate or planted solution: exactly the value of the `solution` field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Solution(pub Value);

impl Solution {
    pub fn render(&self) -> Result<String> {
        to_canonical_string(&self.0)
    }
}

pub fn canonical_serialize(instance: &Instance) -> Result<Vec<u8>> {
    instance.parsed()?;
    let value = serde_json::to_value(instance)?;
    Ok(to_canonical_string(&value)?.into_bytes())
}

pub fn canonical_parse(bytes: &[u8]) -> Result<Instance> {
    let instance: Instance = serde_json::from_slice(bytes)
        .map_err(|e| Error::SchemaViolation(format!("instance document: {e}")))?;
    instance.parsed()?;
    Ok(instance)
}
