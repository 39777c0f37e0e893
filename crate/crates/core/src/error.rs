use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown problem `{0}`")]
    UnknownProblem(String),

    #[error("unknown level {level} for {problem}: valid levels are {min}..={max}")]
    UnknownLevel {
        problem: String,
        level: u32,
        min: u32,
        max: u32,
    },

    #[error("config does not match {problem}: {reason}")]
    ConfigMismatch { problem: String, reason: String },

    #[error("infeasible config for {problem}: {reason}")]
    InfeasibleConfig { problem: String, reason: String },

    #[error("schema violation: {0}")]
    SchemaViolation(String),

    #[error("invalid ladder: {0}")]
    InvalidLadder(String),

    #[error("problem mismatch: {0}")]
    ProblemMismatch(String),

    #[error("search space of {states} candidates exceeds the budget of {budget}")]
    UnsupportedSize { states: f64, budget: u64 },

    #[error("no scores to aggregate")]
    EmptyInput,

    #[error("optimality gap requires a gamma threshold")]
    MissingGamma,

    #[error("stratum {0} has no scores")]
    EmptyStratum(usize),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("no price for model `{0}`")]
    UnpricedModel(String),

    #[error("invalid price table: {0}")]
    InvalidPrice(String),

    #[error("backend error: {0}")]
    Backend(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
