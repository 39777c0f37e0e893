//! Shared data model: problem identifiers, difficulty configs, instances,
//! solutions, verification outcomes and the canonical encoding.

mod canonical;
mod config;
mod instance;
mod outcome;
mod problem;
pub mod schema;
pub mod seed;

pub use canonical::to_canonical_string;
pub use config::{level_config, DifficultyLadder, GenConfig, ParamValue};
pub use instance::{canonical_parse, canonical_serialize, Instance, Solution};
pub use outcome::{ErrorCategory, ErrorCode, VerifyOutcome};
pub use problem::{ParamKind, ProblemId};
