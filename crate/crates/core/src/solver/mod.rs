//! Prompting solver backends and recording their answers.

mod aha;
mod backend;
mod extract;
mod http;
mod prompt;
mod record;
mod runner;

pub use aha::{count_aha, count_aha_with, DEFAULT_LEXICON};
pub use backend::{Backend, BackendReply, FixtureBackend, Finish, OracleBackend, RandomBackend, Sampling};
pub use extract::{extract_solution, locate_json, strip_comments, ExtractError, NO_JSON};
pub use http::{HttpBackend, ENV_API_KEY, ENV_ENDPOINT, ENV_MODEL};
pub use prompt::{parse_prompt, render_prompt, PromptBundle};
pub use record::{append_log, read_log, LogContents, TrialKey, TrialRecord};
pub use runner::{run_batch, run_batch_with, SolverConfig};
