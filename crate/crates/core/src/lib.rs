//! A benchmark engine for NP-complete problems.
//!
//! * [`model`]: problem ids, generation configs, difficulty ladders, instances.
//! * [`gym`]: planted-solution generators and polynomial-time verifiers.
//! * [`oracle`]: exhaustive solvers used to cross-check the verifiers.
//! * [`solver`]: prompts, answer extraction, backends and batched trial runs.
//! * [`eval`]: accuracy aggregates, bootstrap intervals, ranks and costs.
//! * [`cli`]: the `npbench` command line.

pub mod cli;
pub mod error;
pub mod eval;
pub mod gym;
pub mod model;
pub mod oracle;
pub mod solver;

pub use error::{Error, Result};
