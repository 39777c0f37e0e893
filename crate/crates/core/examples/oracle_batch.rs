//! Runs a small benchmark batch with the in-process backends and writes a
//! resumable log.
//!
//! Run with: cargo run --example oracle_batch -- /tmp/run.jsonl

use std::collections::HashSet;
use std::path::PathBuf;

use npbench::model::{DifficultyLadder, ProblemId};
use npbench::solver::{append_log, read_log, run_batch_with, OracleBackend, RandomBackend, SolverConfig};

fn main() -> npbench::Result<()> {
    let path = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "oracle_batch.jsonl".into()));
    let config = SolverConfig { n_trials: 5, ..SolverConfig::default() };
    let done: HashSet<_> = match path.exists() {
        true => read_log(&path)?.keys(),
        false => HashSet::new(),
    };
    println!("{} trials already logged", done.len());

    let oracle = OracleBackend::default();
    let random = RandomBackend { seed: 3 };
    for backend in [&oracle as &dyn npbench::solver::Backend, &random] {
        let config = SolverConfig { model_label: Some(backend.name().into()), ..config.clone() };
        let mut solved = 0;
        let mut total = 0;
        run_batch_with(DifficultyLadder::builtin(), ProblemId::VertexCover, &[1, 2, 3], backend, &config, &done, &mut |r| {
            solved += usize::from(r.ok());
            total += 1;
            append_log(&path, std::slice::from_ref(&r))
        })?;
        println!("{}: {solved}/{total} solved", backend.name());
    }
    Ok(())
}
