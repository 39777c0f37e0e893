//! Batched trial execution.

use std::collections::{BTreeMap, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Duration;

use super::aha::count_aha_with;
use super::backend::{Backend, BackendReply, Finish, Sampling};
use super::extract::extract_solution;
use super::prompt::render_prompt;
use super::record::{TrialKey, TrialRecord};
use crate::error::{Error, Result};
use crate::gym::{descriptor, generate_level_in, verify_solution, GeneratedPair};
use crate::model::{seed, DifficultyLadder, ErrorCode, ProblemId, Solution, VerifyOutcome};

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// In-context examples per prompt.
    pub n_shots: usize,
    /// Trials per (level, seed).
    pub n_trials: u32,
    /// Maximum backend calls in flight.
    pub batch_size: usize,
    /// Attempts per trial when the backend fails in transport.
    pub max_tries: u32,
    pub seeds: Vec<u64>,
    pub sampling: Sampling,
    /// Sleep before the second attempt; doubles for each later attempt.
    pub retry_backoff: Duration,
    /// Recorded model name; the backend's name when absent.
    pub model_label: Option<String>,
    pub aha_lexicon: Vec<String>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            n_shots: 1,
            n_trials: 30,
            batch_size: 10,
            max_tries: 3,
            seeds: vec![42, 53, 64],
            sampling: Sampling::self_hosted(),
            retry_backoff: Duration::from_secs(1),
            model_label: None,
            aha_lexicon: vec!["wait".into()],
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Config(m.into()));
        if self.n_shots == 0 {
            return bad("n_shots must be at least 1");
        }
        if self.batch_size == 0 {
            return bad("batch_size must be at least 1");
        }
        if self.max_tries == 0 {
            return bad("max_tries must be at least 1");
        }
        if self.seeds.is_empty() {
            return bad("at least one seed is required");
        }
        Ok(())
    }
}

/// A trial with its prompt rendered, ready to send.
struct Job {
    key: TrialKey,
    target: GeneratedPair,
    prompt: String,
}

fn prepare(ladder: &DifficultyLadder, key: TrialKey, n_shots: usize) -> Result<Job> {
    let ts = seed::trial_seed(key.seed, key.problem, key.level, key.trial_index);
    let target = generate_level_in(ladder, key.problem, key.level, ts)?;
    let base = seed::example_seed(ts);
    let examples = (0..n_shots as u64)
        .map(|j| generate_level_in(ladder, key.problem, key.level, base.wrapping_add(j)))
        .collect::<Result<Vec<_>>>()?;
    let prompt = render_prompt(&descriptor(key.problem), &examples, &target.instance)?.text;
    Ok(Job { key, target, prompt })
}

fn call_with_retries(backend: &dyn Backend, prompt: &str, config: &SolverConfig) -> (BackendReply, u32, u64, u64) {
    let (mut prompt_tokens, mut completion_tokens) = (0, 0);
    let mut attempt = 1;
    loop {
        let reply = backend.complete(prompt, &config.sampling);
        prompt_tokens += reply.prompt_tokens;
        completion_tokens += reply.completion_tokens;
        if reply.finish != Finish::TransportError || attempt == config.max_tries {
            return (reply, attempt, prompt_tokens, completion_tokens);
        }
        let wait = config.retry_backoff.saturating_mul(1 << (attempt - 1).min(16));
        if !wait.is_zero() {
            std::thread::sleep(wait);
        }
        attempt += 1;
    }
}

fn run_trial(job: Job, backend: &dyn Backend, config: &SolverConfig, model: &str) -> TrialRecord {
    let (reply, attempts, prompt_tokens, completion_tokens) = call_with_retries(backend, &job.prompt, config);
    let lexicon: Vec<&str> = config.aha_lexicon.iter().map(String::as_str).collect();
    let mut record = TrialRecord {
        model: model.to_string(),
        problem: job.key.problem,
        level: job.key.level,
        seed: job.key.seed,
        trial_index: job.key.trial_index,
        instance: job.target.instance,
        planted: job.target.planted,
        prompt: job.prompt,
        prompt_tokens,
        completion_tokens,
        raw_response: String::new(),
        reasoning_text: reply.reasoning_text,
        extracted: None,
        extract_error: None,
        outcome: None,
        attempts,
        aha_count: 0,
        backend_error: None,
        finish: reply.finish,
    };
    if reply.finish == Finish::TransportError {
        record.backend_error = Some(format!("backend unavailable after {attempts} attempts: {}", reply.text));
        return record;
    }
    record.aha_count = count_aha_with(record.reasoning_text.as_deref().unwrap_or(&reply.text), &lexicon);
    record.outcome = Some(match extract_solution(&reply.text) {
        Ok(value) => {
            let outcome = verify_solution(&record.instance, &Solution(value.clone()));
            record.extracted = Some(value);
            outcome
        }
        Err(e) => {
            record.extract_error = Some(e.0.clone());
            VerifyOutcome::reject(ErrorCode::JSON, e.0)
        }
    });
    record.raw_response = reply.text;
    record
}

/// Runs every (level, seed, trial) of `problem` on the builtin ladder.
pub fn run_batch(
    problem: ProblemId,
    levels: &[u32],
    backend: &dyn Backend,
    config: &SolverConfig,
) -> Result<Vec<TrialRecord>> {
    let mut out = Vec::new();
    run_batch_with(DifficultyLadder::builtin(), problem, levels, backend, config, &HashSet::new(), &mut |r| {
        out.push(r);
        Ok(())
    })?;
    Ok(out)
}

/// Like [`run_batch`], skipping trials whose key is in `done` and handing
/// each record to `sink` in (level, seed, trial) order as soon as all
/// earlier records are finished.
pub fn run_batch_with(
    ladder: &DifficultyLadder,
    problem: ProblemId,
    levels: &[u32],
    backend: &dyn Backend,
    config: &SolverConfig,
    done: &HashSet<TrialKey>,
    sink: &mut dyn FnMut(TrialRecord) -> Result<()>,
) -> Result<()> {
    config.validate()?;
    let mut jobs = Vec::new();
    for &level in levels {
        ladder.level_config(problem, level)?;
        for &s in &config.seeds {
            for trial_index in 0..config.n_trials {
                let key = TrialKey { problem, level, seed: s, trial_index };
                if !done.contains(&key) {
                    jobs.push(prepare(ladder, key, config.n_shots)?);
                }
            }
        }
    }
    if jobs.is_empty() {
        return Ok(());
    }

    let model = config.model_label.clone().unwrap_or_else(|| backend.name().to_string());
    let workers = config.batch_size.min(backend.max_concurrency().unwrap_or(usize::MAX)).min(jobs.len()).max(1);
    let total = jobs.len();
    let slots: Vec<std::sync::Mutex<Option<Job>>> = jobs.into_iter().map(|j| std::sync::Mutex::new(Some(j))).collect();
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, TrialRecord)>();

    std::thread::scope(|scope| {
        for _ in 0..workers {
            let tx = tx.clone();
            let (slots, next, model) = (&slots, &next, &model);
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= total {
                    break;
                }
                let job = slots[i].lock().unwrap().take().expect("each job is taken once");
                if tx.send((i, run_trial(job, backend, config, model))).is_err() {
                    break;
                }
            });
        }
        drop(tx);

        let mut pending = BTreeMap::new();
        let mut emitted = 0;
        for (i, record) in rx.iter() {
            pending.insert(i, record);
            while let Some(record) = pending.remove(&emitted) {
                sink(record)?;
                emitted += 1;
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{OracleBackend, RandomBackend};

    fn small() -> SolverConfig {
        SolverConfig { n_trials: 3, seeds: vec![1, 2], retry_backoff: Duration::ZERO, ..Default::default() }
    }

    #[test]
    fn defaults_follow_the_protocol() {
        let c = SolverConfig::default();
        assert_eq!((c.n_shots, c.n_trials, c.batch_size, c.max_tries), (1, 30, 10, 3));
        assert_eq!(c.seeds, vec![42, 53, 64]);
        assert_eq!(c.sampling, Sampling::self_hosted());
    }

    #[test]
    fn oracle_batch_is_ordered_and_correct() {
        let records = run_batch(ProblemId::ThreeSat, &[1, 2], &OracleBackend::default(), &small()).unwrap();
        assert_eq!(records.len(), 2 * 2 * 3);
        let keys: Vec<TrialKey> = records.iter().map(TrialRecord::key).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(records.iter().all(|r| r.ok() && r.attempts == 1 && r.model == "oracle"));
    }

    #[test]
    fn examples_differ_from_targets() {
        let records = run_batch(ProblemId::ThreeSat, &[2], &RandomBackend::default(), &small()).unwrap();
        for r in &records {
            let rendered = r.instance.render().unwrap();
            let examples = r.prompt.split("# Problem to Solve:").next().unwrap();
            assert!(!examples.contains(&rendered));
        }
    }

    #[test]
    fn resume_skips_done_keys() {
        let config = small();
        let all = run_batch(ProblemId::ThreeSat, &[1], &OracleBackend::default(), &config).unwrap();
        let done: HashSet<TrialKey> = all[..4].iter().map(TrialRecord::key).collect();
        let mut rest = Vec::new();
        run_batch_with(
            DifficultyLadder::builtin(),
            ProblemId::ThreeSat,
            &[1],
            &OracleBackend::default(),
            &config,
            &done,
            &mut |r| {
                rest.push(r);
                Ok(())
            },
        )
        .unwrap();
        assert_eq!(rest, all[4..]);
    }

    #[test]
    fn invalid_inputs_fail_before_any_call() {
        let bad = SolverConfig { batch_size: 0, ..small() };
        assert!(run_batch(ProblemId::ThreeSat, &[1], &OracleBackend::default(), &bad).is_err());
        assert!(matches!(
            run_batch(ProblemId::ThreeSat, &[99], &OracleBackend::default(), &small()),
            Err(Error::UnknownLevel { .. })
        ));
    }
}
