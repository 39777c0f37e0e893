//! The `npbench` binary end to end.

use std::path::Path;
use std::process::{Command, Output};

use npbench::model::ProblemId;
use npbench::solver::{append_log, read_log, run_batch, RandomBackend, SolverConfig};

fn npbench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_npbench")).args(args).env_remove("NPBENCH_ENDPOINT").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn problems_lists_every_problem() {
    let o = npbench(&["problems"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), ProblemId::ALL.len());
    assert!(stdout(&o).contains("3SAT"));
}

#[test]
fn generate_is_deterministic_and_self_checks() {
    let args = ["generate", "--problem", "clique", "--level", "3", "--count", "4", "--seed", "9"];
    let a = npbench(&args);
    let b = npbench(&args);
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 4);
    assert!(stderr(&a).contains("self-check: 4/4"));
    let other = npbench(&["generate", "--problem", "clique", "--level", "3", "--count", "4", "--seed", "10"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn bad_arguments_exit_with_usage_code() {
    for args in [
        &["generate", "--problem", "3sat", "--level", "999"][..],
        &["generate", "--problem", "no-such-problem", "--level", "1"],
        &["solve", "--problem", "3sat", "--backend", "warp", "--out", "x.jsonl"],
        &["frobnicate"],
    ] {
        assert_eq!(npbench(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_reports_outcomes() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("i.jsonl");
    let o = npbench(&["generate", "--problem", "3sat", "--level", "1", "--out", p(&inst)]);
    assert!(o.status.success());
    let line: serde_json::Value = serde_json::from_str(std::fs::read_to_string(&inst).unwrap().trim()).unwrap();
    let planted = line["planted"].to_string();

    let ok = npbench(&["verify", "--instance", p(&inst), "--solution", &planted]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    let resp = dir.path().join("r.txt");
    std::fs::write(&resp, "I could not decide.").unwrap();
    let bad = npbench(&["verify", "--instance", p(&inst), "--response", p(&resp)]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("No JSON found"));
}

#[test]
fn solve_resumes_and_fixture_replays() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("run.jsonl");
    let base = ["solve", "--problem", "partition", "--levels", "1-2", "--seeds", "1,2", "--trials", "3"];
    let mut first = base.to_vec();
    first.extend(["--backend", "random", "--random-seed", "5", "--out", p(&log)]);
    let o = npbench(&first);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("Partition level 1: accuracy"));
    let written = std::fs::read(&log).unwrap();
    assert_eq!(read_log(&log).unwrap().records.len(), 12);

    let again = npbench(&first);
    assert!(stdout(&again).contains("skipped 12 trials"));
    assert_eq!(std::fs::read(&log).unwrap(), written);

    let replay = dir.path().join("replay.jsonl");
    let mut second = base.to_vec();
    second.extend(["--backend", "fixture", "--fixture", p(&log), "--model", "random", "--out", p(&replay)]);
    let o = npbench(&second);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(std::fs::read(&replay).unwrap(), written);
}

#[test]
fn http_without_endpoint_fails_before_any_trial() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("run.jsonl");
    let o = npbench(&["solve", "--problem", "3sat", "--level", "1", "--backend", "http", "--out", p(&log)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!log.exists());
}

#[test]
fn evaluate_rejects_an_empty_log() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("empty.jsonl");
    std::fs::write(&log, "").unwrap();
    let o = npbench(&["evaluate", "--log", p(&log)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no records"));
}

#[test]
fn evaluate_matches_a_hand_computed_iqm() {
    // Four cells with accuracies 0, 1/3, 2/3, 1: the IQM keeps the middle two.
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("run.jsonl");
    let config = SolverConfig { n_trials: 3, seeds: vec![1, 2], ..SolverConfig::default() };
    let mut records = run_batch(ProblemId::SubsetSum, &[1, 2], &RandomBackend { seed: 0 }, &config).unwrap();
    let accept = npbench::model::VerifyOutcome::accept();
    let reject = npbench::model::VerifyOutcome::reject(npbench::model::ErrorCode::JSON, "x");
    for (cell, chunk) in records.chunks_mut(3).enumerate() {
        for (i, r) in chunk.iter_mut().enumerate() {
            r.outcome = Some(if i < cell { accept.clone() } else { reject.clone() });
        }
    }
    append_log(&log, &records).unwrap();
    let csv = dir.path().join("out.csv");
    let o = npbench(&["evaluate", "--log", p(&log), "--metric", "iqm,mean", "--resamples", "200", "--csv", p(&csv)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&csv).unwrap();
    let row = text.lines().find(|l| l.contains(",all,all,iqm,")).unwrap();
    let value: f64 = row.split(',').nth(4).unwrap().parse().unwrap();
    assert!((value - 0.5).abs() < 1e-9, "{row}");
}

#[test]
fn report_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("run.jsonl");
    let config = SolverConfig { n_trials: 2, seeds: vec![1], ..SolverConfig::default() };
    append_log(&log, &run_batch(ProblemId::ThreeSat, &[1, 2], &RandomBackend { seed: 1 }, &config).unwrap()).unwrap();
    let prices = dir.path().join("prices.json");
    std::fs::write(&prices, r#"{"random": {"prompt": "0.55", "completion": 2.19, "currency": "USD"}}"#)
        .unwrap();
    let a = npbench(&["report", "--log", p(&log), "--prices", p(&prices)]);
    let b = npbench(&["report", "--log", p(&log), "--prices", p(&prices)]);
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("random,3SAT,1,2,"));
}
