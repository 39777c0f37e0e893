//! Statistical properties of the evaluation layer, checked against
//! independent reference computations.

use std::collections::BTreeMap;

use npbench::eval::{
    accuracy_matrix, aggregate, aggregate_strata, bootstrap_ci, cost_report, error_histogram, evaluate, iqm, rank_models,
    to_csv, CellKey, Currency, EvalOptions, Grouping, Metric, Price, PriceTable,
};
use npbench::model::{ErrorCode, Instance, ProblemId, Solution, VerifyOutcome};
use npbench::solver::{Finish, TrialRecord};
use proptest::prelude::*;
use serde_json::json;

fn record(model: &str, problem: ProblemId, level: u32, seed: u64, trial: u32, outcome: VerifyOutcome) -> TrialRecord {
    TrialRecord {
        model: model.into(),
        problem,
        level,
        seed,
        trial_index: trial,
        instance: Instance::new(problem, Some(level), 0, json!({})),
        planted: Solution(json!(null)),
        prompt: String::new(),
        prompt_tokens: 100,
        completion_tokens: 40,
        raw_response: String::new(),
        reasoning_text: None,
        extracted: None,
        extract_error: None,
        outcome: Some(outcome),
        attempts: 1,
        aha_count: 0,
        backend_error: None,
        finish: Finish::Complete,
    }
}

fn ok_or(ok: bool, code: ErrorCode) -> VerifyOutcome {
    if ok {
        VerifyOutcome::accept()
    } else {
        VerifyOutcome::reject(code, "wrong")
    }
}

/// Reference IQM: replicate each sorted score four times, keep the middle half.
fn iqm_reference(scores: &[f64]) -> f64 {
    let mut v = scores.to_vec();
    v.sort_by(f64::total_cmp);
    let copies: Vec<f64> = v.iter().flat_map(|&x| [x; 4]).collect();
    let n = scores.len();
    copies[n..3 * n].iter().sum::<f64>() / (2 * n) as f64
}

#[test]
fn accuracy_is_a_direct_ratio() {
    let records: Vec<TrialRecord> =
        (0..30).map(|t| record("m", ProblemId::ThreeSat, 1, 42, t, ok_or(t % 2 == 0, ErrorCode::JSON))).collect();
    let m = accuracy_matrix(&records);
    let key = CellKey { model: "m".into(), problem: ProblemId::ThreeSat, level: 1, seed: 42 };
    assert_eq!(m.accuracy(&key), Some(0.5));
    assert!(accuracy_matrix(&[]).is_empty());
}

#[test]
fn grouping_preserves_counts() {
    let mut records = Vec::new();
    for (p, n) in [(ProblemId::ThreeSat, 3), (ProblemId::Clique, 5)] {
        for t in 0..n {
            records.push(record("m", p, 2, 1, t, VerifyOutcome::accept()));
        }
    }
    let m = accuracy_matrix(&records);
    let counts: Vec<u64> = m.cells.values().map(|c| c.trials).collect();
    assert_eq!(counts, vec![3, 5]);
}

#[test]
fn error_histogram_counts() {
    let mut records = Vec::new();
    for t in 0..3 {
        records.push(record("m", ProblemId::ThreeSat, 1, 1, t, ok_or(false, ErrorCode::JSON)));
    }
    for t in 3..5 {
        records.push(record("m", ProblemId::ThreeSat, 1, 1, t, ok_or(false, ErrorCode::problem(1))));
    }
    records.push(record("m", ProblemId::ThreeSat, 1, 1, 9, VerifyOutcome::accept()));
    let h = error_histogram(&records);
    let cell = &h[&("m".to_string(), 1)];
    assert_eq!(cell[&ErrorCode::JSON], 3);
    assert_eq!(cell[&ErrorCode::problem(1)], 2);
    assert_eq!(cell.values().sum::<u64>(), 5);
    let all_ok: Vec<TrialRecord> = (0..4).map(|t| record("m", ProblemId::ThreeSat, 1, 1, t, VerifyOutcome::accept())).collect();
    assert!(error_histogram(&all_ok).is_empty());
}

#[test]
fn ranks_match_a_reference_sort() {
    let mut records = Vec::new();
    // Model i solves (i * 3) % 10 of 10 trials; models 0..10 give some ties.
    let solved: Vec<u32> = (0..10).map(|i| (i * 3) % 10 / 2).collect();
    for (i, &k) in solved.iter().enumerate() {
        for t in 0..10 {
            records.push(record(&format!("m{i}"), ProblemId::Partition, 1, 1, t, ok_or(t < k, ErrorCode::JSON)));
        }
    }
    let ranks = rank_models(&accuracy_matrix(&records), ProblemId::Partition).unwrap();
    assert_eq!(ranks.len(), 10);
    for e in &ranks {
        let mine = solved[e.model[1..].parse::<usize>().unwrap()];
        let better = solved.iter().filter(|&&k| k > mine).count();
        assert_eq!(e.rank, better + 1, "{}", e.model);
    }
    let two = vec![
        record("a", ProblemId::Partition, 1, 1, 0, VerifyOutcome::accept()),
        record("b", ProblemId::Partition, 1, 1, 0, VerifyOutcome::accept()),
        record("c", ProblemId::Partition, 1, 1, 0, ok_or(false, ErrorCode::JSON)),
    ];
    let r = rank_models(&accuracy_matrix(&two), ProblemId::Partition).unwrap();
    assert_eq!(r.iter().map(|e| e.rank).collect::<Vec<_>>(), vec![1, 1, 3]);
    assert!(rank_models(&accuracy_matrix(&two[..1]), ProblemId::Partition).is_err());
}

#[test]
fn cost_report_totals_and_unpriced_models() {
    let records: Vec<TrialRecord> = (0..10).map(|t| record("m", ProblemId::ThreeSat, 1, 1, t, VerifyOutcome::accept())).collect();
    let mut prices = PriceTable::default();
    prices.models.insert("m".into(), Price::new("2", "8", Currency::Rmb).unwrap());
    let lines = cost_report(&records, &prices).unwrap();
    assert_eq!((lines[0].prompt_tokens, lines[0].completion_tokens), (1000, 400));
    assert_eq!(lines[0].display_total(), "0.01");
    assert_eq!(Price::new("2", "8", Currency::Rmb).unwrap().cost(0, 0), 0u128.into());
    assert!(cost_report(&records, &PriceTable::default()).is_err());
}

#[test]
fn bootstrap_width_shrinks_with_more_runs() {
    // Average width over several seeds for small and large strata drawn from the same pattern.
    let width = |runs: usize| -> f64 {
        (0..20u64)
            .map(|seed| {
                let strata: Vec<Vec<f64>> =
                    (0..4).map(|t| (0..runs).map(|i| ((i * 7 + t * 3) % 11) as f64 / 10.0).collect()).collect();
                let (lo, hi) = bootstrap_ci(&strata, Metric::Mean, None, 400, 0.95, seed).unwrap();
                hi - lo
            })
            .sum::<f64>()
            / 20.0
    };
    let (w3, w12, w48) = (width(3), width(12), width(48));
    assert!(w3 >= w12 && w12 >= w48, "{w3} {w12} {w48}");
}

#[test]
fn reports_are_deterministic_and_bounded() {
    let mut records = Vec::new();
    for (level, rate) in [(1, 9), (2, 5), (3, 1)] {
        for seed in [42, 53, 64] {
            for t in 0..30 {
                records.push(record("m", ProblemId::Clique, level, seed, t, ok_or((t + seed as u32) % 10 < rate, ErrorCode::JSON)));
            }
        }
    }
    let m = accuracy_matrix(&records);
    let options = EvalOptions { resamples: 300, seed: 3, ..EvalOptions::default() };
    let a = evaluate(&m, &options).unwrap();
    assert_eq!(to_csv(&a), to_csv(&evaluate(&m, &options).unwrap()));
    for r in &a {
        assert!(0.0 <= r.ci_low && r.ci_low <= r.ci_high && r.ci_high <= 1.0, "{r:?}");
    }
    // Overall rows + one problem row + three level rows, four metrics each.
    assert_eq!(a.len(), (1 + 1 + 3) * 4);
    let joint = EvalOptions { joint: true, groupings: vec![Grouping::Overall], ..options };
    let mean = evaluate(&m, &joint).unwrap().into_iter().find(|r| r.metric == Metric::Mean).unwrap();
    let ratio = records.iter().filter(|r| r.ok()).count() as f64 / records.len() as f64;
    assert!((mean.value - ratio).abs() < 1e-12);
}

proptest! {
    #[test]
    fn iqm_matches_reference_and_is_bounded(v in prop::collection::vec(0.0f64..1.0, 1..80)) {
        let x = iqm(&v);
        prop_assert!((x - iqm_reference(&v)).abs() < 1e-12);
        let (lo, hi) = v.iter().fold((f64::MAX, f64::MIN), |(a, b), &s| (a.min(s), b.max(s)));
        prop_assert!(lo - 1e-12 <= x && x <= hi + 1e-12);
    }

    #[test]
    fn iqm_of_constant_is_constant(c in -5.0f64..5.0, n in 1usize..50) {
        prop_assert!((iqm(&vec![c; n]) - c).abs() < 1e-12);
    }

    #[test]
    fn gap_is_zero_iff_all_reach_gamma(v in prop::collection::vec(0.0f64..1.5, 1..30), gamma in 0.1f64..1.2) {
        let gap = aggregate(&v, Metric::OptimalityGap, Some(gamma)).unwrap();
        prop_assert_eq!(gap.abs() < 1e-12, v.iter().all(|&s| s >= gamma));
        prop_assert!(gap >= -1e-12 && gap <= gamma + 1e-12);
    }

    #[test]
    fn mean_of_cells_is_the_success_ratio(cells in prop::collection::vec(0u32..=10, 1..12)) {
        let mut records = Vec::new();
        for (i, &k) in cells.iter().enumerate() {
            for t in 0..10 {
                records.push(record("m", ProblemId::SubsetSum, 1 + (i % 3) as u32, i as u64, t, ok_or(t < k, ErrorCode::JSON)));
            }
        }
        let m = accuracy_matrix(&records);
        let scores: Vec<f64> = m.cells.values().map(|c| c.accuracy()).collect();
        let ratio = cells.iter().sum::<u32>() as f64 / (10 * cells.len()) as f64;
        prop_assert!((aggregate(&scores, Metric::Mean, None).unwrap() - ratio).abs() < 1e-12);
    }

    #[test]
    fn bootstrap_interval_brackets_and_is_seeded(strata in prop::collection::vec(prop::collection::vec(0u32..=30, 1..6), 1..5), seed in any::<u64>()) {
        let strata: Vec<Vec<f64>> = strata.into_iter().map(|s| s.into_iter().map(|k| k as f64 / 30.0).collect()).collect();
        for m in Metric::ALL {
            let gamma = (m == Metric::OptimalityGap).then_some(1.0);
            let a = bootstrap_ci(&strata, m, gamma, 200, 0.9, seed).unwrap();
            prop_assert_eq!(a, bootstrap_ci(&strata, m, gamma, 200, 0.9, seed).unwrap());
            prop_assert!(0.0 <= a.0 && a.0 <= a.1 && a.1 <= 1.0);
            let point = aggregate_strata(&strata, m, gamma).unwrap();
            prop_assert!(point.is_finite());
        }
    }
}

#[test]
fn ranks_are_competition_ranks_over_problem_cells() {
    let mut per_model: BTreeMap<&str, Vec<bool>> = BTreeMap::new();
    per_model.insert("x", vec![true, false]);
    per_model.insert("y", vec![true, true]);
    let mut records = Vec::new();
    for (model, oks) in &per_model {
        for (t, &ok) in oks.iter().enumerate() {
            records.push(record(model, ProblemId::Betweenness, 1, 1, t as u32, ok_or(ok, ErrorCode::JSON)));
        }
    }
    let r = rank_models(&accuracy_matrix(&records), ProblemId::Betweenness).unwrap();
    assert_eq!((r[0].model.as_str(), r[0].rank, r[1].rank), ("y", 1, 2));
}
