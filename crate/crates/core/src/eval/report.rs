//! Aggregate reports with confidence intervals, as CSV and JSON.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::bootstrap::{bootstrap_ci, DEFAULT_CONFIDENCE, DEFAULT_RESAMPLES};
use super::matrix::{ScoreMatrix, Task};
use super::metrics::{aggregate_strata, Metric};
use super::rank::rank_models;
use crate::error::{Error, Result};
use crate::model::ProblemId;

/// Which slices of the matrix get their own report rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Grouping {
    /// One row per model over every task.
    Overall,
    /// One row per model and problem, over that problem's levels.
    Problem,
    /// One row per model, problem and level.
    Level,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalOptions {
    pub metrics: Vec<Metric>,
    pub gamma: f64,
    pub resamples: usize,
    pub confidence: f64,
    pub seed: u64,
    /// Pool trials across seeds within a task instead of using per-seed accuracies.
    pub joint: bool,
    pub groupings: Vec<Grouping>,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            metrics: Metric::ALL.to_vec(),
            gamma: 1.0,
            resamples: DEFAULT_RESAMPLES,
            confidence: DEFAULT_CONFIDENCE,
            seed: 0,
            joint: false,
            groupings: vec![Grouping::Overall, Grouping::Problem, Grouping::Level],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateReport {
    pub model: String,
    /// Absent when the row covers every problem.
    pub problem: Option<ProblemId>,
    /// Absent when the row covers every level.
    pub level: Option<u32>,
    pub metric: Metric,
    pub value: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub confidence: f64,
    pub resamples: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
}

fn slices(matrix: &ScoreMatrix, model: &str, grouping: Grouping) -> Vec<(Option<ProblemId>, Option<u32>)> {
    let tasks = matrix.tasks(model);
    match grouping {
        Grouping::Overall => vec![(None, None)],
        Grouping::Problem => {
            let mut problems: Vec<ProblemId> = tasks.iter().map(|t| t.0).collect();
            problems.dedup();
            problems.into_iter().map(|p| (Some(p), None)).collect()
        }
        Grouping::Level => tasks.into_iter().map(|(p, l)| (Some(p), Some(l))).collect(),
    }
}

/// Point estimates and intervals for every model, slice and metric.
pub fn evaluate(matrix: &ScoreMatrix, options: &EvalOptions) -> Result<Vec<AggregateReport>> {
    if matrix.is_empty() {
        return Err(Error::InsufficientData("no records".into()));
    }
    let mut out = Vec::new();
    for model in matrix.models() {
        for &grouping in &options.groupings {
            for (problem, level) in slices(matrix, model, grouping) {
                let filter = |t: Task| problem.is_none_or(|p| p == t.0) && level.is_none_or(|l| l == t.1);
                let strata = if options.joint {
                    matrix.joint_strata(model, &filter)
                } else {
                    matrix.strata(model, &filter)
                };
                for &metric in &options.metrics {
                    let gamma = (metric == Metric::OptimalityGap).then_some(options.gamma);
                    let value = aggregate_strata(&strata, metric, gamma)?;
                    let (ci_low, ci_high) =
                        bootstrap_ci(&strata, metric, gamma, options.resamples, options.confidence, options.seed)?;
                    out.push(AggregateReport {
                        model: model.to_string(),
                        problem,
                        level,
                        metric,
                        value,
                        ci_low,
                        ci_high,
                        confidence: options.confidence,
                        resamples: options.resamples,
                        gamma,
                    });
                }
            }
        }
    }
    Ok(out)
}

pub const CSV_HEADER: &str = "model,problem,level,metric,value,ci_low,ci_high";

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One row per report; `all` marks an aggregated problem or level.
pub fn to_csv(reports: &[AggregateReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        let problem = r.problem.map_or("all".to_string(), |p| p.name().to_string());
        let level = r.level.map_or("all".to_string(), |l| l.to_string());
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            csv_field(&r.model),
            csv_field(&problem),
            level,
            r.metric,
            r.value,
            r.ci_low,
            r.ci_high
        )
        .unwrap();
    }
    out
}

/// JSON summary: options, aggregate rows, and per-problem ranks when at
/// least two models have results.
pub fn summary_json(matrix: &ScoreMatrix, reports: &[AggregateReport], options: &EvalOptions) -> Result<Value> {
    let mut ranks = serde_json::Map::new();
    for problem in matrix.problems() {
        if let Ok(entries) = rank_models(matrix, problem) {
            ranks.insert(problem.name().to_string(), serde_json::to_value(entries)?);
        }
    }
    Ok(json!({
        "options": {
            "metrics": options.metrics,
            "gamma": options.gamma,
            "resamples": options.resamples,
            "confidence": options.confidence,
            "seed": options.seed,
            "joint": options.joint,
        },
        "cells": matrix.cells.len(),
        "reports": reports,
        "ranks": ranks,
    }))
}
