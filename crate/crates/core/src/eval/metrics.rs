//! Point aggregates over scores.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Mean,
    Median,
    Iqm,
    OptimalityGap,
}

impl Metric {
    pub const ALL: [Metric; 4] = [Metric::Mean, Metric::Median, Metric::Iqm, Metric::OptimalityGap];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Mean => "mean",
            Metric::Median => "median",
            Metric::Iqm => "iqm",
            Metric::OptimalityGap => "optimality_gap",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "mean" => Ok(Metric::Mean),
            "median" => Ok(Metric::Median),
            "iqm" => Ok(Metric::Iqm),
            "optimality_gap" | "og" => Ok(Metric::OptimalityGap),
            _ => Err(Error::Config(format!("unknown metric `{s}`"))),
        }
    }
}

pub fn mean(scores: &[f64]) -> f64 {
    scores.iter().sum::<f64>() / scores.len() as f64
}

fn sorted(scores: &[f64]) -> Vec<f64> {
    let mut v = scores.to_vec();
    v.sort_by(f64::total_cmp);
    v
}

pub fn median(scores: &[f64]) -> f64 {
    let v = sorted(scores);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

/// Mean of the middle half. Sorted value i occupies [i/n, (i+1)/n] and
/// is weighted by its overlap with [1/4, 3/4]; weights are exact integers
/// in units of 1/(4n).
pub fn iqm(scores: &[f64]) -> f64 {
    let v = sorted(scores);
    let n = v.len() as u64;
    let (lo, hi) = (n, 3 * n);
    let weighted: f64 = v
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let (a, b) = (4 * i as u64, 4 * i as u64 + 4);
            let w = b.min(hi).saturating_sub(a.max(lo));
            w as f64 * x
        })
        .sum();
    weighted / (2 * n) as f64
}

/// Average shortfall below `gamma`, with scores above it clipped.
pub fn optimality_gap(scores: &[f64], gamma: f64) -> f64 {
    gamma - mean(&scores.iter().map(|&s| s.min(gamma)).collect::<Vec<_>>())
}

pub fn aggregate(scores: &[f64], metric: Metric, gamma: Option<f64>) -> Result<f64> {
    if scores.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(match metric {
        Metric::Mean => mean(scores),
        Metric::Median => median(scores),
        Metric::Iqm => iqm(scores),
        Metric::OptimalityGap => optimality_gap(scores, gamma.ok_or(Error::MissingGamma)?),
    })
}

/// Aggregate over several tasks. Mean and median are taken over per-task
/// means; IQM and optimality gap over all scores pooled.
pub fn aggregate_strata(strata: &[Vec<f64>], metric: Metric, gamma: Option<f64>) -> Result<f64> {
    if let Some(i) = strata.iter().position(Vec::is_empty) {
        return Err(Error::EmptyStratum(i));
    }
    match metric {
        Metric::Mean | Metric::Median => {
            let task_means: Vec<f64> = strata.iter().map(|s| mean(s)).collect();
            aggregate(&task_means, metric, gamma)
        }
        Metric::Iqm | Metric::OptimalityGap => aggregate(&strata.concat(), metric, gamma),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iqm_values() {
        assert_eq!(iqm(&[1.0, 2.0, 3.0, 4.0]), 2.5);
        assert_eq!(iqm(&[7.0; 5]), 7.0);
        // n = 5: weights 0, 3/4, 1, 3/4, 0 (in units of 1/5).
        assert!((iqm(&[1.0, 2.0, 3.0, 4.0, 100.0]) - 3.0).abs() < 1e-12);
        assert_eq!(iqm(&[4.0]), 4.0);
    }

    #[test]
    fn gap_and_errors() {
        assert_eq!(aggregate(&[0.5, 1.0], Metric::OptimalityGap, Some(1.0)).unwrap(), 0.25);
        assert_eq!(optimality_gap(&[1.0, 2.0], 1.0), 0.0);
        assert!(matches!(aggregate(&[], Metric::Mean, None), Err(Error::EmptyInput)));
        assert!(matches!(aggregate(&[1.0], Metric::OptimalityGap, None), Err(Error::MissingGamma)));
    }

    #[test]
    fn median_even_and_odd() {
        assert_eq!(median(&[3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn strata_use_task_means_for_median() {
        let s = vec![vec![0.0, 1.0], vec![1.0, 1.0], vec![0.0, 0.0]];
        assert_eq!(aggregate_strata(&s, Metric::Median, None).unwrap(), 0.5);
        assert_eq!(aggregate_strata(&s, Metric::Mean, None).unwrap(), 0.5);
        assert!(matches!(aggregate_strata(&[vec![1.0], vec![]], Metric::Mean, None), Err(Error::EmptyStratum(1))));
    }

    #[test]
    fn metric_names_parse() {
        for m in Metric::ALL {
            assert_eq!(m.name().parse::<Metric>().unwrap(), m);
        }
        assert!("best".parse::<Metric>().is_err());
    }
}
