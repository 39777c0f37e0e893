//! Stratified bootstrap confidence intervals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::metrics::{aggregate_strata, Metric};
use crate::error::{Error, Result};

pub const DEFAULT_RESAMPLES: usize = 2000;
pub const DEFAULT_CONFIDENCE: f64 = 0.95;

/// Percentile interval of `metric` over `resamples` draws that resample
/// runs with replacement inside each stratum. Resample `r` draws from its
/// own ChaCha stream, so the result depends only on the inputs and `seed`.
pub fn bootstrap_ci(
    strata: &[Vec<f64>],
    metric: Metric,
    gamma: Option<f64>,
    resamples: usize,
    confidence: f64,
    seed: u64,
) -> Result<(f64, f64)> {
    if strata.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(i) = strata.iter().position(Vec::is_empty) {
        return Err(Error::EmptyStratum(i));
    }
    if resamples == 0 {
        return Err(Error::Config("resamples must be positive".into()));
    }
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(Error::Config(format!("confidence {confidence} is not in (0, 1)")));
    }
    let mut stats = Vec::with_capacity(resamples);
    let mut draw: Vec<Vec<f64>> = strata.iter().map(|s| Vec::with_capacity(s.len())).collect();
    for r in 0..resamples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(r as u64);
        for (out, stratum) in draw.iter_mut().zip(strata) {
            out.clear();
            out.extend((0..stratum.len()).map(|_| stratum[rng.random_range(0..stratum.len())]));
        }
        stats.push(aggregate_strata(&draw, metric, gamma)?);
    }
    stats.sort_by(f64::total_cmp);
    let alpha = (1.0 - confidence) / 2.0;
    Ok((percentile(&stats, alpha), percentile(&stats, 1.0 - alpha)))
}

/// Linear interpolation between closest ranks of sorted data.
fn percentile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let (lo, hi) = (pos.floor() as usize, pos.ceil() as usize);
    let frac = pos - lo as f64;
    let value = sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
    // Keep the interpolated value inside the bracketing samples despite rounding.
    value.clamp(sorted[lo], sorted[hi])
}
