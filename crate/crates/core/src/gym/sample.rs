//! Sampling helpers shared by the generators.

use rand::seq::{index, SliceRandom};
use rand::{Rng, RngCore};
use serde_json::Value;

/// Rejection-sampling steps give up after this many attempts.
pub(crate) const MAX_ATTEMPTS: usize = 1000;

pub(crate) fn permutation(n: usize, rng: &mut dyn RngCore) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// `count` distinct items of `pool`, in random order.
pub(crate) fn choose<T: Clone>(pool: &[T], count: usize, rng: &mut dyn RngCore) -> Vec<T> {
    debug_assert!(count <= pool.len());
    index::sample(rng, pool.len(), count).into_iter().map(|i| pool[i].clone()).collect()
}

/// Uniform random composition of `total` into `parts` positive integers.
pub(crate) fn composition(total: u64, parts: usize, rng: &mut dyn RngCore) -> Vec<u64> {
    assert!(parts >= 1 && total >= parts as u64, "cannot split {total} into {parts} positive parts");
    let mut cuts: Vec<u64> = index::sample(rng, (total - 1) as usize, parts - 1)
        .into_iter()
        .map(|c| c as u64 + 1)
        .collect();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts {
        out.push(c - prev);
        prev = c;
    }
    out.push(total - prev);
    out
}

/// Random composition of `total` into `parts` integers in `lo..=hi`.
///
/// Starts from a uniform composition and moves any excess above `hi` onto
/// parts that still have room.
pub(crate) fn bounded_composition(total: u64, parts: usize, lo: u64, hi: u64, rng: &mut dyn RngCore) -> Vec<u64> {
    let n = parts as u64;
    assert!(lo <= hi && n * lo <= total && total <= n * hi, "no composition of {total} into {parts} parts in {lo}..={hi}");
    let cap = hi - lo;
    let extra = total - n * lo;
    let mut out: Vec<u64> = composition(extra + n, parts, rng).into_iter().map(|x| x - 1).collect();
    let mut overflow = 0;
    for x in out.iter_mut() {
        if *x > cap {
            overflow += *x - cap;
            *x = cap;
        }
    }
    while overflow > 0 {
        let open: Vec<usize> = (0..parts).filter(|&i| out[i] < cap).collect();
        let i = open[rng.random_range(0..open.len())];
        let add = rng.random_range(1..=(cap - out[i]).min(overflow));
        out[i] += add;
        overflow -= add;
    }
    out.into_iter().map(|x| x + lo).collect()
}

pub(crate) fn random_permutation_value(n: usize, rng: &mut dyn RngCore) -> Value {
    Value::from(permutation(n, rng))
}

pub(crate) fn random_labels(n: usize, labels: usize, rng: &mut dyn RngCore) -> Value {
    Value::from((0..n).map(|_| rng.random_range(0..labels.max(1))).collect::<Vec<_>>())
}

pub(crate) fn random_index_subset(len: usize, count: usize, rng: &mut dyn RngCore) -> Value {
    let mut picked = index::sample(rng, len, count.min(len)).into_vec();
    picked.sort_unstable();
    Value::from(picked)
}
