//! Number problems: Bin Packing, QDE, Min Sum of Squares, Partition,
//! Subset Sum, Quadratic Congruences.

use rand::seq::SliceRandom;
use rand::{Rng, RngCore};
use serde_json::Value;

use super::candidate::{as_int, index, int_list};
use super::sample::{bounded_composition, choose, composition, MAX_ATTEMPTS};
use super::{format_error, infeasible, problem_error, Check};
use crate::error::Result;
use crate::model::schema::{BinPacking, MinSumOfSquares, Partition, Payload, SubsetSum, ThreeIntegers};
use crate::model::{GenConfig, ProblemId};

pub(crate) fn generate_bin_packing(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let items = cfg.get_usize("num_items")?;
    let cap = cfg.get_int("bin_capacity")?;
    let bins = cfg.get_usize("num_bins")?;
    if bins > items || items as u64 > bins as u64 * cap {
        return Err(infeasible(
            ProblemId::BinPacking,
            format!("{items} positive items cannot fill {bins} bins of capacity {cap}"),
        ));
    }
    let counts = bounded_composition(items as u64, bins, 1, cap, rng);
    let mut tagged: Vec<(u64, usize)> = Vec::with_capacity(items);
    for (bin, &count) in counts.iter().enumerate() {
        let lo = count.max(cap.div_ceil(2));
        let total = rng.random_range(lo..=cap);
        tagged.extend(composition(total, count as usize, rng).into_iter().map(|s| (s, bin)));
    }
    tagged.shuffle(rng);
    let (sizes, assignment): (Vec<u64>, Vec<usize>) = tagged.into_iter().unzip();
    let inst = BinPacking { sizes, capacity: cap, bins };
    Ok((Payload::BinPacking(inst), Value::from(assignment)))
}

pub(crate) fn verify_bin_packing(inst: &BinPacking, candidate: &Value) -> Check {
    let assignment = int_list(candidate, "bin assignment")?;
    if assignment.len() != inst.sizes.len() {
        return Err(problem_error(1, format!("{} bins given for {} items", assignment.len(), inst.sizes.len())));
    }
    let mut load = vec![0u64; inst.bins];
    for (item, &b) in assignment.iter().enumerate() {
        let b = index(b, inst.bins).ok_or_else(|| problem_error(2, format!("bin {b} is outside 0..{}", inst.bins)))?;
        load[b] += inst.sizes[item];
    }
    if let Some((b, l)) = load.iter().enumerate().find(|(_, &l)| l > inst.capacity) {
        return Err(problem_error(3, format!("bin {b} holds {l} > {}", inst.capacity)));
    }
    Ok(())
}

pub(crate) fn generate_qde(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let lo = cfg.get_int("low")?;
    let hi = cfg.get_int("high")?;
    if lo > hi {
        return Err(infeasible(ProblemId::QuadraticDiophantine, format!("empty range {lo}..={hi}")));
    }
    let mut draw = || rng.random_range(lo..=hi);
    let (a, b, x, y) = (draw(), draw(), draw(), draw());
    let c = a
        .checked_mul(x)
        .and_then(|v| v.checked_mul(x))
        .and_then(|v| v.checked_add(b.checked_mul(y)?))
        .ok_or_else(|| infeasible(ProblemId::QuadraticDiophantine, "c overflows 64 bits"))?;
    Ok((Payload::QuadraticDiophantine(ThreeIntegers { a, b, c }), Value::from(vec![x, y])))
}

pub(crate) fn verify_qde(inst: &ThreeIntegers, candidate: &Value) -> Check {
    let xy = int_list(candidate, "[x, y]")?;
    if xy.len() != 2 {
        return Err(problem_error(1, format!("expected [x, y], got {} numbers", xy.len())));
    }
    if xy.iter().any(|&v| v <= 0) {
        return Err(problem_error(2, "x and y must be positive"));
    }
    let (x, y) = (xy[0] as u128, xy[1] as u128);
    let lhs = inst.a as u128 * x * x + inst.b as u128 * y;
    if lhs != inst.c as u128 {
        return Err(problem_error(3, format!("a*x^2 + b*y = {lhs}, not {}", inst.c)));
    }
    Ok(())
}

pub(crate) fn random_qde(inst: &ThreeIntegers, rng: &mut dyn RngCore) -> Value {
    let x_max = ((inst.c / inst.a.max(1)) as f64).sqrt() as u64;
    let y_max = inst.c / inst.b.max(1);
    Value::from(vec![rng.random_range(1..=x_max.max(1)), rng.random_range(1..=y_max.max(1))])
}

pub(crate) fn generate_min_sum_squares(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_elements")?;
    let k = cfg.get_usize("k")?;
    if k > n {
        return Err(infeasible(ProblemId::MinSumOfSquares, format!("{k} sets from {n} elements")));
    }
    let sizes: Vec<u64> = (0..n).map(|_| rng.random_range(1..=100)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut assignment = vec![0usize; n];
    for (pos, &e) in order.iter().enumerate() {
        assignment[e] = pos % k;
    }
    let bound = sum_of_squares(&sizes, &assignment, k);
    let inst = MinSumOfSquares { sizes, k, bound };
    Ok((Payload::MinSumOfSquares(inst), Value::from(assignment)))
}

fn sum_of_squares(sizes: &[u64], assignment: &[usize], k: usize) -> u64 {
    let mut sums = vec![0u64; k];
    for (s, &a) in sizes.iter().zip(assignment) {
        sums[a] += s;
    }
    sums.iter().map(|s| s * s).sum()
}

pub(crate) fn verify_min_sum_squares(inst: &MinSumOfSquares, candidate: &Value) -> Check {
    let raw = int_list(candidate, "subset assignment")?;
    if raw.len() != inst.sizes.len() {
        return Err(problem_error(1, format!("{} entries for {} elements", raw.len(), inst.sizes.len())));
    }
    let assignment = raw
        .iter()
        .map(|&a| index(a, inst.k).ok_or_else(|| problem_error(2, format!("subset {a} is outside 0..{}", inst.k))))
        .collect::<Result<Vec<_>, _>>()?;
    let total = sum_of_squares(&inst.sizes, &assignment, inst.k);
    if total > inst.bound {
        return Err(problem_error(3, format!("sum of squares {total} exceeds {}", inst.bound)));
    }
    Ok(())
}

pub(crate) fn generate_partition(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("n")?;
    let max = cfg.get_int("max_value")?;
    if n < 2 {
        return Err(infeasible(ProblemId::Partition, "need at least two elements"));
    }
    let (left, right) = (n.div_ceil(2), n / 2);
    for _ in 0..MAX_ATTEMPTS {
        let first: Vec<u64> = (0..left).map(|_| rng.random_range(1..=max)).collect();
        let total: u64 = first.iter().sum();
        if total > right as u64 * max || total < right as u64 {
            continue;
        }
        let second = bounded_composition(total, right, 1, max, rng);
        let mut tagged: Vec<(u64, u8)> = first.into_iter().map(|s| (s, 0)).chain(second.into_iter().map(|s| (s, 1))).collect();
        tagged.shuffle(rng);
        let (sizes, sides): (Vec<u64>, Vec<u8>) = tagged.into_iter().unzip();
        return Ok((Payload::Partition(Partition { sizes }), Value::from(sides)));
    }
    Err(infeasible(ProblemId::Partition, "no balanced split found within the retry budget"))
}

/// Side labels 0/1 per element (booleans accepted): codes for (length, bad value).
pub(crate) fn side_list(candidate: &Value, len: usize, codes: (u8, u8)) -> Result<Vec<bool>, super::Rejection> {
    let raw = super::candidate::array(candidate, "sides")?;
    if raw.len() != len {
        return Err(problem_error(codes.0, format!("{} sides for {len} elements", raw.len())));
    }
    raw.iter()
        .map(|v| super::candidate::as_bit(v).ok_or_else(|| problem_error(codes.1, format!("side {v} is not 0 or 1"))))
        .collect()
}

pub(crate) fn verify_partition(inst: &Partition, candidate: &Value) -> Check {
    let sides = side_list(candidate, inst.sizes.len(), (1, 2))?;
    let mut sums = [0u64; 2];
    for (s, side) in inst.sizes.iter().zip(sides) {
        sums[side as usize] += s;
    }
    if sums[0] != sums[1] {
        return Err(problem_error(3, format!("sides sum to {} and {}", sums[0], sums[1])));
    }
    Ok(())
}

pub(crate) fn generate_subset_sum(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_elements")?;
    let max = cfg.get_int("max_value")?;
    let sizes: Vec<u64> = (0..n).map(|_| rng.random_range(1..=max)).collect();
    let count = rng.random_range(1..=n);
    let mut picked = choose(&(0..n).collect::<Vec<_>>(), count, rng);
    picked.sort_unstable();
    let target = picked.iter().map(|&i| sizes[i]).sum();
    Ok((Payload::SubsetSum(SubsetSum { sizes, target }), Value::from(picked)))
}

pub(crate) fn verify_subset_sum(inst: &SubsetSum, candidate: &Value) -> Check {
    let raw = int_list(candidate, "subset")?;
    let mut seen = vec![false; inst.sizes.len()];
    let mut total = 0u64;
    for &i in &raw {
        let idx = index(i, inst.sizes.len())
            .ok_or_else(|| problem_error(1, format!("index {i} is outside 0..{}", inst.sizes.len())))?;
        if std::mem::replace(&mut seen[idx], true) {
            return Err(problem_error(2, format!("index {i} is listed twice")));
        }
        total += inst.sizes[idx];
    }
    if total != inst.target {
        return Err(problem_error(3, format!("subset sums to {total}, target is {}", inst.target)));
    }
    Ok(())
}

/// Each index kept with probability one half.
pub(crate) fn random_subset(len: usize, rng: &mut dyn RngCore) -> Value {
    Value::from((0..len).filter(|_| rng.random_bool(0.5)).collect::<Vec<_>>())
}

pub(crate) fn generate_quadratic_congruences(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let lo = cfg.get_int("min_value")?;
    let hi = cfg.get_int("max_value")?;
    if hi < 2 || lo > hi {
        return Err(infeasible(ProblemId::QuadraticCongruences, format!("range {lo}..={hi} has no modulus above 1")));
    }
    for _ in 0..MAX_ATTEMPTS {
        let b = rng.random_range(lo.max(2)..=hi);
        let x = rng.random_range(lo.max(1)..=hi);
        let a = ((x as u128 * x as u128) % b as u128) as u64;
        if a == 0 {
            continue;
        }
        let c = x + 1 + rng.random_range(0..=x);
        return Ok((Payload::QuadraticCongruences(ThreeIntegers { a, b, c }), Value::from(x)));
    }
    Err(infeasible(ProblemId::QuadraticCongruences, "every draw gave a zero residue"))
}

pub(crate) fn verify_quadratic_congruences(inst: &ThreeIntegers, candidate: &Value) -> Check {
    let x = as_int(candidate).ok_or_else(|| format_error("x must be an integer"))?;
    if x <= 0 {
        return Err(problem_error(1, format!("x = {x} is not positive")));
    }
    let x = x as u64;
    if x >= inst.c {
        return Err(problem_error(2, format!("x = {x} is not below {}", inst.c)));
    }
    let r = (x as u128 * x as u128 % inst.b as u128) as u64;
    if r != inst.a {
        return Err(problem_error(3, format!("x^2 mod {} = {r}, expected {}", inst.b, inst.a)));
    }
    Ok(())
}

pub(crate) fn random_qc(inst: &ThreeIntegers, rng: &mut dyn RngCore) -> Value {
    Value::from(rng.random_range(1..inst.c.max(2)))
}
