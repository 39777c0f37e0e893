//! Set problems: 3DM, Set Splitting, Set Packing, X3C, Minimum Cover.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore};
use serde_json::Value;

use super::candidate::{array, index, int_list};
use super::numeric::side_list;
use super::sample::{choose, composition, permutation, MAX_ATTEMPTS};
use super::{format_error, infeasible, problem_error, Check, Rejection};
use crate::error::Result;
use crate::model::schema::{ExactCover3Sets, MinimumCover, Payload, SetPacking, SetSplitting, ThreeDimensionalMatching};
use crate::model::{GenConfig, ProblemId};

type Triple = [usize; 3];

pub(crate) fn generate_3dm(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("n")?;
    let (ys, zs) = (permutation(n, rng), permutation(n, rng));
    let planted: Vec<Triple> = (0..n).map(|x| [x, n + ys[x], 2 * n + zs[x]]).collect();
    let mut seen: HashSet<Triple> = planted.iter().copied().collect();
    let mut triples = planted.clone();
    for _ in 0..n {
        let fresh = (0..MAX_ATTEMPTS)
            .map(|_| [rng.random_range(0..n), n + rng.random_range(0..n), 2 * n + rng.random_range(0..n)])
            .find(|t| !seen.contains(t));
        // Tiny n can run out of distinct triples; keep what was drawn.
        let Some(t) = fresh else { break };
        seen.insert(t);
        triples.push(t);
    }
    triples.shuffle(rng);
    let inst = ThreeDimensionalMatching { n, triples };
    Ok((Payload::ThreeDimensionalMatching(inst), Value::from(planted.iter().map(|t| t.to_vec()).collect::<Vec<_>>())))
}

pub(crate) fn verify_3dm(inst: &ThreeDimensionalMatching, candidate: &Value) -> Check {
    let raw = array(candidate, "matching")?;
    let mut chosen = Vec::with_capacity(raw.len());
    for t in raw {
        let t = int_list(t, "triple")?;
        if t.len() != 3 {
            return Err(format_error(format!("{t:?} is not a triple")));
        }
        chosen.push(t);
    }
    let known: HashSet<[i64; 3]> = inst.triples.iter().map(|t| t.map(|x| x as i64)).collect();
    if let Some(t) = chosen.iter().find(|t| !known.contains(&[t[0], t[1], t[2]])) {
        return Err(problem_error(1, format!("triple {t:?} is not in M")));
    }
    if chosen.len() != inst.n {
        return Err(problem_error(2, format!("{} triples chosen, need {}", chosen.len(), inst.n)));
    }
    let mut used = HashSet::new();
    if let Some(x) = chosen.iter().flatten().find(|&&x| !used.insert(x)) {
        return Err(problem_error(3, format!("element {x} is matched twice")));
    }
    Ok(())
}

pub(crate) fn random_3dm(inst: &ThreeDimensionalMatching, rng: &mut dyn RngCore) -> Value {
    let picked = choose(&inst.triples, inst.n.min(inst.triples.len()), rng);
    Value::from(picked.iter().map(|t| t.to_vec()).collect::<Vec<_>>())
}

/// A sorted random subset of `0..n` with size drawn from `sizes`.
fn random_set(n: usize, sizes: std::ops::RangeInclusive<usize>, rng: &mut dyn RngCore) -> Vec<usize> {
    let size = rng.random_range(sizes).min(n);
    let mut s = choose(&(0..n).collect::<Vec<_>>(), size, rng);
    s.sort_unstable();
    s
}

/// Fills `family` with `count` more random sets not already present.
fn add_distractors(
    problem: ProblemId,
    family: &mut Vec<Vec<usize>>,
    count: usize,
    mut draw: impl FnMut(&mut dyn RngCore) -> Vec<usize>,
    rng: &mut dyn RngCore,
) -> Result<()> {
    let mut seen: HashSet<Vec<usize>> = family.iter().cloned().collect();
    for _ in 0..count {
        let fresh = (0..MAX_ATTEMPTS).map(|_| draw(rng)).find(|s| !seen.contains(s));
        let s = fresh.ok_or_else(|| infeasible(problem, "ran out of distinct subsets"))?;
        seen.insert(s.clone());
        family.push(s);
    }
    Ok(())
}

/// Shuffles the family and returns the new positions of the first `planted` sets.
fn shuffle_family<T>(family: &mut Vec<T>, planted: usize, rng: &mut dyn RngCore) -> Vec<usize> {
    let order = permutation(family.len(), rng);
    let mut slots: Vec<Option<T>> = family.drain(..).map(Some).collect();
    family.extend(order.iter().map(|&i| slots[i].take().expect("each slot moved once")));
    let mut pos: Vec<usize> = (0..order.len()).filter(|&p| order[p] < planted).collect();
    pos.sort_unstable();
    pos
}

pub(crate) fn generate_set_splitting(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_elements")?;
    let m = cfg.get_usize("num_subsets")?;
    if n < 2 {
        return Err(infeasible(ProblemId::SetSplitting, "need two elements to split"));
    }
    let mut sides: Vec<u8> = (0..n).map(|_| rng.random_range(0..2)).collect();
    let order = permutation(n, rng);
    sides[order[0]] = 0;
    sides[order[1]] = 1;
    let (left, right): (Vec<usize>, Vec<usize>) = (0..n).partition(|&e| sides[e] == 0);
    let max_size = (n / 2).max(2);
    let draw = |rng: &mut dyn RngCore| {
        let a = left[rng.random_range(0..left.len())];
        let b = right[rng.random_range(0..right.len())];
        let rest: Vec<usize> = (0..n).filter(|&e| e != a && e != b).collect();
        let extra = rng.random_range(0..=max_size - 2);
        let mut s = choose(&rest, extra, rng);
        s.extend([a, b]);
        s.sort_unstable();
        s
    };
    let mut subsets: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut seen = HashSet::new();
    for _ in 0..m {
        // Prefer a new subset, but repeat one when the splittable family is
        // smaller than the requested count.
        let mut s = draw(rng);
        for _ in 0..MAX_ATTEMPTS {
            if !seen.contains(&s) {
                break;
            }
            s = draw(rng);
        }
        seen.insert(s.clone());
        subsets.push(s);
    }
    subsets.shuffle(rng);
    let inst = SetSplitting { universe_size: n, subsets };
    Ok((Payload::SetSplitting(inst), Value::from(sides)))
}

pub(crate) fn verify_set_splitting(inst: &SetSplitting, candidate: &Value) -> Check {
    let sides = side_list(candidate, inst.universe_size, (1, 2))?;
    for s in &inst.subsets {
        if s.iter().all(|&e| sides[e] == sides[s[0]]) {
            return Err(problem_error(3, format!("subset {s:?} lies on one side")));
        }
    }
    Ok(())
}

pub(crate) fn generate_set_packing(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_elements")?;
    let m = cfg.get_usize("num_subsets")?;
    let k = cfg.get_usize("num_disjoint_sets")?;
    if k > n || k > m {
        return Err(infeasible(ProblemId::SetPacking, format!("{k} disjoint sets from {n} elements and {m} subsets")));
    }
    let used = rng.random_range(k..=n);
    let pool = choose(&(0..n).collect::<Vec<_>>(), used, rng);
    let mut family = Vec::with_capacity(m);
    let mut start = 0;
    for part in composition(used as u64, k, rng) {
        let mut s = pool[start..start + part as usize].to_vec();
        s.sort_unstable();
        family.push(s);
        start += part as usize;
    }
    let max_size = (2 * n.div_ceil(k)).min(n);
    add_distractors(ProblemId::SetPacking, &mut family, m - k, |r| random_set(n, 1..=max_size, r), rng)?;
    let planted = shuffle_family(&mut family, k, rng);
    let inst = SetPacking { universe_size: n, subsets: family, k };
    Ok((Payload::SetPacking(inst), Value::from(planted)))
}

/// Distinct in-range subset indices: codes for (out of range, repeated).
fn chosen_sets(candidate: &Value, family: usize, codes: (u8, u8)) -> Result<Vec<usize>, Rejection> {
    let raw = int_list(candidate, "subset indices")?;
    let mut seen = HashSet::new();
    raw.iter()
        .map(|&i| {
            let idx = index(i, family).ok_or_else(|| problem_error(codes.0, format!("subset {i} is outside 0..{family}")))?;
            if !seen.insert(idx) {
                return Err(problem_error(codes.1, format!("subset {i} is listed twice")));
            }
            Ok(idx)
        })
        .collect()
}

pub(crate) fn verify_set_packing(inst: &SetPacking, candidate: &Value) -> Check {
    let chosen = chosen_sets(candidate, inst.subsets.len(), (1, 2))?;
    if chosen.len() < inst.k {
        return Err(problem_error(3, format!("{} subsets chosen, need {}", chosen.len(), inst.k)));
    }
    let mut used = HashSet::new();
    for &i in &chosen {
        if let Some(e) = inst.subsets[i].iter().find(|&&e| !used.insert(e)) {
            return Err(problem_error(4, format!("element {e} appears in two chosen subsets")));
        }
    }
    Ok(())
}

pub(crate) fn generate_x3c(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let q = cfg.get_usize("num_elements")?;
    let m = cfg.get_usize("num_subsets")?;
    if m < q {
        return Err(infeasible(ProblemId::ExactCover3Sets, format!("{m} subsets cannot cover {} elements", 3 * q)));
    }
    let universe = 3 * q;
    let order = permutation(universe, rng);
    let mut family: Vec<Vec<usize>> = order
        .chunks(3)
        .map(|c| {
            let mut t = c.to_vec();
            t.sort_unstable();
            t
        })
        .collect();
    add_distractors(ProblemId::ExactCover3Sets, &mut family, m - q, |r| random_set(universe, 3..=3, r), rng)?;
    let planted = shuffle_family(&mut family, q, rng);
    let subsets = family.into_iter().map(|s| [s[0], s[1], s[2]]).collect();
    let inst = ExactCover3Sets { universe_size: universe, subsets };
    Ok((Payload::ExactCover3Sets(inst), Value::from(planted)))
}

pub(crate) fn verify_x3c(inst: &ExactCover3Sets, candidate: &Value) -> Check {
    let raw = int_list(candidate, "subset indices")?;
    let idx = raw
        .iter()
        .map(|&i| {
            index(i, inst.subsets.len())
                .ok_or_else(|| problem_error(1, format!("subset {i} is outside 0..{}", inst.subsets.len())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let q = inst.universe_size / 3;
    if idx.len() != q {
        return Err(problem_error(2, format!("{} subsets chosen, need exactly {q}", idx.len())));
    }
    let covered: HashSet<usize> = idx.iter().flat_map(|&i| inst.subsets[i]).collect();
    if covered.len() != inst.universe_size {
        return Err(problem_error(3, format!("the subsets cover {} of {} elements", covered.len(), inst.universe_size)));
    }
    Ok(())
}

pub(crate) fn generate_minimum_cover(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_elements")?;
    let m = cfg.get_usize("num_sets")?;
    let k = cfg.get_usize("k")?;
    if k > m {
        return Err(infeasible(ProblemId::MinimumCover, format!("cover of {k} sets from {m}")));
    }
    let parts = rng.random_range(1..=k.min(n));
    let order = permutation(n, rng);
    let mut family: Vec<Vec<usize>> = (0..parts)
        .map(|p| {
            let mut s: Vec<usize> = order.iter().skip(p).step_by(parts).copied().collect();
            s.sort_unstable();
            s
        })
        .collect();
    let max_size = (2 * n.div_ceil(k)).min(n);
    add_distractors(ProblemId::MinimumCover, &mut family, m - parts, |r| random_set(n, 1..=max_size, r), rng)?;
    let planted = shuffle_family(&mut family, parts, rng);
    let inst = MinimumCover { universe_size: n, sets: family, k };
    Ok((Payload::MinimumCover(inst), Value::from(planted)))
}

pub(crate) fn verify_minimum_cover(inst: &MinimumCover, candidate: &Value) -> Check {
    let raw = int_list(candidate, "set indices")?;
    let idx: HashSet<usize> = raw
        .iter()
        .map(|&i| index(i, inst.sets.len()).ok_or_else(|| problem_error(1, format!("set {i} is outside 0..{}", inst.sets.len()))))
        .collect::<Result<_, _>>()?;
    if idx.len() > inst.k {
        return Err(problem_error(2, format!("{} sets chosen, limit is {}", idx.len(), inst.k)));
    }
    let covered: HashSet<usize> = idx.iter().flat_map(|&i| inst.sets[i].iter().copied()).collect();
    if let Some(e) = (0..inst.universe_size).find(|e| !covered.contains(e)) {
        return Err(problem_error(3, format!("element {e} is not covered")));
    }
    Ok(())
}
