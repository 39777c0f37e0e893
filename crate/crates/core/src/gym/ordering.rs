//! Betweenness and Clustering.

use std::collections::HashSet;

use rand::{Rng, RngCore};
use serde_json::Value;

use super::candidate::{index, int_list};
use super::sample::{choose, permutation, MAX_ATTEMPTS};
use super::{infeasible, problem_error, Check};
use crate::error::Result;
use crate::model::schema::{Betweenness, Clustering, Payload};
use crate::model::{GenConfig, ProblemId};

pub(crate) fn generate_betweenness(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_element")?;
    let m = cfg.get_usize("num_triples")?;
    if n < 3 {
        return Err(infeasible(ProblemId::Betweenness, "a triple needs three elements"));
    }
    let pos = permutation(n, rng);
    let elements: Vec<usize> = (0..n).collect();
    let mut seen = HashSet::new();
    let mut triples = Vec::with_capacity(m);
    for _ in 0..m {
        let mut t = (0..MAX_ATTEMPTS)
            .map(|_| {
                let mut t = choose(&elements, 3, rng);
                t.sort_unstable_by_key(|&e| pos[e]);
                [t[0], t[1], t[2]]
            })
            .find(|t| !seen.contains(t))
            .ok_or_else(|| infeasible(ProblemId::Betweenness, format!("fewer than {m} distinct triples")))?;
        seen.insert(t);
        if rng.random_bool(0.5) {
            t.reverse();
        }
        triples.push(t);
    }
    Ok((Payload::Betweenness(Betweenness { n, triples }), Value::from(pos)))
}

pub(crate) fn verify_betweenness(inst: &Betweenness, candidate: &Value) -> Check {
    let raw = int_list(candidate, "positions")?;
    if raw.len() != inst.n {
        return Err(problem_error(1, format!("{} positions for {} elements", raw.len(), inst.n)));
    }
    let mut seen = vec![false; inst.n];
    let mut pos = Vec::with_capacity(inst.n);
    for &p in &raw {
        match index(p, inst.n) {
            Some(i) if !std::mem::replace(&mut seen[i], true) => pos.push(i),
            _ => return Err(problem_error(2, format!("positions are not a permutation of 0..{}", inst.n))),
        }
    }
    for &[a, b, c] in &inst.triples {
        let between = (pos[a] < pos[b] && pos[b] < pos[c]) || (pos[c] < pos[b] && pos[b] < pos[a]);
        if !between {
            return Err(problem_error(3, format!("{b} is not between {a} and {c}")));
        }
    }
    Ok(())
}

pub(crate) fn generate_clustering(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_elements")?;
    let bound = cfg.get_int("b")?;
    if n < 3 {
        return Err(infeasible(ProblemId::Clustering, "three clusters need three elements"));
    }
    let mut group: Vec<usize> = (0..n).map(|_| rng.random_range(0..3)).collect();
    let order = permutation(n, rng);
    for (g, &e) in order.iter().take(3).enumerate() {
        group[e] = g;
    }
    let mut dist = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let d = if group[i] == group[j] {
                rng.random_range(1..=bound)
            } else {
                rng.random_range(bound + 1..=2 * bound)
            };
            dist[i][j] = d;
            dist[j][i] = d;
        }
    }
    let inst = Clustering { num_elements: n, dist, bound };
    Ok((Payload::Clustering(inst), Value::from(group)))
}

pub(crate) fn verify_clustering(inst: &Clustering, candidate: &Value) -> Check {
    let raw = int_list(candidate, "clusters")?;
    let n = inst.num_elements;
    if raw.len() != n {
        return Err(problem_error(1, format!("{} labels for {n} elements", raw.len())));
    }
    let label = raw
        .iter()
        .map(|&c| index(c, 3).ok_or_else(|| problem_error(2, format!("cluster {c} is not 0, 1 or 2"))))
        .collect::<Result<Vec<_>, _>>()?;
    for i in 0..n {
        for j in i + 1..n {
            if label[i] == label[j] && inst.dist[i][j] > inst.bound {
                return Err(problem_error(
                    3,
                    format!("{i} and {j} share a cluster at distance {} > {}", inst.dist[i][j], inst.bound),
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ErrorCode;
    use serde_json::json;

    fn code(r: Check) -> Option<ErrorCode> {
        r.err().map(|r| r.code)
    }

    #[test]
    fn betweenness_codes() {
        let b = Betweenness { n: 4, triples: vec![[0, 1, 2], [3, 2, 1]] };
        assert_eq!(code(verify_betweenness(&b, &json!([0, 1, 2, 3]))), None);
        assert_eq!(code(verify_betweenness(&b, &json!([0, 1, 2]))), Some(ErrorCode::problem(1)));
        assert_eq!(code(verify_betweenness(&b, &json!([0, 1, 1, 3]))), Some(ErrorCode::problem(2)));
        assert_eq!(code(verify_betweenness(&b, &json!([1, 0, 2, 3]))), Some(ErrorCode::problem(3)));
    }

    #[test]
    fn clustering_codes() {
        let c = Clustering { num_elements: 3, dist: vec![vec![0, 1, 9], vec![1, 0, 9], vec![9, 9, 0]], bound: 5 };
        assert_eq!(code(verify_clustering(&c, &json!([0, 0, 1]))), None);
        assert_eq!(code(verify_clustering(&c, &json!([0, 0]))), Some(ErrorCode::problem(1)));
        assert_eq!(code(verify_clustering(&c, &json!([0, 0, 3]))), Some(ErrorCode::problem(2)));
        assert_eq!(code(verify_clustering(&c, &json!([0, 1, 0]))), Some(ErrorCode::problem(3)));
    }
}
