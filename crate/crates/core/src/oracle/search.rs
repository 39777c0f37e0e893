//! Exhaustive searches, one per problem.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use serde_json::Value;

use super::OracleBudget;
use crate::error::{Error, Result};
use crate::model::schema::*;

/// Raised inside a search when the budget runs out.
pub(super) struct Stop;

pub(super) type Found = std::result::Result<Option<Value>, Stop>;

pub(super) struct Meter {
    used: u64,
    max: u64,
    deadline: Instant,
}

impl Meter {
    pub(super) fn new(budget: &OracleBudget) -> Self {
        Meter { used: 0, max: budget.max_states, deadline: Instant::now() + Duration::from_millis(budget.max_millis) }
    }

    fn tick(&mut self) -> std::result::Result<(), Stop> {
        self.used += 1;
        if self.used > self.max || (self.used.is_multiple_of(1024) && Instant::now() > self.deadline) {
            return Err(Stop);
        }
        Ok(())
    }
}

/// Refuses full enumerations larger than the state budget.
fn guard(space: f64, budget: &OracleBudget) -> Result<()> {
    if space > budget.max_states as f64 {
        Err(Error::UnsupportedSize { states: space, budget: budget.max_states })
    } else {
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k.min(n)).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Every vector in `0..radix` of length `len`, in lexicographic order.
fn odometer(len: usize, radix: usize, meter: &mut Meter, mut accept: impl FnMut(&[usize]) -> bool) -> std::result::Result<Option<Vec<usize>>, Stop> {
    let mut digits = vec![0usize; len];
    loop {
        meter.tick()?;
        if accept(&digits) {
            return Ok(Some(digits));
        }
        let mut i = 0;
        loop {
            if i == len {
                return Ok(None);
            }
            digits[i] += 1;
            if digits[i] < radix {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Every `k`-subset of `0..n` as an increasing index list.
fn combinations(n: usize, k: usize, meter: &mut Meter, mut accept: impl FnMut(&[usize]) -> bool) -> std::result::Result<Option<Vec<usize>>, Stop> {
    if k > n {
        return Ok(None);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        meter.tick()?;
        if accept(&idx) {
            return Ok(Some(idx));
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return Ok(None);
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Depth-first search over orderings of `0..n`. `partial_ok` sees each
/// prefix as it grows and can cut the branch; complete orderings that
/// survive are returned.
fn orderings(
    n: usize,
    first: Option<usize>,
    meter: &mut Meter,
    partial_ok: &mut dyn FnMut(&[usize]) -> bool,
) -> std::result::Result<Option<Vec<usize>>, Stop> {
    fn go(
        n: usize,
        prefix: &mut Vec<usize>,
        used: &mut [bool],
        meter: &mut Meter,
        ok: &mut dyn FnMut(&[usize]) -> bool,
    ) -> std::result::Result<bool, Stop> {
        if prefix.len() == n {
            return Ok(true);
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            meter.tick()?;
            prefix.push(v);
            used[v] = true;
            if ok(prefix) && go(n, prefix, used, meter, ok)? {
                return Ok(true);
            }
            used[v] = false;
            prefix.pop();
        }
        Ok(false)
    }
    let mut used = vec![false; n];
    let mut prefix = Vec::with_capacity(n);
    if let Some(f) = first {
        if f >= n {
            return Ok(None);
        }
        prefix.push(f);
        used[f] = true;
        if !partial_ok(&prefix) {
            return Ok(None);
        }
    }
    Ok(go(n, &mut prefix, &mut used, meter, partial_ok)?.then_some(prefix))
}

fn adjacency(n: usize, edges: &[Edge], directed: bool) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &[u, v] in edges {
        adj[u][v] = true;
        if !directed {
            adj[v][u] = true;
        }
    }
    adj
}

/// Inverts "node at position i" into "position of node".
fn positions(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

fn bits_value(d: &[usize]) -> Value {
    Value::from(d.iter().map(|&b| b == 1).collect::<Vec<_>>())
}

fn labels_value(d: &[usize]) -> Value {
    Value::from(d.to_vec())
}

/// Runs the search for one payload. `Err` only for budget refusals.
pub(super) fn run(payload: &Payload, budget: &OracleBudget, meter: &mut Meter) -> Result<Found> {
    Ok(match payload {
        Payload::ThreeSat(x) => {
            guard(2f64.powi(x.num_vars as i32), budget)?;
            odometer(x.num_vars, 2, meter, |a| {
                x.clauses.iter().all(|c| c.iter().any(|&l| (a[l.unsigned_abs() as usize - 1] == 1) == (l > 0)))
            })
            .map(|o| o.map(|a| bits_value(&a)))
        }
        Payload::VertexCover(g) => {
            guard(binomial(g.num_nodes, g.k), budget)?;
            combinations(g.num_nodes, g.k, meter, |w| {
                g.edges.iter().all(|e| w.contains(&e[0]) || w.contains(&e[1]))
            })
            .map(|o| o.map(Value::from))
        }
        Payload::Clique(g) => {
            guard(binomial(g.num_nodes, g.k), budget)?;
            let adj = adjacency(g.num_nodes, &g.edges, false);
            combinations(g.num_nodes, g.k, meter, |w| {
                w.iter().enumerate().all(|(i, &u)| w[i + 1..].iter().all(|&v| adj[u][v]))
            })
            .map(|o| o.map(Value::from))
        }
        Payload::IndependentSet(g) => {
            guard(binomial(g.num_nodes, g.k), budget)?;
            let adj = adjacency(g.num_nodes, &g.edges, false);
            combinations(g.num_nodes, g.k, meter, |w| {
                w.iter().enumerate().all(|(i, &u)| w[i + 1..].iter().all(|&v| !adj[u][v]))
            })
            .map(|o| o.map(Value::from))
        }
        Payload::DominatingSet(g) => {
            guard(binomial(g.num_nodes, g.k), budget)?;
            let adj = adjacency(g.num_nodes, &g.edges, false);
            combinations(g.num_nodes, g.k, meter, |w| {
                (0..g.num_nodes).all(|u| w.contains(&u) || w.iter().any(|&d| adj[u][d]))
            })
            .map(|o| o.map(Value::from))
        }
        Payload::ThreeDimensionalMatching(x) => matching_3d(x, meter),
        Payload::TravelingSalesman(x) => {
            let n = x.num_cities;
            let mut ok = |p: &[usize]| {
                let mut len: u64 = p.windows(2).map(|w| x.dist[w[0]][w[1]]).sum();
                if p.len() == n {
                    len += x.dist[p[n - 1]][p[0]];
                }
                len <= x.target_length
            };
            orderings(n, Some(0), meter, &mut ok).map(|o| o.map(Value::from))
        }
        Payload::HamiltonianCycle(x) => {
            let n = x.num_nodes;
            let adj = adjacency(n, &x.edges, x.directed);
            let mut ok = |p: &[usize]| {
                let k = p.len();
                (k < 2 || adj[p[k - 2]][p[k - 1]]) && (k < n || adj[p[n - 1]][p[0]])
            };
            orderings(n, Some(0), meter, &mut ok).map(|o| o.map(Value::from))
        }
        Payload::ThreeColoring(x) => {
            guard(3f64.powi(x.num_nodes as i32), budget)?;
            odometer(x.num_nodes, 3, meter, |c| x.edges.iter().all(|e| c[e[0]] != c[e[1]])).map(|o| o.map(|c| labels_value(&c)))
        }
        Payload::BinPacking(x) => {
            let (sizes, bins, cap) = (x.sizes.clone(), x.bins, x.capacity);
            let fits = |loads: &[u64], rest: u64| {
                loads.iter().all(|&l| l <= cap) && loads.iter().map(|&l| cap - l).sum::<u64>() >= rest
            };
            groups(&sizes, bins, meter, &mut |l: &[u64], rest: u64| fits(l, rest), &mut |_: &[usize]| true)
        }
        Payload::MaxLeafSpanningTree(x) => {
            guard(binomial(x.num_nodes, x.target_leaves), budget)?;
            max_leaf(x, meter)
        }
        Payload::QuadraticDiophantine(x) => {
            guard(((x.c / x.a) as f64).sqrt(), budget)?;
            let mut xv = 1u64;
            let mut found = None;
            while (x.a as u128) * (xv as u128).pow(2) < x.c as u128 {
                if meter.tick().is_err() {
                    return Ok(Err(Stop));
                }
                let rest = x.c - x.a * xv * xv;
                if rest.is_multiple_of(x.b) {
                    found = Some(Value::from(vec![xv, rest / x.b]));
                    break;
                }
                xv += 1;
            }
            Ok(found)
        }
        Payload::MinSumOfSquares(x) => {
            let bound = x.bound as u128;
            let fits = |loads: &[u64], rest: u64| least_square_sum(loads, rest) <= bound;
            groups(&x.sizes, x.k, meter, &mut |l: &[u64], rest: u64| fits(l, rest), &mut |_: &[usize]| true)
        }
        Payload::Superstring(x) => superstring(x, budget, meter)?,
        Payload::Bandwidth(x) => {
            let n = x.num_nodes;
            let adj = adjacency(n, &x.edges, false);
            // Order lists nodes by position; a new node must sit within
            // `bandwidth` of every placed neighbor.
            let mut ok = |p: &[usize]| {
                let k = p.len() - 1;
                let v = p[k];
                p[..k].iter().enumerate().all(|(i, &u)| !adj[u][v] || k - i <= x.bandwidth)
            };
            orderings(n, None, meter, &mut ok).map(|o| o.map(|order| Value::from(positions(&order))))
        }
        Payload::SetSplitting(x) => {
            guard(2f64.powi(x.universe_size as i32), budget)?;
            odometer(x.universe_size, 2, meter, |side| {
                x.subsets.iter().all(|s| s.iter().any(|&e| side[e] == 0) && s.iter().any(|&e| side[e] == 1))
            })
            .map(|o| o.map(|s| labels_value(&s)))
        }
        Payload::SetPacking(x) => packing(x, meter),
        Payload::ExactCover3Sets(x) => exact_cover(x, meter),
        Payload::MinimumCover(x) => {
            let k = x.k.min(x.sets.len());
            guard(binomial(x.sets.len(), k), budget)?;
            combinations(x.sets.len(), k, meter, |pick| {
                let mut hit = vec![false; x.universe_size];
                for &i in pick {
                    for &e in &x.sets[i] {
                        hit[e] = true;
                    }
                }
                hit.iter().all(|&h| h)
            })
            .map(|o| o.map(Value::from))
        }
        Payload::Partition(x) => {
            guard(2f64.powi(x.sizes.len() as i32), budget)?;
            odometer(x.sizes.len(), 2, meter, |side| {
                let ones: u64 = x.sizes.iter().zip(side).filter(|(_, &s)| s == 1).map(|(a, _)| a).sum();
                2 * ones == x.sizes.iter().sum::<u64>()
            })
            .map(|o| o.map(|s| labels_value(&s)))
        }
        Payload::SubsetSum(x) => {
            guard(2f64.powi(x.sizes.len() as i32), budget)?;
            odometer(x.sizes.len(), 2, meter, |pick| {
                x.sizes.iter().zip(pick).filter(|(_, &p)| p == 1).map(|(a, _)| a).sum::<u64>() == x.target
            })
            .map(|o| o.map(|p| Value::from((0..p.len()).filter(|&i| p[i] == 1).collect::<Vec<_>>())))
        }
        Payload::HittingString(x) => {
            guard(2f64.powi(x.n as i32), budget)?;
            let pats: Vec<&[u8]> = x.strings.iter().map(|s| s.as_bytes()).collect();
            odometer(x.n, 2, meter, |b| {
                pats.iter().all(|p| p.iter().zip(b).any(|(&c, &bit)| c == b'0' + bit as u8))
            })
            .map(|o| o.map(|b| Value::from(b.iter().map(|&d| if d == 1 { '1' } else { '0' }).collect::<String>())))
        }
        Payload::QuadraticCongruences(x) => {
            guard(x.c.saturating_sub(1) as f64, budget)?;
            let mut found = None;
            for v in 1..x.c {
                if meter.tick().is_err() {
                    return Ok(Err(Stop));
                }
                if (v as u128 * v as u128) % x.b as u128 == x.a as u128 {
                    found = Some(Value::from(v));
                    break;
                }
            }
            Ok(found)
        }
        Payload::Betweenness(x) => {
            let n = x.n;
            // Prefix lists elements by position. A triple is decided once
            // all three members are placed.
            let mut ok = |p: &[usize]| {
                let last = p[p.len() - 1];
                let pos = |e: usize| p.iter().position(|&v| v == e);
                x.triples.iter().filter(|t| t.contains(&last)).all(|&[a, b, c]| match (pos(a), pos(b), pos(c)) {
                    (Some(pa), Some(pb), Some(pc)) => (pa < pb && pb < pc) || (pc < pb && pb < pa),
                    _ => true,
                })
            };
            orderings(n, None, meter, &mut ok).map(|o| o.map(|order| Value::from(positions(&order))))
        }
        Payload::Clustering(x) => {
            guard(3f64.powi(x.num_elements as i32), budget)?;
            let n = x.num_elements;
            odometer(n, 3, meter, |g| {
                (0..n).all(|i| (i + 1..n).all(|j| g[i] != g[j] || x.dist[i][j] <= x.bound))
            })
            .map(|o| o.map(|g| labels_value(&g)))
        }
    })
}

/// Lower bound on the sum of squared loads once `rest` more weight is
/// spread over the groups: fill the lightest groups up to a common level.
fn least_square_sum(loads: &[u64], rest: u64) -> u128 {
    let mut sorted: Vec<u128> = loads.iter().map(|&l| l as u128).collect();
    sorted.sort_unstable();
    let mut rest = rest as u128;
    let (mut filled, mut level) = (1, sorted[0]);
    while filled < sorted.len() {
        let cost = (sorted[filled] - level) * filled as u128;
        if cost > rest {
            break;
        }
        rest -= cost;
        level = sorted[filled];
        filled += 1;
    }
    let (q, r) = (rest / filled as u128, rest % filled as u128);
    let raised: u128 = (0..filled as u128).map(|i| (level + q + u128::from(i < r)).pow(2)).sum();
    raised + sorted[filled..].iter().map(|l| l * l).sum::<u128>()
}

/// Assigns items (largest first) to `k` groups with symmetry breaking: an
/// item may open at most one new group, and lighter groups are tried
/// first. `loads_ok` prunes partial loads given the weight still to place;
/// `done` accepts a complete assignment.
fn groups(
    sizes: &[u64],
    k: usize,
    meter: &mut Meter,
    loads_ok: &mut dyn FnMut(&[u64], u64) -> bool,
    done: &mut dyn FnMut(&[usize]) -> bool,
) -> Found {
    let mut order: Vec<usize> = (0..sizes.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(sizes[i]));
    let mut loads = vec![0u64; k];
    let mut group = vec![0usize; sizes.len()];

    #[allow(clippy::too_many_arguments)]
    fn go(
        depth: usize,
        opened: usize,
        rest: u64,
        order: &[usize],
        sizes: &[u64],
        loads: &mut [u64],
        group: &mut [usize],
        meter: &mut Meter,
        loads_ok: &mut dyn FnMut(&[u64], u64) -> bool,
        done: &mut dyn FnMut(&[usize]) -> bool,
    ) -> std::result::Result<bool, Stop> {
        if depth == order.len() {
            return Ok(done(group));
        }
        let item = order[depth];
        let rest = rest - sizes[item];
        let mut choices: Vec<usize> = (0..(opened + 1).min(loads.len())).collect();
        choices.sort_by_key(|&g| loads[g]);
        for g in choices {
            meter.tick()?;
            loads[g] += sizes[item];
            group[item] = g;
            let next_open = opened.max(g + 1);
            if loads_ok(loads, rest) && go(depth + 1, next_open, rest, order, sizes, loads, group, meter, loads_ok, done)? {
                return Ok(true);
            }
            loads[g] -= sizes[item];
        }
        Ok(false)
    }

    let total = sizes.iter().sum();
    let hit = go(0, 0, total, &order, sizes, &mut loads, &mut group, meter, loads_ok, done)?;
    Ok(hit.then(|| Value::from(group)))
}

fn matching_3d(x: &ThreeDimensionalMatching, meter: &mut Meter) -> Found {
    let n = x.n;
    let mut by_x: Vec<Vec<[usize; 3]>> = vec![Vec::new(); n];
    for &t in &x.triples {
        by_x[t[0]].push(t);
    }
    fn go(
        i: usize,
        by_x: &[Vec<[usize; 3]>],
        used: &mut HashSet<usize>,
        picked: &mut Vec<[usize; 3]>,
        meter: &mut Meter,
    ) -> std::result::Result<bool, Stop> {
        if i == by_x.len() {
            return Ok(true);
        }
        for &t in &by_x[i] {
            meter.tick()?;
            if used.contains(&t[1]) || used.contains(&t[2]) {
                continue;
            }
            used.extend([t[1], t[2]]);
            picked.push(t);
            if go(i + 1, by_x, used, picked, meter)? {
                return Ok(true);
            }
            picked.pop();
            used.remove(&t[1]);
            used.remove(&t[2]);
        }
        Ok(false)
    }
    let mut picked = Vec::new();
    let hit = go(0, &by_x, &mut HashSet::new(), &mut picked, meter)?;
    Ok(hit.then(|| Value::from(picked.iter().map(|t| t.to_vec()).collect::<Vec<_>>())))
}

fn packing(x: &SetPacking, meter: &mut Meter) -> Found {
    fn go(
        start: usize,
        need: usize,
        sets: &[Vec<usize>],
        used: &mut [bool],
        picked: &mut Vec<usize>,
        meter: &mut Meter,
    ) -> std::result::Result<bool, Stop> {
        if need == 0 {
            return Ok(true);
        }
        for i in start..sets.len() {
            if sets.len() - i < need {
                break;
            }
            meter.tick()?;
            if sets[i].iter().any(|&e| used[e]) {
                continue;
            }
            for &e in &sets[i] {
                used[e] = true;
            }
            picked.push(i);
            if go(i + 1, need - 1, sets, used, picked, meter)? {
                return Ok(true);
            }
            picked.pop();
            for &e in &sets[i] {
                used[e] = false;
            }
        }
        Ok(false)
    }
    let mut picked = Vec::new();
    let mut used = vec![false; x.universe_size];
    let hit = go(0, x.k, &x.subsets, &mut used, &mut picked, meter)?;
    Ok(hit.then(|| Value::from(picked)))
}

fn exact_cover(x: &ExactCover3Sets, meter: &mut Meter) -> Found {
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); x.universe_size];
    for (i, s) in x.subsets.iter().enumerate() {
        for &e in s {
            containing[e].push(i);
        }
    }
    fn go(
        x: &ExactCover3Sets,
        containing: &[Vec<usize>],
        covered: &mut [bool],
        picked: &mut Vec<usize>,
        meter: &mut Meter,
    ) -> std::result::Result<bool, Stop> {
        let Some(e) = covered.iter().position(|&c| !c) else {
            return Ok(true);
        };
        for &i in &containing[e] {
            meter.tick()?;
            let s = x.subsets[i];
            if s.iter().any(|&m| covered[m]) {
                continue;
            }
            for &m in &s {
                covered[m] = true;
            }
            picked.push(i);
            if go(x, containing, covered, picked, meter)? {
                return Ok(true);
            }
            picked.pop();
            for &m in &s {
                covered[m] = false;
            }
        }
        Ok(false)
    }
    let mut picked = Vec::new();
    let mut covered = vec![false; x.universe_size];
    let hit = go(x, &containing, &mut covered, &mut picked, meter)?;
    Ok(hit.then(|| {
        picked.sort_unstable();
        Value::from(picked)
    }))
}

/// A spanning tree with at least `k` leaves exists iff some `k`-set L has
/// the rest of the graph connected and every node of L adjacent to it (for
/// at least three nodes). The tree is a BFS tree of the rest with L hung
/// off it.
fn max_leaf(x: &MaxLeafSpanningTree, meter: &mut Meter) -> Found {
    let n = x.num_nodes;
    let k = x.target_leaves;
    let adj = adjacency(n, &x.edges, false);
    if n <= 2 {
        // Two nodes joined by an edge form a tree with two leaves.
        let ok = n == 2 && adj[0][1] && k <= 2;
        return Ok(ok.then(|| Value::from(vec![-1i64, 0])));
    }
    if k >= n {
        return Ok(None);
    }
    let mut tree = None;
    combinations(n, k, meter, |leaves| {
        let mut is_leaf = vec![false; n];
        for &l in leaves {
            is_leaf[l] = true;
        }
        let root = (0..n).find(|&v| !is_leaf[v]).expect("k < n");
        let mut parent = vec![-2i64; n];
        parent[root] = -1;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if adj[u][v] && !is_leaf[v] && parent[v] == -2 {
                    parent[v] = u as i64;
                    queue.push_back(v);
                }
            }
        }
        if (0..n).any(|v| !is_leaf[v] && parent[v] == -2) {
            return false;
        }
        for &l in leaves {
            match (0..n).find(|&u| adj[l][u] && !is_leaf[u]) {
                Some(u) => parent[l] = u as i64,
                None => return false,
            }
        }
        tree = Some(parent);
        true
    })
    .map(|o| o.and(tree).map(Value::from))
}

/// Shortest common superstring by dynamic programming over subsets of the
/// strings that are not substrings of others.
fn superstring(x: &Superstring, budget: &OracleBudget, meter: &mut Meter) -> Result<Found> {
    let mut words: Vec<Vec<char>> = Vec::new();
    let mut uniq: Vec<&String> = x.strings.iter().collect();
    uniq.sort();
    uniq.dedup();
    for s in &uniq {
        if !uniq.iter().any(|t| t.len() > s.len() && t.contains(s.as_str())) {
            words.push(s.chars().collect());
        }
    }
    let m = words.len();
    guard(2f64.powi(m as i32) * (m * m) as f64, budget)?;
    let overlap = |a: &[char], b: &[char]| (1..a.len().min(b.len())).rev().find(|&o| a[a.len() - o..] == b[..o]).unwrap_or(0);
    let ov: Vec<Vec<usize>> = (0..m).map(|i| (0..m).map(|j| overlap(&words[i], &words[j])).collect()).collect();
    // best[mask][last] = shortest length covering `mask` and ending in `last`.
    let full = (1usize << m) - 1;
    let mut best = vec![vec![usize::MAX; m]; 1 << m];
    let mut from = vec![vec![usize::MAX; m]; 1 << m];
    for i in 0..m {
        best[1 << i][i] = words[i].len();
    }
    for mask in 1..=full {
        for last in 0..m {
            let cur = best[mask][last];
            if cur == usize::MAX {
                continue;
            }
            for next in (0..m).filter(|&j| mask & (1 << j) == 0) {
                if meter.tick().is_err() {
                    return Ok(Err(Stop));
                }
                let len = cur + words[next].len() - ov[last][next];
                let nm = mask | (1 << next);
                if len < best[nm][next] {
                    best[nm][next] = len;
                    from[nm][next] = last;
                }
            }
        }
    }
    let Some(mut last) = (0..m).min_by_key(|&i| best[full][i]) else {
        return Ok(Ok(None));
    };
    if best[full][last] > x.k {
        return Ok(Ok(None));
    }
    let mut chain = Vec::with_capacity(m);
    let mut mask = full;
    loop {
        chain.push(last);
        let prev = from[mask][last];
        mask &= !(1 << last);
        if mask == 0 {
            break;
        }
        last = prev;
    }
    chain.reverse();
    let mut out: Vec<char> = words[chain[0]].clone();
    for w in chain.windows(2) {
        out.extend_from_slice(&words[w[1]][ov[w[0]][w[1]]..]);
    }
    Ok(Ok(Some(Value::from(out.into_iter().collect::<String>()))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_square_sum_matches_greedy_filling() {
        assert_eq!(least_square_sum(&[0, 0], 4), 8);
        assert_eq!(least_square_sum(&[5, 0], 3), 25 + 9);
        assert_eq!(least_square_sum(&[5, 0], 7), 36 + 36);
        assert_eq!(least_square_sum(&[5, 1], 8), 49 + 49);
        assert_eq!(least_square_sum(&[2, 2, 9], 1), 9 + 4 + 81);
    }
}
