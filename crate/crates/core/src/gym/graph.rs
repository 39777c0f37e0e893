//! Graph problems: Vertex Cover, TSP, Hamiltonian Cycle, 3-COL, Max Leaf
//! Spanning Tree, Bandwidth, Clique, Independent Set, Dominating Set.

use std::collections::HashSet;

use rand::{Rng, RngCore};
use serde_json::Value;

use super::candidate::{int_list, index};
use super::sample::{choose, composition, permutation};
use super::{format_error, infeasible, problem_error, Check, Rejection};
use crate::error::Result;
use crate::model::schema::{
    Bandwidth, Edge, GraphWithBound, HamiltonianCycle, MaxLeafSpanningTree, Payload, ThreeColoring,
    TravelingSalesman,
};
use crate::model::{GenConfig, ProblemId};

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn edge_set(edges: &[Edge]) -> HashSet<(usize, usize)> {
    edges.iter().map(|&[u, v]| key(u, v)).collect()
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

fn to_edges(mut pairs: Vec<(usize, usize)>) -> Vec<Edge> {
    pairs.sort_unstable();
    pairs.into_iter().map(|(u, v)| [u, v]).collect()
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Extra edge count used where only the node count is configurable.
fn dense_target(n: usize) -> usize {
    n * 3 / 2
}

pub(crate) fn generate_vertex_cover(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_nodes")?;
    let k = cfg.get_usize("cover_size")?;
    if k > n || n < 2 {
        return Err(infeasible(ProblemId::VertexCover, format!("cover of {k} in a {n}-node graph")));
    }
    let cover = sorted(choose(&(0..n).collect::<Vec<_>>(), k, rng));
    let in_cover: HashSet<usize> = cover.iter().copied().collect();
    let pool: Vec<_> = all_pairs(n).filter(|(u, v)| in_cover.contains(u) || in_cover.contains(v)).collect();
    let edges = choose(&pool, dense_target(n).min(pool.len()), rng);
    let g = GraphWithBound { num_nodes: n, edges: to_edges(edges), k };
    Ok((Payload::VertexCover(g), Value::from(cover)))
}

pub(crate) fn verify_vertex_cover(g: &GraphWithBound, candidate: &Value) -> Check {
    let nodes = int_list(candidate, "cover").map_err(|r| problem_error(1, r.message))?;
    if nodes.is_empty() {
        return Err(problem_error(2, "the cover is empty"));
    }
    let nodes = node_indices(&nodes, g.num_nodes).map_err(|bad| problem_error(3, bad))?;
    let cover: HashSet<usize> = nodes.into_iter().collect();
    if cover.len() > g.k {
        return Err(problem_error(4, format!("cover has {} nodes, limit is {}", cover.len(), g.k)));
    }
    if let Some([u, v]) = g.edges.iter().find(|[u, v]| !cover.contains(u) && !cover.contains(v)) {
        return Err(problem_error(5, format!("edge [{u}, {v}] is not covered")));
    }
    Ok(())
}

fn node_indices(raw: &[i64], n: usize) -> std::result::Result<Vec<usize>, String> {
    raw.iter()
        .map(|&x| index(x, n).ok_or_else(|| format!("node {x} is outside 0..{n}")))
        .collect()
}

pub(crate) fn generate_tsp(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_cities")?;
    let bound = cfg.get_int("target_length")?;
    if n < 3 || bound < n as u64 {
        return Err(infeasible(
            ProblemId::TravelingSalesman,
            format!("need at least 3 cities and target_length >= num_cities, got {n} and {bound}"),
        ));
    }
    let tour = permutation(n, rng);
    let total = rng.random_range(n as u64..=bound);
    let legs = composition(total, n, rng);
    let q = bound.div_ceil(n as u64);
    let mut dist = vec![vec![0u64; n]; n];
    for (u, v) in all_pairs(n) {
        let d = rng.random_range(q..=2 * q);
        dist[u][v] = d;
        dist[v][u] = d;
    }
    for (i, leg) in legs.into_iter().enumerate() {
        let (u, v) = (tour[i], tour[(i + 1) % n]);
        dist[u][v] = leg;
        dist[v][u] = leg;
    }
    let inst = TravelingSalesman { num_cities: n, dist, target_length: bound };
    Ok((Payload::TravelingSalesman(inst), Value::from(tour)))
}

/// Checks that `order` is a permutation of `0..n`: wrong length, index
/// out of range, repeat. Returns the positions as indices.
fn permutation_checks(
    order: &[i64],
    n: usize,
    codes: (u8, u8, u8),
) -> std::result::Result<Vec<usize>, Rejection> {
    if order.len() != n {
        return Err(problem_error(codes.0, format!("expected {n} entries, got {}", order.len())));
    }
    let idx = node_indices(order, n).map_err(|m| problem_error(codes.1, m))?;
    let mut seen = vec![false; n];
    for &i in &idx {
        if std::mem::replace(&mut seen[i], true) {
            return Err(problem_error(codes.2, format!("{i} appears more than once")));
        }
    }
    Ok(idx)
}

pub(crate) fn verify_tsp(inst: &TravelingSalesman, candidate: &Value) -> Check {
    let tour = int_list(candidate, "tour")?;
    let tour = permutation_checks(&tour, inst.num_cities, (1, 2, 3))?;
    let n = tour.len();
    let length: u64 = (0..n).map(|i| inst.dist[tour[i]][tour[(i + 1) % n]]).sum();
    if length > inst.target_length {
        return Err(problem_error(4, format!("tour length {length} exceeds {}", inst.target_length)));
    }
    Ok(())
}

pub(crate) fn generate_hamiltonian(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_nodes")?;
    let directed = cfg.get_bool("directed")?;
    if n < 3 {
        return Err(infeasible(ProblemId::HamiltonianCycle, "a cycle needs at least 3 nodes"));
    }
    let cycle = permutation(n, rng);
    let arcs: Vec<(usize, usize)> = (0..n).map(|i| (cycle[i], cycle[(i + 1) % n])).collect();
    let (taken, pool): (HashSet<(usize, usize)>, Vec<(usize, usize)>) = if directed {
        let taken: HashSet<_> = arcs.iter().copied().collect();
        let pool = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && !taken.contains(&(u, v)))
            .collect();
        (taken, pool)
    } else {
        let taken: HashSet<_> = arcs.iter().map(|&(u, v)| key(u, v)).collect();
        let pool = all_pairs(n).filter(|p| !taken.contains(p)).collect();
        (taken, pool)
    };
    let mut edges: Vec<(usize, usize)> = taken.into_iter().collect();
    edges.extend(choose(&pool, dense_target(n).min(pool.len()), rng));
    let inst = HamiltonianCycle { num_nodes: n, edges: to_edges(edges), directed };
    Ok((Payload::HamiltonianCycle(inst), Value::from(cycle)))
}

pub(crate) fn verify_hamiltonian(inst: &HamiltonianCycle, candidate: &Value) -> Check {
    let path = int_list(candidate, "path")?;
    let n = inst.num_nodes;
    if path.len() != n && path.len() != n + 1 {
        return Err(problem_error(1, format!("path has {} nodes, expected {n}", path.len())));
    }
    if path.len() == n + 1 && path[0] != path[n] {
        return Err(problem_error(2, "path does not return to its start"));
    }
    let path = &path[..n];
    let mut seen = HashSet::new();
    if let Some(dup) = path.iter().find(|&&v| !seen.insert(v)) {
        return Err(problem_error(3, format!("node {dup} is visited more than once")));
    }
    let path = node_indices(path, n).map_err(|m| problem_error(4, m))?;
    let arcs: HashSet<(usize, usize)> = if inst.directed {
        inst.edges.iter().map(|&[u, v]| (u, v)).collect()
    } else {
        edge_set(&inst.edges)
    };
    for i in 0..n {
        let (u, v) = (path[i], path[(i + 1) % n]);
        let present = if inst.directed { arcs.contains(&(u, v)) } else { arcs.contains(&key(u, v)) };
        if !present {
            return Err(problem_error(5, format!("[{u}, {v}] is not an edge")));
        }
    }
    Ok(())
}

pub(crate) fn generate_3col(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_nodes")?;
    let m = cfg.get_usize("num_edges")?;
    let order = permutation(n, rng);
    let mut color = vec![0usize; n];
    for (pos, &v) in order.iter().enumerate() {
        color[v] = pos % 3;
    }
    let pool: Vec<_> = all_pairs(n).filter(|&(u, v)| color[u] != color[v]).collect();
    if m > pool.len() {
        return Err(infeasible(
            ProblemId::ThreeColoring,
            format!("{m} edges requested but a 3-partition of {n} nodes hosts only {}", pool.len()),
        ));
    }
    let edges = choose(&pool, m, rng);
    let inst = ThreeColoring { num_nodes: n, edges: to_edges(edges) };
    Ok((Payload::ThreeColoring(inst), Value::from(color)))
}

pub(crate) fn verify_3col(inst: &ThreeColoring, candidate: &Value) -> Check {
    let colors = int_list(candidate, "coloring")?;
    if colors.len() != inst.num_nodes {
        return Err(format_error(format!("{} colors for {} nodes", colors.len(), inst.num_nodes)));
    }
    if let Some(c) = colors.iter().find(|c| !(0..3).contains(*c)) {
        return Err(format_error(format!("color {c} is not one of 0, 1, 2")));
    }
    if let Some([u, v]) = inst.edges.iter().find(|[u, v]| colors[*u] == colors[*v]) {
        return Err(problem_error(1, format!("nodes {u} and {v} share color {}", colors[*u])));
    }
    Ok(())
}

pub(crate) fn generate_max_leaf(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_nodes")?;
    let k = cfg.get_usize("target_leaves")?;
    if k >= n || n < 3 {
        return Err(infeasible(
            ProblemId::MaxLeafSpanningTree,
            format!("{k} leaves in a {n}-node spider leaves no spine"),
        ));
    }
    let order = permutation(n, rng);
    let (spine, leaves) = order.split_at(n - k);
    let mut parent = vec![-1i64; n];
    let mut tree = HashSet::new();
    for w in spine.windows(2) {
        parent[w[1]] = w[0] as i64;
        tree.insert(key(w[0], w[1]));
    }
    for &leaf in leaves {
        let hub = spine[rng.random_range(0..spine.len())];
        parent[leaf] = hub as i64;
        tree.insert(key(leaf, hub));
    }
    let pool: Vec<_> = all_pairs(n).filter(|p| !tree.contains(p)).collect();
    let mut edges: Vec<_> = tree.into_iter().collect();
    edges.extend(choose(&pool, (n / 2).min(pool.len()), rng));
    let inst = MaxLeafSpanningTree { num_nodes: n, edges: to_edges(edges), target_leaves: k };
    Ok((Payload::MaxLeafSpanningTree(inst), Value::from(parent)))
}

pub(crate) fn verify_max_leaf(inst: &MaxLeafSpanningTree, candidate: &Value) -> Check {
    let parent = int_list(candidate, "parents")?;
    let n = inst.num_nodes;
    if parent.len() != n {
        return Err(problem_error(1, format!("{} parents for {n} nodes", parent.len())));
    }
    let edges = edge_set(&inst.edges);
    for (v, &p) in parent.iter().enumerate() {
        if p == -1 {
            continue;
        }
        match index(p, n) {
            Some(p) if p != v && edges.contains(&key(p, v)) => {}
            _ => return Err(problem_error(2, format!("[{p}, {v}] is not an edge of the graph"))),
        }
    }
    let roots = parent.iter().filter(|&&p| p == -1).count();
    if roots != 1 {
        return Err(problem_error(3, format!("tree has {roots} roots")));
    }
    // Every node must reach the root without revisiting a node.
    let mut state = vec![0u8; n]; // 0 unseen, 1 on current walk, 2 reaches root
    for start in 0..n {
        let mut walk = Vec::new();
        let mut v = start;
        loop {
            match state[v] {
                2 => break,
                1 => return Err(problem_error(4, "parent links contain a cycle")),
                _ => {}
            }
            state[v] = 1;
            walk.push(v);
            if parent[v] == -1 {
                break;
            }
            v = parent[v] as usize;
        }
        for w in walk {
            state[w] = 2;
        }
    }
    let mut degree = vec![0usize; n];
    for (v, &p) in parent.iter().enumerate() {
        if p >= 0 {
            degree[v] += 1;
            degree[p as usize] += 1;
        }
    }
    let leaves = degree.iter().filter(|&&d| d == 1).count();
    if leaves < inst.target_leaves {
        return Err(problem_error(5, format!("tree has {leaves} leaves, need {}", inst.target_leaves)));
    }
    Ok(())
}

pub(crate) fn generate_bandwidth(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_nodes")?;
    let k = cfg.get_usize("bandwidth")?;
    if k > n || n < 2 {
        return Err(infeasible(ProblemId::Bandwidth, format!("bandwidth {k} for {n} nodes")));
    }
    let layout = permutation(n, rng);
    let pool: Vec<_> = all_pairs(n).filter(|&(u, v)| layout[u].abs_diff(layout[v]) <= k).collect();
    let edges = choose(&pool, dense_target(n).min(pool.len()), rng);
    let inst = Bandwidth { num_nodes: n, edges: to_edges(edges), bandwidth: k };
    Ok((Payload::Bandwidth(inst), Value::from(layout)))
}

pub(crate) fn verify_bandwidth(inst: &Bandwidth, candidate: &Value) -> Check {
    let layout = int_list(candidate, "layout")?;
    let n = inst.num_nodes;
    if layout.len() != n {
        return Err(problem_error(1, format!("layout has {} positions for {n} nodes", layout.len())));
    }
    let layout = permutation_checks(&layout, n, (1, 2, 2))?;
    if let Some([u, v]) = inst.edges.iter().find(|[u, v]| layout[*u].abs_diff(layout[*v]) > inst.bandwidth) {
        return Err(problem_error(
            3,
            format!("edge [{u}, {v}] stretches {} > {}", layout[*u].abs_diff(layout[*v]), inst.bandwidth),
        ));
    }
    Ok(())
}

fn planted_set(problem: ProblemId, n: usize, k: usize, rng: &mut dyn RngCore) -> Result<Vec<usize>> {
    if k > n {
        return Err(infeasible(problem, format!("set of {k} nodes in a {n}-node graph")));
    }
    Ok(sorted(choose(&(0..n).collect::<Vec<_>>(), k, rng)))
}

pub(crate) fn generate_clique(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_nodes")?;
    let k = cfg.get_usize("clique_size")?;
    let clique = planted_set(ProblemId::Clique, n, k, rng)?;
    let inside: HashSet<usize> = clique.iter().copied().collect();
    let edges = all_pairs(n)
        .filter(|(u, v)| (inside.contains(u) && inside.contains(v)) || rng.random_bool(0.5))
        .collect();
    let g = GraphWithBound { num_nodes: n, edges: to_edges(edges), k };
    Ok((Payload::Clique(g), Value::from(clique)))
}

pub(crate) fn generate_independent_set(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_nodes")?;
    let k = cfg.get_usize("ind_set_size")?;
    let set = planted_set(ProblemId::IndependentSet, n, k, rng)?;
    let inside: HashSet<usize> = set.iter().copied().collect();
    let edges = all_pairs(n)
        .filter(|(u, v)| !(inside.contains(u) && inside.contains(v)) && rng.random_bool(0.5))
        .collect();
    let g = GraphWithBound { num_nodes: n, edges: to_edges(edges), k };
    Ok((Payload::IndependentSet(g), Value::from(set)))
}

pub(crate) fn generate_dominating_set(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_nodes")?;
    let k = cfg.get_usize("k")?;
    let p = cfg.get_probability("edge_prob")?;
    let set = planted_set(ProblemId::DominatingSet, n, k, rng)?;
    let inside: HashSet<usize> = set.iter().copied().collect();
    let mut edges = HashSet::new();
    for u in (0..n).filter(|u| !inside.contains(u)) {
        edges.insert(key(u, set[rng.random_range(0..k)]));
    }
    for pair in all_pairs(n) {
        if !edges.contains(&pair) && rng.random_range(0..*p.denom()) < *p.numer() {
            edges.insert(pair);
        }
    }
    let g = GraphWithBound { num_nodes: n, edges: to_edges(edges.into_iter().collect()), k };
    Ok((Payload::DominatingSet(g), Value::from(set)))
}

/// Distinct in-range node indices: codes for (out of range, repeated).
fn node_set(g: &GraphWithBound, candidate: &Value, codes: (u8, u8)) -> std::result::Result<Vec<usize>, Rejection> {
    let raw = int_list(candidate, "node set")?;
    let nodes = node_indices(&raw, g.num_nodes).map_err(|m| problem_error(codes.0, m))?;
    let mut seen = HashSet::new();
    if let Some(dup) = nodes.iter().find(|&&v| !seen.insert(v)) {
        return Err(problem_error(codes.1, format!("node {dup} is listed twice")));
    }
    Ok(nodes)
}

pub(crate) fn verify_clique(g: &GraphWithBound, candidate: &Value) -> Check {
    let nodes = node_set(g, candidate, (1, 2))?;
    if nodes.len() < g.k {
        return Err(problem_error(3, format!("{} nodes listed, need {}", nodes.len(), g.k)));
    }
    let edges = edge_set(&g.edges);
    for (i, &u) in nodes.iter().enumerate() {
        if let Some(&v) = nodes[i + 1..].iter().find(|&&v| !edges.contains(&key(u, v))) {
            return Err(problem_error(4, format!("nodes {u} and {v} are not adjacent")));
        }
    }
    Ok(())
}

pub(crate) fn verify_independent_set(g: &GraphWithBound, candidate: &Value) -> Check {
    let nodes = node_set(g, candidate, (1, 2))?;
    if nodes.len() < g.k {
        return Err(problem_error(3, format!("{} nodes listed, need {}", nodes.len(), g.k)));
    }
    let inside: HashSet<usize> = nodes.into_iter().collect();
    if let Some([u, v]) = g.edges.iter().find(|[u, v]| inside.contains(u) && inside.contains(v)) {
        return Err(problem_error(4, format!("nodes {u} and {v} are adjacent")));
    }
    Ok(())
}

pub(crate) fn verify_dominating_set(g: &GraphWithBound, candidate: &Value) -> Check {
    let nodes = node_set(g, candidate, (1, 2))?;
    if nodes.len() > g.k {
        return Err(problem_error(3, format!("{} nodes listed, limit is {}", nodes.len(), g.k)));
    }
    let mut dominated = vec![false; g.num_nodes];
    for &v in &nodes {
        dominated[v] = true;
    }
    let inside: HashSet<usize> = nodes.into_iter().collect();
    for &[u, v] in &g.edges {
        if inside.contains(&u) {
            dominated[v] = true;
        }
        if inside.contains(&v) {
            dominated[u] = true;
        }
    }
    if let Some(u) = dominated.iter().position(|d| !d) {
        return Err(problem_error(4, format!("node {u} has no neighbor in the set")));
    }
    Ok(())
}

pub(crate) fn random_node_subset(g: &GraphWithBound, rng: &mut dyn RngCore) -> Value {
    Value::from(sorted(choose(&(0..g.num_nodes).collect::<Vec<_>>(), g.k, rng)))
}

/// Random recursive tree, as a parent array.
pub(crate) fn random_tree(n: usize, rng: &mut dyn RngCore) -> Value {
    let order = permutation(n, rng);
    let mut parent = vec![-1i64; n];
    for i in 1..n {
        parent[order[i]] = order[rng.random_range(0..i)] as i64;
    }
    Value::from(parent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ErrorCode;
    use serde_json::json;

    fn code(r: Check) -> Option<ErrorCode> {
        r.err().map(|r| r.code)
    }

    fn tsp() -> TravelingSalesman {
        // Square with unit sides and diagonals of 5.
        TravelingSalesman {
            num_cities: 4,
            dist: vec![vec![0, 1, 5, 1], vec![1, 0, 1, 5], vec![5, 1, 0, 1], vec![1, 5, 1, 0]],
            target_length: 4,
        }
    }

    #[test]
    fn tsp_codes() {
        let t = tsp();
        assert_eq!(code(verify_tsp(&t, &json!([0, 1, 2, 3]))), None);
        assert_eq!(code(verify_tsp(&t, &json!([0, 1, 2]))), Some(ErrorCode::problem(1)));
        assert_eq!(code(verify_tsp(&t, &json!([0, 1, 2, 4]))), Some(ErrorCode::problem(2)));
        assert_eq!(code(verify_tsp(&t, &json!([0, 1, 1, 3]))), Some(ErrorCode::problem(3)));
        assert_eq!(code(verify_tsp(&t, &json!([0, 2, 1, 3]))), Some(ErrorCode::problem(4)));
        assert_eq!(code(verify_tsp(&t, &json!({"tour": 1}))), Some(ErrorCode::VERIFICATION));
    }

    #[test]
    fn vertex_cover_codes() {
        let g = GraphWithBound { num_nodes: 4, edges: vec![[0, 1], [1, 2], [2, 3]], k: 2 };
        assert_eq!(code(verify_vertex_cover(&g, &json!([1, 2]))), None);
        assert_eq!(code(verify_vertex_cover(&g, &json!("1,2"))), Some(ErrorCode::problem(1)));
        assert_eq!(code(verify_vertex_cover(&g, &json!([]))), Some(ErrorCode::problem(2)));
        assert_eq!(code(verify_vertex_cover(&g, &json!([1, 7]))), Some(ErrorCode::problem(3)));
        assert_eq!(code(verify_vertex_cover(&g, &json!([0, 1, 2]))), Some(ErrorCode::problem(4)));
        assert_eq!(code(verify_vertex_cover(&g, &json!([0, 3]))), Some(ErrorCode::problem(5)));
    }

    #[test]
    fn hamiltonian_codes() {
        let h = HamiltonianCycle { num_nodes: 4, edges: vec![[0, 1], [1, 2], [2, 3], [0, 3]], directed: false };
        assert_eq!(code(verify_hamiltonian(&h, &json!([0, 1, 2, 3]))), None);
        assert_eq!(code(verify_hamiltonian(&h, &json!([0, 1, 2, 3, 0]))), None);
        assert_eq!(code(verify_hamiltonian(&h, &json!([0, 1]))), Some(ErrorCode::problem(1)));
        assert_eq!(code(verify_hamiltonian(&h, &json!([0, 1, 2, 3, 1]))), Some(ErrorCode::problem(2)));
        assert_eq!(code(verify_hamiltonian(&h, &json!([0, 1, 1, 3]))), Some(ErrorCode::problem(3)));
        assert_eq!(code(verify_hamiltonian(&h, &json!([0, 1, 2, 9]))), Some(ErrorCode::problem(4)));
        assert_eq!(code(verify_hamiltonian(&h, &json!([0, 2, 1, 3]))), Some(ErrorCode::problem(5)));
        let d = HamiltonianCycle { directed: true, ..h };
        assert_eq!(code(verify_hamiltonian(&d, &json!([0, 1, 2, 3]))), Some(ErrorCode::problem(5)));
    }

    #[test]
    fn max_leaf_codes() {
        // Star around 0 plus an edge 1-2.
        let t = MaxLeafSpanningTree { num_nodes: 4, edges: vec![[0, 1], [0, 2], [0, 3], [1, 2]], target_leaves: 3 };
        assert_eq!(code(verify_max_leaf(&t, &json!([-1, 0, 0, 0]))), None);
        assert_eq!(code(verify_max_leaf(&t, &json!([-1, 0, 0]))), Some(ErrorCode::problem(1)));
        assert_eq!(code(verify_max_leaf(&t, &json!([-1, 0, 0, 1]))), Some(ErrorCode::problem(2)));
        assert_eq!(code(verify_max_leaf(&t, &json!([-1, -1, 0, 0]))), Some(ErrorCode::problem(3)));
        assert_eq!(code(verify_max_leaf(&t, &json!([-1, 2, 1, 0]))), Some(ErrorCode::problem(4)));
        assert_eq!(code(verify_max_leaf(&t, &json!([-1, 0, 1, 0]))), Some(ErrorCode::problem(5)));
    }

    #[test]
    fn bandwidth_and_coloring_codes() {
        let b = Bandwidth { num_nodes: 3, edges: vec![[0, 1], [0, 2]], bandwidth: 1 };
        assert_eq!(code(verify_bandwidth(&b, &json!([1, 0, 2]))), None);
        assert_eq!(code(verify_bandwidth(&b, &json!([1, 0]))), Some(ErrorCode::problem(1)));
        assert_eq!(code(verify_bandwidth(&b, &json!([1, 1, 2]))), Some(ErrorCode::problem(2)));
        assert_eq!(code(verify_bandwidth(&b, &json!([0, 1, 2]))), Some(ErrorCode::problem(3)));
        let c = ThreeColoring { num_nodes: 3, edges: vec![[0, 1]] };
        assert_eq!(code(verify_3col(&c, &json!([0, 1, 0]))), None);
        assert_eq!(code(verify_3col(&c, &json!([0, 0, 1]))), Some(ErrorCode::problem(1)));
        assert_eq!(code(verify_3col(&c, &json!([0, 3, 1]))), Some(ErrorCode::VERIFICATION));
    }

    #[test]
    fn set_problems_on_graphs() {
        let tri = GraphWithBound { num_nodes: 4, edges: vec![[0, 1], [0, 2], [1, 2], [2, 3]], k: 3 };
        assert_eq!(code(verify_clique(&tri, &json!([0, 1, 2]))), None);
        assert_eq!(code(verify_clique(&tri, &json!([0, 1, 5]))), Some(ErrorCode::problem(1)));
        assert_eq!(code(verify_clique(&tri, &json!([0, 1, 1]))), Some(ErrorCode::problem(2)));
        assert_eq!(code(verify_clique(&tri, &json!([0, 1]))), Some(ErrorCode::problem(3)));
        assert_eq!(code(verify_clique(&tri, &json!([0, 1, 3]))), Some(ErrorCode::problem(4)));
        let is = GraphWithBound { k: 2, ..tri.clone() };
        assert_eq!(code(verify_independent_set(&is, &json!([0, 3]))), None);
        assert_eq!(code(verify_independent_set(&is, &json!([2, 3]))), Some(ErrorCode::problem(4)));
        let ds = GraphWithBound { k: 1, ..tri };
        assert_eq!(code(verify_dominating_set(&ds, &json!([2]))), None);
        assert_eq!(code(verify_dominating_set(&ds, &json!([0, 2]))), Some(ErrorCode::problem(3)));
        assert_eq!(code(verify_dominating_set(&ds, &json!([0]))), Some(ErrorCode::problem(4)));
    }
}
