//! Yes/no acceptance predicate for every problem, written separately from
//! the gym verifiers so the two can be checked against each other.

use std::collections::{BTreeSet, HashMap};

use serde_json::Value;

use crate::model::schema::Payload;

fn ints(v: &Value) -> Option<Vec<i64>> {
    v.as_array()?.iter().map(Value::as_i64).collect()
}

fn bits(v: &Value) -> Option<Vec<bool>> {
    v.as_array()?
        .iter()
        .map(|x| match x {
            Value::Bool(b) => Some(*b),
            _ => match x.as_i64()? {
                0 => Some(false),
                1 => Some(true),
                _ => None,
            },
        })
        .collect()
}

/// Values as indices below `n`.
fn below(raw: &[i64], n: usize) -> Option<Vec<usize>> {
    raw.iter().map(|&x| if x >= 0 && (x as u64) < n as u64 { Some(x as usize) } else { None }).collect()
}

fn distinct(xs: &[usize]) -> bool {
    xs.iter().collect::<BTreeSet<_>>().len() == xs.len()
}

fn is_permutation(xs: &[usize], n: usize) -> bool {
    xs.len() == n && distinct(xs)
}

fn adjacency(n: usize, edges: &[[usize; 2]], directed: bool) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &[u, v] in edges {
        adj[u][v] = true;
        if !directed {
            adj[v][u] = true;
        }
    }
    adj
}

/// True when `candidate` is an accepted solution of `payload`.
pub fn satisfies(payload: &Payload, candidate: &Value) -> bool {
    check(payload, candidate).unwrap_or(false)
}

fn check(payload: &Payload, c: &Value) -> Option<bool> {
    Some(match payload {
        Payload::ThreeSat(x) => {
            let a = bits(c)?;
            a.len() == x.num_vars
                && x.clauses.iter().all(|cl| {
                    cl.iter().any(|&l| {
                        let value = a[(l.abs() - 1) as usize];
                        if l > 0 { value } else { !value }
                    })
                })
        }
        Payload::VertexCover(g) => {
            let w = below(&ints(c)?, g.num_nodes)?;
            let w: BTreeSet<usize> = w.into_iter().collect();
            !w.is_empty() && w.len() <= g.k && g.edges.iter().all(|e| w.contains(&e[0]) || w.contains(&e[1]))
        }
        Payload::Clique(g) => {
            let w = below(&ints(c)?, g.num_nodes)?;
            let adj = adjacency(g.num_nodes, &g.edges, false);
            distinct(&w) && w.len() >= g.k && w.iter().all(|&u| w.iter().all(|&v| u == v || adj[u][v]))
        }
        Payload::IndependentSet(g) => {
            let w = below(&ints(c)?, g.num_nodes)?;
            let adj = adjacency(g.num_nodes, &g.edges, false);
            distinct(&w) && w.len() >= g.k && w.iter().all(|&u| w.iter().all(|&v| !adj[u][v]))
        }
        Payload::DominatingSet(g) => {
            let w = below(&ints(c)?, g.num_nodes)?;
            let adj = adjacency(g.num_nodes, &g.edges, false);
            distinct(&w)
                && w.len() <= g.k
                && (0..g.num_nodes).all(|u| w.contains(&u) || w.iter().any(|&d| adj[u][d]))
        }
        Payload::ThreeDimensionalMatching(x) => {
            let picked: Vec<Vec<i64>> = c.as_array()?.iter().map(ints).collect::<Option<_>>()?;
            let known: BTreeSet<Vec<i64>> = x.triples.iter().map(|t| t.iter().map(|&e| e as i64).collect()).collect();
            let coords: Vec<i64> = picked.iter().flatten().copied().collect();
            picked.len() == x.n
                && picked.iter().all(|t| known.contains(t))
                && coords.iter().collect::<BTreeSet<_>>().len() == coords.len()
        }
        Payload::TravelingSalesman(x) => {
            let t = below(&ints(c)?, x.num_cities)?;
            let n = t.len();
            is_permutation(&t, x.num_cities)
                && (0..n).map(|i| x.dist[t[i]][t[(i + 1) % n]]).sum::<u64>() <= x.target_length
        }
        Payload::HamiltonianCycle(x) => {
            let mut p = ints(c)?;
            if p.len() == x.num_nodes + 1 && p.first() == p.last() {
                p.pop();
            }
            let p = below(&p, x.num_nodes)?;
            let adj = adjacency(x.num_nodes, &x.edges, x.directed);
            let n = p.len();
            is_permutation(&p, x.num_nodes) && (0..n).all(|i| adj[p[i]][p[(i + 1) % n]])
        }
        Payload::ThreeColoring(x) => {
            let col = below(&ints(c)?, 3)?;
            col.len() == x.num_nodes && x.edges.iter().all(|e| col[e[0]] != col[e[1]])
        }
        Payload::BinPacking(x) => {
            let bin = below(&ints(c)?, x.bins)?;
            let mut load = vec![0u64; x.bins];
            for (i, &b) in bin.iter().enumerate().take(x.sizes.len()) {
                load[b] += x.sizes[i];
            }
            bin.len() == x.sizes.len() && load.iter().all(|&l| l <= x.capacity)
        }
        Payload::MaxLeafSpanningTree(x) => {
            let parent = ints(c)?;
            let n = x.num_nodes;
            if parent.len() != n || parent.iter().filter(|&&p| p == -1).count() != 1 {
                return Some(false);
            }
            let adj = adjacency(n, &x.edges, false);
            let mut degree = vec![0usize; n];
            for (v, &p) in parent.iter().enumerate() {
                if p == -1 {
                    continue;
                }
                let p = *below(&[p], n)?.first()?;
                if !adj[v][p] {
                    return Some(false);
                }
                degree[v] += 1;
                degree[p] += 1;
            }
            // n - 1 edges plus every node reaching the root within n steps
            // means the parent links form a spanning tree.
            let reaches_root = (0..n).all(|start| {
                let mut v = start;
                for _ in 0..n {
                    if parent[v] == -1 {
                        return true;
                    }
                    v = parent[v] as usize;
                }
                false
            });
            reaches_root && degree.iter().filter(|&&d| d == 1).count() >= x.target_leaves
        }
        Payload::QuadraticDiophantine(x) => {
            let v = ints(c)?;
            v.len() == 2
                && v[0] > 0
                && v[1] > 0
                && (x.a as i128) * (v[0] as i128).pow(2) + (x.b as i128) * (v[1] as i128) == x.c as i128
        }
        Payload::MinSumOfSquares(x) => {
            let g = below(&ints(c)?, x.k)?;
            let mut totals = vec![0u128; x.k];
            for (i, &grp) in g.iter().enumerate().take(x.sizes.len()) {
                totals[grp] += x.sizes[i] as u128;
            }
            g.len() == x.sizes.len() && totals.iter().map(|t| t * t).sum::<u128>() <= x.bound as u128
        }
        Payload::Superstring(x) => {
            let w = c.as_str()?;
            w.chars().count() <= x.k && x.strings.iter().all(|s| w.contains(s.as_str()))
        }
        Payload::Bandwidth(x) => {
            let f = below(&ints(c)?, x.num_nodes)?;
            is_permutation(&f, x.num_nodes) && x.edges.iter().all(|e| f[e[0]].abs_diff(f[e[1]]) <= x.bandwidth)
        }
        Payload::SetSplitting(x) => {
            let side = bits(c)?;
            side.len() == x.universe_size
                && x.subsets.iter().all(|s| s.iter().any(|&e| side[e]) && s.iter().any(|&e| !side[e]))
        }
        Payload::SetPacking(x) => {
            let idx = below(&ints(c)?, x.subsets.len())?;
            let total: usize = idx.iter().map(|&i| x.subsets[i].len()).sum();
            let union: BTreeSet<usize> = idx.iter().flat_map(|&i| x.subsets[i].iter().copied()).collect();
            distinct(&idx) && idx.len() >= x.k && union.len() == total
        }
        Payload::ExactCover3Sets(x) => {
            let idx = below(&ints(c)?, x.subsets.len())?;
            let mut hits = vec![0u32; x.universe_size];
            for &i in &idx {
                for &e in &x.subsets[i] {
                    hits[e] += 1;
                }
            }
            idx.len() * 3 == x.universe_size && hits.iter().all(|&h| h == 1)
        }
        Payload::MinimumCover(x) => {
            let idx: BTreeSet<usize> = below(&ints(c)?, x.sets.len())?.into_iter().collect();
            let union: BTreeSet<usize> = idx.iter().flat_map(|&i| x.sets[i].iter().copied()).collect();
            idx.len() <= x.k && union.len() == x.universe_size
        }
        Payload::Partition(x) => {
            let side = bits(c)?;
            let sum = |want: bool| -> u64 { x.sizes.iter().zip(&side).filter(|(_, &s)| s == want).map(|(a, _)| a).sum() };
            side.len() == x.sizes.len() && sum(true) == sum(false)
        }
        Payload::SubsetSum(x) => {
            let idx = below(&ints(c)?, x.sizes.len())?;
            distinct(&idx) && idx.iter().map(|&i| x.sizes[i]).sum::<u64>() == x.target
        }
        Payload::HittingString(x) => {
            let s: Vec<char> = c.as_str()?.chars().collect();
            s.len() == x.n
                && s.iter().all(|ch| *ch == '0' || *ch == '1')
                && x.strings.iter().all(|p| p.chars().zip(&s).any(|(a, b)| a == *b))
        }
        Payload::QuadraticCongruences(x) => {
            let v = c.as_i64()?;
            v > 0 && (v as u64) < x.c && (v as u128 * v as u128) % x.b as u128 == x.a as u128
        }
        Payload::Betweenness(x) => {
            let f = below(&ints(c)?, x.n)?;
            is_permutation(&f, x.n)
                && x.triples.iter().all(|&[a, b, cc]| {
                    (f[a] < f[b] && f[b] < f[cc]) || (f[cc] < f[b] && f[b] < f[a])
                })
        }
        Payload::Clustering(x) => {
            let g = below(&ints(c)?, 3)?;
            if g.len() != x.num_elements {
                return Some(false);
            }
            let mut members: HashMap<usize, Vec<usize>> = HashMap::new();
            for (i, &grp) in g.iter().enumerate() {
                members.entry(grp).or_default().push(i);
            }
            members.values().all(|m| m.iter().all(|&i| m.iter().all(|&j| x.dist[i][j] <= x.bound)))
        }
    })
}
