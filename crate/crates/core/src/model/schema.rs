//! Instance payload schemas.
//!
//! Every problem's instance is a JSON object whose fields are listed below.
//! Nodes, elements and cities are numbered from 0; 3SAT variables from 1,
//! with a negative literal meaning negation.
//!
//! | problem | instance fields | solution |
//! |---|---|---|
//! | 3SAT | `num_vars`, `clauses` (triples of signed literals) | list of `num_vars` booleans |
//! | Vertex Cover | `num_nodes`, `edges`, `k` | list of node indices |
//! | 3DM | `n`, `triples` (x in 0..n, y in n..2n, z in 2n..3n) | list of `n` triples |
//! | TSP | `num_cities`, `dist` (symmetric matrix), `target_length` | ordering of all cities |
//! | Hamiltonian Cycle | `num_nodes`, `edges`, `directed` | node sequence of length `num_nodes` |
//! | 3-COL | `num_nodes`, `edges` | color in {0,1,2} per node |
//! | Bin Packing | `sizes`, `capacity`, `bins` | bin index per item |
//! | Max Leaf Spanning Tree | `num_nodes`, `edges`, `target_leaves` | parent per node, root is -1 |
//! | QDE | `a`, `b`, `c` | `[x, y]` |
//! | Min Sum of Squares | `sizes`, `k`, `bound` | subset index in 0..k per element |
//! | Superstring | `strings`, `k` (maximum length) | the superstring |
//! | Bandwidth | `num_nodes`, `edges`, `bandwidth` | position per node (a permutation) |
//! | Clique, Independent Set, Dominating Set | `num_nodes`, `edges`, `k` | list of node indices |
//! | Set Splitting | `universe_size`, `subsets` | side (0 or 1) per element |
//! | Set Packing | `universe_size`, `subsets`, `k` | list of subset indices |
//! | X3C | `universe_size` (3n), `subsets` (3 elements each) | list of n subset indices |
//! | Minimum Cover | `universe_size`, `sets`, `k` | list of at most `k` set indices |
//! | Partition | `sizes` | side (0 or 1) per element |
//! | Subset Sum | `sizes`, `target` | list of element indices |
//! | Hitting String | `n`, `strings` (over `0`, `1`, `*`) | binary string of length `n` |
//! | Quadratic Congruences | `a`, `b`, `c` | positive integer `x` |
//! | Betweenness | `n`, `triples` | position per element (a permutation) |
//! | Clustering | `num_elements`, `dist`, `bound` | cluster in {0,1,2} per element |

use std::collections::HashSet;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::problem::ProblemId;
use crate::error::{Error, Result};

pub type Edge = [usize; 2];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreeSat {
    pub num_vars: usize,
    pub clauses: Vec<[i64; 3]>,
}

/// Shared shape of Vertex Cover, Clique, Independent Set and Dominating Set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphWithBound {
    pub num_nodes: usize,
    pub edges: Vec<Edge>,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreeDimensionalMatching {
    pub n: usize,
    pub triples: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TravelingSalesman {
    pub num_cities: usize,
    pub dist: Vec<Vec<u64>>,
    pub target_length: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HamiltonianCycle {
    pub num_nodes: usize,
    pub edges: Vec<Edge>,
    pub directed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreeColoring {
    pub num_nodes: usize,
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BinPacking {
    pub sizes: Vec<u64>,
    pub capacity: u64,
    pub bins: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaxLeafSpanningTree {
    pub num_nodes: usize,
    pub edges: Vec<Edge>,
    pub target_leaves: usize,
}

/// Shared shape of QDE and Quadratic Congruences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreeIntegers {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinSumOfSquares {
    pub sizes: Vec<u64>,
    pub k: usize,
    pub bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Superstring {
    pub strings: Vec<String>,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bandwidth {
    pub num_nodes: usize,
    pub edges: Vec<Edge>,
    pub bandwidth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetSplitting {
    pub universe_size: usize,
    pub subsets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetPacking {
    pub universe_size: usize,
    pub subsets: Vec<Vec<usize>>,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExactCover3Sets {
    pub universe_size: usize,
    pub subsets: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinimumCover {
    pub universe_size: usize,
    pub sets: Vec<Vec<usize>>,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Partition {
    pub sizes: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubsetSum {
    pub sizes: Vec<u64>,
    pub target: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HittingString {
    pub n: usize,
    pub strings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Betweenness {
    pub n: usize,
    pub triples: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Clustering {
    pub num_elements: usize,
    pub dist: Vec<Vec<u64>>,
    pub bound: u64,
}

/// A parsed, validated instance payload.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    ThreeSat(ThreeSat),
    VertexCover(GraphWithBound),
    ThreeDimensionalMatching(ThreeDimensionalMatching),
    TravelingSalesman(TravelingSalesman),
    HamiltonianCycle(HamiltonianCycle),
    ThreeColoring(ThreeColoring),
    BinPacking(BinPacking),
    MaxLeafSpanningTree(MaxLeafSpanningTree),
    QuadraticDiophantine(ThreeIntegers),
    MinSumOfSquares(MinSumOfSquares),
    Superstring(Superstring),
    Bandwidth(Bandwidth),
    Clique(GraphWithBound),
    IndependentSet(GraphWithBound),
    DominatingSet(GraphWithBound),
    SetSplitting(SetSplitting),
    SetPacking(SetPacking),
    ExactCover3Sets(ExactCover3Sets),
    MinimumCover(MinimumCover),
    Partition(Partition),
    SubsetSum(SubsetSum),
    HittingString(HittingString),
    QuadraticCongruences(ThreeIntegers),
    Betweenness(Betweenness),
    Clustering(Clustering),
}

fn decode<T: DeserializeOwned>(problem: ProblemId, value: &Value) -> Result<T> {
    T::deserialize(value)
        .map_err(|e| Error::SchemaViolation(format!("{problem} instance: {e}")))
}

impl Payload {
    /// Decodes and validates `value` as an instance of `problem`.
    pub fn parse(problem: ProblemId, value: &Value) -> Result<Payload> {
        use ProblemId as P;
        let payload = match problem {
            P::ThreeSat => Payload::ThreeSat(decode(problem, value)?),
            P::VertexCover => Payload::VertexCover(decode(problem, value)?),
            P::ThreeDimensionalMatching => Payload::ThreeDimensionalMatching(decode(problem, value)?),
            P::TravelingSalesman => Payload::TravelingSalesman(decode(problem, value)?),
            P::HamiltonianCycle => Payload::HamiltonianCycle(decode(problem, value)?),
            P::ThreeColoring => Payload::ThreeColoring(decode(problem, value)?),
            P::BinPacking => Payload::BinPacking(decode(problem, value)?),
            P::MaxLeafSpanningTree => Payload::MaxLeafSpanningTree(decode(problem, value)?),
            P::QuadraticDiophantine => Payload::QuadraticDiophantine(decode(problem, value)?),
            P::MinSumOfSquares => Payload::MinSumOfSquares(decode(problem, value)?),
            P::Superstring => Payload::Superstring(decode(problem, value)?),
            P::Bandwidth => Payload::Bandwidth(decode(problem, value)?),
            P::Clique => Payload::Clique(decode(problem, value)?),
            P::IndependentSet => Payload::IndependentSet(decode(problem, value)?),
            P::DominatingSet => Payload::DominatingSet(decode(problem, value)?),
            P::SetSplitting => Payload::SetSplitting(decode(problem, value)?),
            P::SetPacking => Payload::SetPacking(decode(problem, value)?),
            P::ExactCover3Sets => Payload::ExactCover3Sets(decode(problem, value)?),
            P::MinimumCover => Payload::MinimumCover(decode(problem, value)?),
            P::Partition => Payload::Partition(decode(problem, value)?),
            P::SubsetSum => Payload::SubsetSum(decode(problem, value)?),
            P::HittingString => Payload::HittingString(decode(problem, value)?),
            P::QuadraticCongruences => Payload::QuadraticCongruences(decode(problem, value)?),
            P::Betweenness => Payload::Betweenness(decode(problem, value)?),
            P::Clustering => Payload::Clustering(decode(problem, value)?),
        };
        payload
            .check()
            .map_err(|reason| Error::SchemaViolation(format!("{problem} instance: {reason}")))?;
        Ok(payload)
    }

    pub fn problem(&self) -> ProblemId {
        use ProblemId as P;
        match self {
            Payload::ThreeSat(_) => P::ThreeSat,
            Payload::VertexCover(_) => P::VertexCover,
            Payload::ThreeDimensionalMatching(_) => P::ThreeDimensionalMatching,
            Payload::TravelingSalesman(_) => P::TravelingSalesman,
            Payload::HamiltonianCycle(_) => P::HamiltonianCycle,
            Payload::ThreeColoring(_) => P::ThreeColoring,
            Payload::BinPacking(_) => P::BinPacking,
            Payload::MaxLeafSpanningTree(_) => P::MaxLeafSpanningTree,
            Payload::QuadraticDiophantine(_) => P::QuadraticDiophantine,
            Payload::MinSumOfSquares(_) => P::MinSumOfSquares,
            Payload::Superstring(_) => P::Superstring,
            Payload::Bandwidth(_) => P::Bandwidth,
            Payload::Clique(_) => P::Clique,
            Payload::IndependentSet(_) => P::IndependentSet,
            Payload::DominatingSet(_) => P::DominatingSet,
            Payload::SetSplitting(_) => P::SetSplitting,
            Payload::SetPacking(_) => P::SetPacking,
            Payload::ExactCover3Sets(_) => P::ExactCover3Sets,
            Payload::MinimumCover(_) => P::MinimumCover,
            Payload::Partition(_) => P::Partition,
            Payload::SubsetSum(_) => P::SubsetSum,
            Payload::HittingString(_) => P::HittingString,
            Payload::QuadraticCongruences(_) => P::QuadraticCongruences,
            Payload::Betweenness(_) => P::Betweenness,
            Payload::Clustering(_) => P::Clustering,
        }
    }

    pub fn to_value(&self) -> Value {
        let v = match self {
            Payload::ThreeSat(x) => serde_json::to_value(x),
            Payload::VertexCover(x)
            | Payload::Clique(x)
            | Payload::IndependentSet(x)
            | Payload::DominatingSet(x) => serde_json::to_value(x),
            Payload::ThreeDimensionalMatching(x) => serde_json::to_value(x),
            Payload::TravelingSalesman(x) => serde_json::to_value(x),
            Payload::HamiltonianCycle(x) => serde_json::to_value(x),
            Payload::ThreeColoring(x) => serde_json::to_value(x),
            Payload::BinPacking(x) => serde_json::to_value(x),
            Payload::MaxLeafSpanningTree(x) => serde_json::to_value(x),
            Payload::QuadraticDiophantine(x) | Payload::QuadraticCongruences(x) => {
                serde_json::to_value(x)
            }
            Payload::MinSumOfSquares(x) => serde_json::to_value(x),
            Payload::Superstring(x) => serde_json::to_value(x),
            Payload::Bandwidth(x) => serde_json::to_value(x),
            Payload::SetSplitting(x) => serde_json::to_value(x),
            Payload::SetPacking(x) => serde_json::to_value(x),
            Payload::ExactCover3Sets(x) => serde_json::to_value(x),
            Payload::MinimumCover(x) => serde_json::to_value(x),
            Payload::Partition(x) => serde_json::to_value(x),
            Payload::SubsetSum(x) => serde_json::to_value(x),
            Payload::HittingString(x) => serde_json::to_value(x),
            Payload::Betweenness(x) => serde_json::to_value(x),
            Payload::Clustering(x) => serde_json::to_value(x),
        };
        v.expect("payload structs serialize infallibly")
    }

    fn check(&self) -> std::result::Result<(), String> {
        match self {
            Payload::ThreeSat(x) => {
                for clause in &x.clauses {
                    let mut vars = HashSet::new();
                    for &lit in clause {
                        let var = lit.unsigned_abs() as usize;
                        if lit == 0 || var > x.num_vars {
                            return Err(format!("literal {lit} out of range 1..={}", x.num_vars));
                        }
                        vars.insert(var);
                    }
                    if vars.len() != 3 {
                        return Err(format!("clause {clause:?} must use three distinct variables"));
                    }
                }
                positive("num_vars", x.num_vars as u64)
            }
            Payload::VertexCover(g)
            | Payload::Clique(g)
            | Payload::IndependentSet(g)
            | Payload::DominatingSet(g) => {
                check_edges(g.num_nodes, &g.edges, false)?;
                check_bound("k", g.k, g.num_nodes)
            }
            Payload::ThreeDimensionalMatching(x) => {
                let n = x.n;
                positive("n", n as u64)?;
                for t in &x.triples {
                    if t[0] >= n || !(n..2 * n).contains(&t[1]) || !(2 * n..3 * n).contains(&t[2]) {
                        return Err(format!("triple {t:?} outside X x Y x Z"));
                    }
                }
                no_duplicates("triple", x.triples.iter())
            }
            Payload::TravelingSalesman(x) => {
                check_distance_matrix(x.num_cities, &x.dist)?;
                positive("target_length", x.target_length)
            }
            Payload::HamiltonianCycle(x) => check_edges(x.num_nodes, &x.edges, x.directed),
            Payload::ThreeColoring(x) => check_edges(x.num_nodes, &x.edges, false),
            Payload::BinPacking(x) => {
                all_positive("sizes", &x.sizes)?;
                positive("capacity", x.capacity)?;
                check_bound("bins", x.bins, x.sizes.len())
            }
            Payload::MaxLeafSpanningTree(x) => {
                check_edges(x.num_nodes, &x.edges, false)?;
                check_bound("target_leaves", x.target_leaves, x.num_nodes)
            }
            Payload::QuadraticDiophantine(x) | Payload::QuadraticCongruences(x) => {
                positive("a", x.a)?;
                positive("b", x.b)?;
                positive("c", x.c)
            }
            Payload::MinSumOfSquares(x) => {
                all_positive("sizes", &x.sizes)?;
                check_bound("k", x.k, x.sizes.len())?;
                positive("bound", x.bound)
            }
            Payload::Superstring(x) => {
                if x.strings.iter().any(|s| s.is_empty()) {
                    return Err("strings must be nonempty".into());
                }
                positive("k", x.k as u64)
            }
            Payload::Bandwidth(x) => {
                check_edges(x.num_nodes, &x.edges, false)?;
                check_bound("bandwidth", x.bandwidth, x.num_nodes)
            }
            Payload::SetSplitting(x) => check_family(x.universe_size, &x.subsets),
            Payload::SetPacking(x) => {
                check_family(x.universe_size, &x.subsets)?;
                check_bound("k", x.k, x.subsets.len())
            }
            Payload::ExactCover3Sets(x) => {
                if x.universe_size == 0 || x.universe_size % 3 != 0 {
                    return Err("universe_size must be a positive multiple of 3".into());
                }
                let family: Vec<Vec<usize>> = x.subsets.iter().map(|s| s.to_vec()).collect();
                check_family(x.universe_size, &family)
            }
            Payload::MinimumCover(x) => {
                check_family(x.universe_size, &x.sets)?;
                check_bound("k", x.k, x.sets.len())
            }
            Payload::Partition(x) => all_positive("sizes", &x.sizes),
            Payload::SubsetSum(x) => {
                all_positive("sizes", &x.sizes)?;
                positive("target", x.target)
            }
            Payload::HittingString(x) => {
                positive("n", x.n as u64)?;
                for s in &x.strings {
                    if s.len() != x.n || !s.bytes().all(|b| matches!(b, b'0' | b'1' | b'*')) {
                        return Err(format!("`{s}` is not a length-{} string over 0, 1, *", x.n));
                    }
                }
                Ok(())
            }
            Payload::Betweenness(x) => {
                positive("n", x.n as u64)?;
                for t in &x.triples {
                    if t.iter().any(|&e| e >= x.n) || t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                        return Err(format!("triple {t:?} must hold distinct elements below {}", x.n));
                    }
                }
                Ok(())
            }
            Payload::Clustering(x) => {
                check_distance_matrix(x.num_elements, &x.dist)?;
                positive("bound", x.bound)
            }
        }
    }
}

fn positive(name: &str, v: u64) -> std::result::Result<(), String> {
    if v == 0 {
        Err(format!("`{name}` must be positive"))
    } else {
        Ok(())
    }
}

fn all_positive(name: &str, values: &[u64]) -> std::result::Result<(), String> {
    if values.is_empty() || values.contains(&0) {
        Err(format!("`{name}` must be a nonempty list of positive integers"))
    } else {
        Ok(())
    }
}

fn check_bound(name: &str, v: usize, max: usize) -> std::result::Result<(), String> {
    if v == 0 || v > max {
        Err(format!("`{name}` = {v} must lie in 1..={max}"))
    } else {
        Ok(())
    }
}

fn no_duplicates<'a, T: std::hash::Hash + Eq + std::fmt::Debug + 'a>(
    what: &str,
    items: impl Iterator<Item = &'a T>,
) -> std::result::Result<(), String> {
    let mut seen = HashSet::new();
    for item in items {
        if !seen.insert(item) {
            return Err(format!("duplicate {what} {item:?}"));
        }
    }
    Ok(())
}

fn check_edges(n: usize, edges: &[Edge], directed: bool) -> std::result::Result<(), String> {
    positive("num_nodes", n as u64)?;
    let mut seen = HashSet::new();
    for &[u, v] in edges {
        if u >= n || v >= n || u == v {
            return Err(format!("invalid edge [{u}, {v}] for {n} nodes"));
        }
        let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
        if !seen.insert(key) {
            return Err(format!("duplicate edge [{u}, {v}]"));
        }
    }
    Ok(())
}

fn check_family(universe: usize, family: &[Vec<usize>]) -> std::result::Result<(), String> {
    positive("universe_size", universe as u64)?;
    for set in family {
        if set.is_empty() {
            return Err("subsets must be nonempty".into());
        }
        let mut seen = HashSet::new();
        for &e in set {
            if e >= universe || !seen.insert(e) {
                return Err(format!("subset {set:?} has an invalid or repeated element"));
            }
        }
    }
    Ok(())
}

fn check_distance_matrix(n: usize, dist: &[Vec<u64>]) -> std::result::Result<(), String> {
    positive("size", n as u64)?;
    if dist.len() != n || dist.iter().any(|row| row.len() != n) {
        return Err(format!("distance matrix must be {n} x {n}"));
    }
    for i in 0..n {
        if dist[i][i] != 0 {
            return Err("distance matrix diagonal must be zero".into());
        }
        for j in 0..i {
            if dist[i][j] == 0 || dist[i][j] != dist[j][i] {
                return Err(format!("distance ({i}, {j}) must be positive and symmetric"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn three_sat_requires_distinct_variables() {
        let ok = json!({"num_vars": 3, "clauses": [[1, -2, 3]]});
        assert!(Payload::parse(ProblemId::ThreeSat, &ok).is_ok());
        let dup = json!({"num_vars": 3, "clauses": [[1, -1, 3]]});
        assert!(Payload::parse(ProblemId::ThreeSat, &dup).is_err());
        let range = json!({"num_vars": 3, "clauses": [[1, 2, 4]]});
        assert!(Payload::parse(ProblemId::ThreeSat, &range).is_err());
    }

    #[test]
    fn missing_and_unknown_fields_rejected() {
        let missing = json!({"num_nodes": 3, "edges": [[0, 1]]});
        assert!(matches!(
            Payload::parse(ProblemId::VertexCover, &missing),
            Err(Error::SchemaViolation(_))
        ));
        let extra = json!({"num_nodes": 3, "edges": [], "k": 1, "note": "x"});
        assert!(Payload::parse(ProblemId::Clique, &extra).is_err());
    }

    #[test]
    fn graph_edges_checked() {
        let dup = json!({"num_nodes": 3, "edges": [[0, 1], [1, 0]]});
        assert!(Payload::parse(ProblemId::ThreeColoring, &dup).is_err());
        let arcs = json!({"num_nodes": 3, "edges": [[0, 1], [1, 0]], "directed": true});
        assert!(Payload::parse(ProblemId::HamiltonianCycle, &arcs).is_ok());
        let loop_ = json!({"num_nodes": 3, "edges": [[1, 1]]});
        assert!(Payload::parse(ProblemId::ThreeColoring, &loop_).is_err());
    }

    #[test]
    fn distance_matrix_checked() {
        let asym = json!({"num_cities": 2, "dist": [[0, 1], [2, 0]], "target_length": 3});
        assert!(Payload::parse(ProblemId::TravelingSalesman, &asym).is_err());
        let ok = json!({"num_cities": 2, "dist": [[0, 1], [1, 0]], "target_length": 3});
        let parsed = Payload::parse(ProblemId::TravelingSalesman, &ok).unwrap();
        assert_eq!(parsed.to_value(), ok);
    }
}
