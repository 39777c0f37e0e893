use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// One of the 25 benchmark problems.
///
/// The first twelve variants are the core set, the rest are extensions.
/// [`ProblemId::ALL`] lists them in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProblemId {
    ThreeSat,
    VertexCover,
    ThreeDimensionalMatching,
    TravelingSalesman,
    HamiltonianCycle,
    ThreeColoring,
    BinPacking,
    MaxLeafSpanningTree,
    QuadraticDiophantine,
    MinSumOfSquares,
    Superstring,
    Bandwidth,
    Clique,
    IndependentSet,
    DominatingSet,
    SetSplitting,
    SetPacking,
    ExactCover3Sets,
    MinimumCover,
    Partition,
    SubsetSum,
    HittingString,
    QuadraticCongruences,
    Betweenness,
    Clustering,
}

/// Kind of a difficulty parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Int,
    Bool,
    Probability,
}

impl ProblemId {
    pub const ALL: [ProblemId; 25] = [
        ProblemId::ThreeSat,
        ProblemId::VertexCover,
        ProblemId::ThreeDimensionalMatching,
        ProblemId::TravelingSalesman,
        ProblemId::HamiltonianCycle,
        ProblemId::ThreeColoring,
        ProblemId::BinPacking,
        ProblemId::MaxLeafSpanningTree,
        ProblemId::QuadraticDiophantine,
        ProblemId::MinSumOfSquares,
        ProblemId::Superstring,
        ProblemId::Bandwidth,
        ProblemId::Clique,
        ProblemId::IndependentSet,
        ProblemId::DominatingSet,
        ProblemId::SetSplitting,
        ProblemId::SetPacking,
        ProblemId::ExactCover3Sets,
        ProblemId::MinimumCover,
        ProblemId::Partition,
        ProblemId::SubsetSum,
        ProblemId::HittingString,
        ProblemId::QuadraticCongruences,
        ProblemId::Betweenness,
        ProblemId::Clustering,
    ];

    pub fn is_core(self) -> bool {
        (self as usize) < 12
    }

    /// Canonical short name, used in prompts, logs and error texts.
    pub fn name(self) -> &'static str {
        match self {
            ProblemId::ThreeSat => "3SAT",
            ProblemId::VertexCover => "Vertex Cover",
            ProblemId::ThreeDimensionalMatching => "3DM",
            ProblemId::TravelingSalesman => "TSP",
            ProblemId::HamiltonianCycle => "Hamiltonian Cycle",
            ProblemId::ThreeColoring => "3-COL",
            ProblemId::BinPacking => "Bin Packing",
            ProblemId::MaxLeafSpanningTree => "Max Leaf Spanning Tree",
            ProblemId::QuadraticDiophantine => "QDE",
            ProblemId::MinSumOfSquares => "Min Sum of Squares",
            ProblemId::Superstring => "Superstring",
            ProblemId::Bandwidth => "Bandwidth",
            ProblemId::Clique => "Clique",
            ProblemId::IndependentSet => "Independent Set",
            ProblemId::DominatingSet => "Dominating Set",
            ProblemId::SetSplitting => "Set Splitting",
            ProblemId::SetPacking => "Set Packing",
            ProblemId::ExactCover3Sets => "X3C",
            ProblemId::MinimumCover => "Minimum Cover",
            ProblemId::Partition => "Partition",
            ProblemId::SubsetSum => "Subset Sum",
            ProblemId::HittingString => "Hitting String",
            ProblemId::QuadraticCongruences => "Quadratic Congruences",
            ProblemId::Betweenness => "Betweenness",
            ProblemId::Clustering => "Clustering",
        }
    }

    /// Long-form names accepted when parsing, e.g. ladder file keys.
    fn aliases(self) -> &'static [&'static str] {
        match self {
            ProblemId::ThreeSat => &["3-SAT", "3-Satisfiability (3SAT)", "3-Satisfiability (3-SAT)"],
            ProblemId::ThreeDimensionalMatching => {
                &["3-Dimensional Matching (3DM)", "3-Dimensional Matching"]
            }
            ProblemId::TravelingSalesman => &["Travelling Salesman (TSP)", "Travelling Salesman"],
            ProblemId::ThreeColoring => {
                &["Graph 3-Colourability (3-COL)", "Graph 3-Colourability"]
            }
            ProblemId::MaxLeafSpanningTree => {
                &["Maximum Leaf Spanning Tree", "Max Leaf Span Tree"]
            }
            ProblemId::QuadraticDiophantine => &[
                "Quadratic Diophantine Equations (QDE)",
                "Quadratic Diophantine Equations",
            ],
            ProblemId::MinSumOfSquares => &["Minimum Sum of Squares", "Min Sum Square"],
            ProblemId::Superstring => &["Shortest Common Superstring"],
            ProblemId::ExactCover3Sets => &["Exact Cover by 3-Sets (X3C)", "Exact Cover by 3-Sets"],
            _ => &[],
        }
    }

    /// The difficulty parameters ("variables to scale") of this problem, in order.
    pub fn params(self) -> &'static [(&'static str, ParamKind)] {
        use ParamKind::*;
        match self {
            ProblemId::ThreeSat => &[("num_variables", Int), ("num_clauses", Int)],
            ProblemId::VertexCover => &[("num_nodes", Int), ("cover_size", Int)],
            ProblemId::ThreeDimensionalMatching => &[("n", Int)],
            ProblemId::TravelingSalesman => &[("num_cities", Int), ("target_length", Int)],
            ProblemId::HamiltonianCycle => &[("num_nodes", Int), ("directed", Bool)],
            ProblemId::ThreeColoring => &[("num_nodes", Int), ("num_edges", Int)],
            ProblemId::BinPacking => &[("num_items", Int), ("bin_capacity", Int), ("num_bins", Int)],
            ProblemId::MaxLeafSpanningTree => &[("num_nodes", Int), ("target_leaves", Int)],
            ProblemId::QuadraticDiophantine => &[("low", Int), ("high", Int)],
            ProblemId::MinSumOfSquares => &[("num_elements", Int), ("k", Int)],
            ProblemId::Superstring => &[("n", Int), ("k", Int)],
            ProblemId::Bandwidth => &[("num_nodes", Int), ("bandwidth", Int)],
            ProblemId::Clique => &[("num_nodes", Int), ("clique_size", Int)],
            ProblemId::IndependentSet => &[("num_nodes", Int), ("ind_set_size", Int)],
            ProblemId::DominatingSet => &[("num_nodes", Int), ("k", Int), ("edge_prob", Probability)],
            ProblemId::SetSplitting => &[("num_elements", Int), ("num_subsets", Int)],
            ProblemId::SetPacking => &[
                ("num_elements", Int),
                ("num_subsets", Int),
                ("num_disjoint_sets", Int),
            ],
            ProblemId::ExactCover3Sets => &[("num_elements", Int), ("num_subsets", Int)],
            ProblemId::MinimumCover => &[("num_elements", Int), ("num_sets", Int), ("k", Int)],
            ProblemId::Partition => &[("n", Int), ("max_value", Int)],
            ProblemId::SubsetSum => &[("num_elements", Int), ("max_value", Int)],
            ProblemId::HittingString => &[("n", Int), ("m", Int)],
            ProblemId::QuadraticCongruences => &[("min_value", Int), ("max_value", Int)],
            ProblemId::Betweenness => &[("num_element", Int), ("num_triples", Int)],
            ProblemId::Clustering => &[("num_elements", Int), ("b", Int)],
        }
    }

    /// Problem-specific error codes a verifier may emit for this problem.
    pub fn error_codes(self) -> std::ops::RangeInclusive<u8> {
        match self {
            ProblemId::ThreeSat => 1..=2,
            ProblemId::VertexCover => 1..=5,
            ProblemId::ThreeDimensionalMatching => 1..=3,
            ProblemId::TravelingSalesman => 1..=4,
            ProblemId::HamiltonianCycle => 1..=5,
            ProblemId::ThreeColoring => 1..=1,
            ProblemId::BinPacking => 1..=3,
            ProblemId::MaxLeafSpanningTree => 1..=5,
            ProblemId::QuadraticDiophantine => 1..=3,
            ProblemId::MinSumOfSquares => 1..=3,
            ProblemId::Superstring => 1..=3,
            ProblemId::Bandwidth => 1..=3,
            ProblemId::Clique => 1..=4,
            ProblemId::IndependentSet => 1..=4,
            ProblemId::DominatingSet => 1..=4,
            ProblemId::SetSplitting => 1..=3,
            ProblemId::SetPacking => 1..=4,
            ProblemId::ExactCover3Sets => 1..=3,
            ProblemId::MinimumCover => 1..=3,
            ProblemId::Partition => 1..=3,
            ProblemId::SubsetSum => 1..=3,
            ProblemId::HittingString => 1..=3,
            ProblemId::QuadraticCongruences => 1..=3,
            ProblemId::Betweenness => 1..=3,
            ProblemId::Clustering => 1..=3,
        }
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        ProblemId::ALL
            .into_iter()
            .find(|p| p.name() == s || p.aliases().contains(&s))
            .ok_or_else(|| Error::UnknownProblem(s.to_string()))
    }
}

impl Serialize for ProblemId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for ProblemId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
