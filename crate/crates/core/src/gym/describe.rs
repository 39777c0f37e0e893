//! Problem statements shown to solvers, and short schema summaries.

use crate::model::ProblemId;

/// Statement in Name / Input / Question form, followed by the expected
/// encoding of the `solution` field.
pub fn description(problem: ProblemId) -> &'static str {
    use ProblemId as P;
    match problem {
        P::ThreeSat => "- Name: 3-Satisfiability (3SAT)
- Input: `num_vars` Boolean variables numbered 1..num_vars and a list `clauses`. Each clause is three nonzero integers over three distinct variables; a positive integer i stands for variable i and -i for its negation. A clause is the OR of its three literals.
- Question: Is there a true/false value for every variable that makes every clause true?
- Answer: a list of num_vars booleans, where entry i-1 is the value of variable i.",
        P::VertexCover => "- Name: Vertex Cover
- Input: an undirected graph on nodes 0..num_nodes-1 given as a list `edges` of node pairs, and a positive integer `k` no larger than num_nodes.
- Question: Is there a set of at most k nodes that touches every edge, so each edge has at least one endpoint in the set?
- Answer: a list of node indices.",
        P::ThreeDimensionalMatching => "- Name: 3-Dimensional Matching (3DM)
- Input: an integer `n` and a list `triples`. X = {0..n-1}, Y = {n..2n-1} and Z = {2n..3n-1} are disjoint sets of n elements, and each triple [x, y, z] takes x from X, y from Y and z from Z.
- Question: Can n triples be chosen from the list so that no element of X, Y or Z appears in two of them?
- Answer: a list of n triples, each copied from `triples`.",
        P::TravelingSalesman => "- Name: Traveling Salesman (TSP)
- Input: `num_cities` cities numbered from 0, a symmetric matrix `dist` of positive integer distances between distinct cities, and a positive integer `target_length`.
- Question: Is there an order visiting every city once such that the route length, summing the distance between consecutive cities and from the last city back to the first, is at most target_length?
- Answer: a list holding each city index exactly once, in visiting order.",
        P::HamiltonianCycle => "- Name: Hamiltonian Cycle
- Input: a graph on nodes 0..num_nodes-1 given as a list `edges`. When `directed` is true each edge [u, v] may only be followed from u to v.
- Question: Is there a cycle that passes through every node exactly once and returns to where it started, so it uses exactly num_nodes edges?
- Answer: a list of the num_nodes nodes in cycle order, without repeating the start.",
        P::ThreeColoring => "- Name: Graph 3-Colorability (3-COL)
- Input: an undirected graph on nodes 0..num_nodes-1 given as a list `edges`.
- Question: Can every node receive one of three colors so that the two ends of each edge differ in color?
- Answer: a list with one color per node, each color being 0, 1 or 2.",
        P::BinPacking => "- Name: Bin Packing
- Input: item sizes `sizes` (positive integers, item i has size sizes[i]), a bin `capacity`, and a number of bins `bins` no larger than the item count.
- Question: Can the items be split among the bins so that no bin holds a total size above the capacity?
- Answer: a list with one bin index in 0..bins-1 per item.",
        P::MaxLeafSpanningTree => "- Name: Maximum Leaf Spanning Tree
- Input: an undirected graph on nodes 0..num_nodes-1 given as a list `edges`, and a positive integer `target_leaves`.
- Question: Does the graph have a spanning tree in which at least target_leaves nodes have degree 1?
- Answer: a list with the tree parent of each node, using -1 for the single root; every other entry must name a graph neighbor.",
        P::QuadraticDiophantine => "- Name: Quadratic Diophantine Equations (QDE)
- Input: positive integers `a`, `b` and `c`.
- Question: Are there positive integers x and y with a*x*x + b*y = c?
- Answer: the list [x, y].",
        P::MinSumOfSquares => "- Name: Minimum Sum of Squares
- Input: element sizes `sizes` (positive integers), a positive integer `k` no larger than the number of elements, and a positive integer `bound`.
- Question: Can the elements be split into k groups so that the squares of the group totals add up to at most bound?
- Answer: a list with one group index in 0..k-1 per element.",
        P::Superstring => "- Name: Shortest Common Superstring
- Input: a list `strings` of nonempty strings and a positive integer `k`.
- Question: Is there a string of length at most k that contains every listed string as a contiguous substring?
- Answer: the superstring itself, as a JSON string.",
        P::Bandwidth => "- Name: Bandwidth
- Input: an undirected graph on nodes 0..num_nodes-1 given as a list `edges`, and a positive integer `bandwidth` no larger than num_nodes.
- Question: Can the nodes be placed at distinct positions 0..num_nodes-1 so that the two ends of every edge are at most bandwidth positions apart?
- Answer: a list giving the position of each node; together the positions are a permutation of 0..num_nodes-1.",
        P::Clique => "- Name: Clique
- Input: an undirected graph on nodes 0..num_nodes-1 given as a list `edges`, and a positive integer `k` no larger than num_nodes.
- Question: Are there k nodes that are all pairwise joined by edges?
- Answer: a list of k distinct node indices.",
        P::IndependentSet => "- Name: Independent Set
- Input: an undirected graph on nodes 0..num_nodes-1 given as a list `edges`, and a positive integer `k` no larger than num_nodes.
- Question: Are there at least k nodes with no edge between any two of them?
- Answer: a list of distinct node indices.",
        P::DominatingSet => "- Name: Dominating Set
- Input: an undirected graph on nodes 0..num_nodes-1 given as a list `edges`, and a positive integer `k` no larger than num_nodes.
- Question: Is there a set of at most k nodes such that every node outside the set has a neighbor inside it?
- Answer: a list of distinct node indices.",
        P::SetSplitting => "- Name: Set Splitting
- Input: a ground set {0..universe_size-1} and a list `subsets` of its subsets.
- Question: Can the ground set be divided into two sides so that no listed subset lies entirely on one side?
- Answer: a list with the side (0 or 1) of each ground element.",
        P::SetPacking => "- Name: Set Packing
- Input: elements 0..universe_size-1, a list `subsets` of sets of elements, and a positive integer `k` no larger than the number of subsets.
- Question: Can k of the listed subsets be chosen so that no two of them share an element?
- Answer: a list of distinct indices into `subsets`.",
        P::ExactCover3Sets => "- Name: Exact Cover by 3-Sets (X3C)
- Input: a ground set {0..universe_size-1} whose size is a multiple of 3, and a list `subsets` of 3-element subsets.
- Question: Can universe_size/3 of the subsets be chosen so that every ground element lies in exactly one of them?
- Answer: a list of universe_size/3 indices into `subsets`.",
        P::MinimumCover => "- Name: Minimum Cover
- Input: a ground set {0..universe_size-1}, a list `sets` of its subsets, and a positive integer `k` no larger than the number of sets.
- Question: Can at most k of the sets be chosen so that every ground element lies in at least one of them?
- Answer: a list of indices into `sets`.",
        P::Partition => "- Name: Partition
- Input: element sizes `sizes` (positive integers).
- Question: Can the elements be split into two groups whose size totals are equal?
- Answer: a list with the group (0 or 1) of each element.",
        P::SubsetSum => "- Name: Subset Sum
- Input: element sizes `sizes` (positive integers) and a positive integer `target`.
- Question: Is there a selection of elements whose sizes add up to exactly target?
- Answer: a list of distinct element indices.",
        P::HittingString => "- Name: Hitting String
- Input: a length `n` and a list `strings` of patterns, each n characters over '0', '1' and '*'.
- Question: Is there a binary string of length n that matches every pattern in at least one position holding a 0 or 1?
- Answer: the binary string, as a JSON string of '0' and '1' characters.",
        P::QuadraticCongruences => "- Name: Quadratic Congruences
- Input: positive integers `a`, `b` and `c`.
- Question: Is there a positive integer x below c such that x*x leaves remainder a when divided by b?
- Answer: the integer x.",
        P::Betweenness => "- Name: Betweenness
- Input: elements 0..n-1 and a list `triples` of ordered triples [a, b, c] of distinct elements.
- Question: Can the elements be given distinct positions 0..n-1 so that in every triple b sits strictly between a and c (in either direction)?
- Answer: a list giving the position of each element; together the positions are a permutation of 0..n-1.",
        P::Clustering => "- Name: Clustering
- Input: elements 0..num_elements-1, a symmetric matrix `dist` of positive integer distances, and a positive integer `bound`.
- Question: Can the elements be split into three clusters so that any two elements in the same cluster are at distance at most bound?
- Answer: a list with the cluster (0, 1 or 2) of each element.",
    }
}

/// (instance schema, solution schema) as compact type sketches.
pub(crate) fn schemas(problem: ProblemId) -> (&'static str, &'static str) {
    use ProblemId as P;
    const GRAPH_K: &str = "{num_nodes: int, edges: [[int, int]], k: int}";
    const NODE_LIST: &str = "[int]";
    match problem {
        P::ThreeSat => ("{num_vars: int, clauses: [[int, int, int]]}", "[bool]"),
        P::VertexCover | P::Clique | P::IndependentSet | P::DominatingSet => (GRAPH_K, NODE_LIST),
        P::ThreeDimensionalMatching => ("{n: int, triples: [[int, int, int]]}", "[[int, int, int]]"),
        P::TravelingSalesman => ("{num_cities: int, dist: [[int]], target_length: int}", "[int]"),
        P::HamiltonianCycle => ("{num_nodes: int, edges: [[int, int]], directed: bool}", "[int]"),
        P::ThreeColoring => ("{num_nodes: int, edges: [[int, int]]}", "[0|1|2]"),
        P::BinPacking => ("{sizes: [int], capacity: int, bins: int}", "[int]"),
        P::MaxLeafSpanningTree => ("{num_nodes: int, edges: [[int, int]], target_leaves: int}", "[int]"),
        P::QuadraticDiophantine => ("{a: int, b: int, c: int}", "[int, int]"),
        P::MinSumOfSquares => ("{sizes: [int], k: int, bound: int}", "[int]"),
        P::Superstring => ("{strings: [string], k: int}", "string"),
        P::Bandwidth => ("{num_nodes: int, edges: [[int, int]], bandwidth: int}", "[int]"),
        P::SetSplitting => ("{universe_size: int, subsets: [[int]]}", "[0|1]"),
        P::SetPacking => ("{universe_size: int, subsets: [[int]], k: int}", "[int]"),
        P::ExactCover3Sets => ("{universe_size: int, subsets: [[int, int, int]]}", "[int]"),
        P::MinimumCover => ("{universe_size: int, sets: [[int]], k: int}", "[int]"),
        P::Partition => ("{sizes: [int]}", "[0|1]"),
        P::SubsetSum => ("{sizes: [int], target: int}", "[int]"),
        P::HittingString => ("{n: int, strings: [string]}", "string"),
        P::QuadraticCongruences => ("{a: int, b: int, c: int}", "int"),
        P::Betweenness => ("{n: int, triples: [[int, int, int]]}", "[int]"),
        P::Clustering => ("{num_elements: int, dist: [[int]], bound: int}", "[0|1|2]"),
    }
}
