//! Instance generators with planted solutions, and polynomial-time verifiers.
//!
//! Every generator fixes a hidden solution first and builds the instance
//! around it, so each generated instance has at least one solution (the
//! planted one). Verifiers never search: they check a candidate directly and
//! report the first failing check in the problem's error-code order.

mod candidate;
mod describe;
mod graph;
mod numeric;
mod ordering;
mod sample;
mod sat;
mod sets;
mod strings;

use rand::RngCore;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::model::schema::Payload;
use crate::model::{seed, DifficultyLadder, ErrorCode, GenConfig, Instance, ProblemId, Solution, VerifyOutcome};

pub use describe::description;

/// Static information about one problem, used to build prompts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemDescriptor {
    pub id: ProblemId,
    /// Name / Input / Question statement shown to solvers.
    pub description_text: &'static str,
    pub instance_schema: &'static str,
    pub solution_schema: &'static str,
}

/// A generated instance and the solution it was built around.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedPair {
    pub instance: Instance,
    pub planted: Solution,
}

/// A failed check inside a verifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Rejection {
    pub code: ErrorCode,
    pub message: String,
}

pub(crate) type Check = std::result::Result<(), Rejection>;

pub(crate) fn problem_error(code: u8, message: impl Into<String>) -> Rejection {
    Rejection { code: ErrorCode::problem(code), message: message.into() }
}

pub(crate) fn format_error(message: impl Into<String>) -> Rejection {
    Rejection { code: ErrorCode::VERIFICATION, message: message.into() }
}

pub(crate) fn infeasible(problem: ProblemId, reason: impl Into<String>) -> Error {
    Error::InfeasibleConfig { problem: problem.name().into(), reason: reason.into() }
}

/// All 25 problems, core problems first.
pub fn list_problems() -> Vec<ProblemDescriptor> {
    ProblemId::ALL.into_iter().map(descriptor).collect()
}

pub fn descriptor(problem: ProblemId) -> ProblemDescriptor {
    let (instance_schema, solution_schema) = describe::schemas(problem);
    ProblemDescriptor {
        id: problem,
        description_text: description(problem),
        instance_schema,
        solution_schema,
    }
}

/// Generates an instance for `config`. Deterministic in `(problem, config, seed)`.
pub fn generate_instance(problem: ProblemId, config: &GenConfig, seed: u64) -> Result<GeneratedPair> {
    generate_with_level(problem, None, config, seed)
}

/// Generates an instance at a published level of the builtin ladder.
pub fn generate_level(problem: ProblemId, level: u32, seed: u64) -> Result<GeneratedPair> {
    generate_level_in(DifficultyLadder::builtin(), problem, level, seed)
}

pub fn generate_level_in(
    ladder: &DifficultyLadder,
    problem: ProblemId,
    level: u32,
    seed: u64,
) -> Result<GeneratedPair> {
    let config = ladder.level_config(problem, level)?;
    generate_with_level(problem, Some(level), config, seed)
}

fn generate_with_level(
    problem: ProblemId,
    level: Option<u32>,
    config: &GenConfig,
    seed: u64,
) -> Result<GeneratedPair> {
    config.validate(problem)?;
    let mut rng = seed::rng(seed);
    let (payload, planted) = generate_payload(problem, config, &mut rng)?;
    debug_assert_eq!(payload.problem(), problem);
    Ok(GeneratedPair {
        instance: Instance::new(problem, level, seed, payload.to_value()),
        planted: Solution(planted),
    })
}

fn generate_payload(problem: ProblemId, cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    use ProblemId as P;
    match problem {
        P::ThreeSat => sat::generate(cfg, rng),
        P::VertexCover => graph::generate_vertex_cover(cfg, rng),
        P::ThreeDimensionalMatching => sets::generate_3dm(cfg, rng),
        P::TravelingSalesman => graph::generate_tsp(cfg, rng),
        P::HamiltonianCycle => graph::generate_hamiltonian(cfg, rng),
        P::ThreeColoring => graph::generate_3col(cfg, rng),
        P::BinPacking => numeric::generate_bin_packing(cfg, rng),
        P::MaxLeafSpanningTree => graph::generate_max_leaf(cfg, rng),
        P::QuadraticDiophantine => numeric::generate_qde(cfg, rng),
        P::MinSumOfSquares => numeric::generate_min_sum_squares(cfg, rng),
        P::Superstring => strings::generate_superstring(cfg, rng),
        P::Bandwidth => graph::generate_bandwidth(cfg, rng),
        P::Clique => graph::generate_clique(cfg, rng),
        P::IndependentSet => graph::generate_independent_set(cfg, rng),
        P::DominatingSet => graph::generate_dominating_set(cfg, rng),
        P::SetSplitting => sets::generate_set_splitting(cfg, rng),
        P::SetPacking => sets::generate_set_packing(cfg, rng),
        P::ExactCover3Sets => sets::generate_x3c(cfg, rng),
        P::MinimumCover => sets::generate_minimum_cover(cfg, rng),
        P::Partition => numeric::generate_partition(cfg, rng),
        P::SubsetSum => numeric::generate_subset_sum(cfg, rng),
        P::HittingString => strings::generate_hitting_string(cfg, rng),
        P::QuadraticCongruences => numeric::generate_quadratic_congruences(cfg, rng),
        P::Betweenness => ordering::generate_betweenness(cfg, rng),
        P::Clustering => ordering::generate_clustering(cfg, rng),
    }
}

/// Checks `candidate` against `instance`. Never fails: every problem is
/// reported through the outcome.
pub fn verify_solution(instance: &Instance, candidate: &Solution) -> VerifyOutcome {
    let payload = match instance.parsed() {
        Ok(p) => p,
        Err(e) => return VerifyOutcome::reject(ErrorCode::VERIFICATION, format!("invalid instance: {e}")),
    };
    verify_payload(&payload, &candidate.0)
}

pub(crate) fn verify_payload(payload: &Payload, candidate: &Value) -> VerifyOutcome {
    let check = match payload {
        Payload::ThreeSat(x) => sat::verify(x, candidate),
        Payload::VertexCover(x) => graph::verify_vertex_cover(x, candidate),
        Payload::ThreeDimensionalMatching(x) => sets::verify_3dm(x, candidate),
        Payload::TravelingSalesman(x) => graph::verify_tsp(x, candidate),
        Payload::HamiltonianCycle(x) => graph::verify_hamiltonian(x, candidate),
        Payload::ThreeColoring(x) => graph::verify_3col(x, candidate),
        Payload::BinPacking(x) => numeric::verify_bin_packing(x, candidate),
        Payload::MaxLeafSpanningTree(x) => graph::verify_max_leaf(x, candidate),
        Payload::QuadraticDiophantine(x) => numeric::verify_qde(x, candidate),
        Payload::MinSumOfSquares(x) => numeric::verify_min_sum_squares(x, candidate),
        Payload::Superstring(x) => strings::verify_superstring(x, candidate),
        Payload::Bandwidth(x) => graph::verify_bandwidth(x, candidate),
        Payload::Clique(x) => graph::verify_clique(x, candidate),
        Payload::IndependentSet(x) => graph::verify_independent_set(x, candidate),
        Payload::DominatingSet(x) => graph::verify_dominating_set(x, candidate),
        Payload::SetSplitting(x) => sets::verify_set_splitting(x, candidate),
        Payload::SetPacking(x) => sets::verify_set_packing(x, candidate),
        Payload::ExactCover3Sets(x) => sets::verify_x3c(x, candidate),
        Payload::MinimumCover(x) => sets::verify_minimum_cover(x, candidate),
        Payload::Partition(x) => numeric::verify_partition(x, candidate),
        Payload::SubsetSum(x) => numeric::verify_subset_sum(x, candidate),
        Payload::HittingString(x) => strings::verify_hitting_string(x, candidate),
        Payload::QuadraticCongruences(x) => numeric::verify_quadratic_congruences(x, candidate),
        Payload::Betweenness(x) => ordering::verify_betweenness(x, candidate),
        Payload::Clustering(x) => ordering::verify_clustering(x, candidate),
    };
    match check {
        Ok(()) => VerifyOutcome::accept(),
        Err(r) => VerifyOutcome::reject(r.code, r.message),
    }
}

/// Draws a uniformly random solution of the right shape (not necessarily valid).
pub fn random_candidate(instance: &Instance, rng: &mut dyn RngCore) -> Result<Solution> {
    let payload = instance.parsed()?;
    let value = match &payload {
        Payload::ThreeSat(x) => sat::random(x, rng),
        Payload::VertexCover(x) | Payload::DominatingSet(x) | Payload::Clique(x) | Payload::IndependentSet(x) => {
            graph::random_node_subset(x, rng)
        }
        Payload::ThreeDimensionalMatching(x) => sets::random_3dm(x, rng),
        Payload::TravelingSalesman(x) => sample::random_permutation_value(x.num_cities, rng),
        Payload::HamiltonianCycle(x) => sample::random_permutation_value(x.num_nodes, rng),
        Payload::ThreeColoring(x) => sample::random_labels(x.num_nodes, 3, rng),
        Payload::BinPacking(x) => sample::random_labels(x.sizes.len(), x.bins, rng),
        Payload::MaxLeafSpanningTree(x) => graph::random_tree(x.num_nodes, rng),
        Payload::QuadraticDiophantine(x) => numeric::random_qde(x, rng),
        Payload::MinSumOfSquares(x) => sample::random_labels(x.sizes.len(), x.k, rng),
        Payload::Superstring(x) => strings::random_superstring(x, rng),
        Payload::Bandwidth(x) => sample::random_permutation_value(x.num_nodes, rng),
        Payload::SetSplitting(x) => sample::random_labels(x.universe_size, 2, rng),
        Payload::SetPacking(x) => sample::random_index_subset(x.subsets.len(), x.k, rng),
        Payload::ExactCover3Sets(x) => {
            sample::random_index_subset(x.subsets.len(), (x.universe_size / 3).min(x.subsets.len()), rng)
        }
        Payload::MinimumCover(x) => sample::random_index_subset(x.sets.len(), x.k, rng),
        Payload::Partition(x) => sample::random_labels(x.sizes.len(), 2, rng),
        Payload::SubsetSum(x) => numeric::random_subset(x.sizes.len(), rng),
        Payload::HittingString(x) => strings::random_binary_string(x.n, rng),
        Payload::QuadraticCongruences(x) => numeric::random_qc(x, rng),
        Payload::Betweenness(x) => sample::random_permutation_value(x.n, rng),
        Payload::Clustering(x) => sample::random_labels(x.num_elements, 3, rng),
    };
    Ok(Solution(value))
}
