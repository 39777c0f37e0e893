//! Brute-force exact solvers for small instances.
//!
//! The searches and the acceptance predicate here share nothing with the
//! gym verifiers beyond the payload types, so agreement between the two is
//! meaningful evidence that both are right.

mod predicate;
mod search;

use crate::error::{Error, Result};
use crate::model::{Instance, Solution};

/// Limits on a single search. The search stops at whichever is hit first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Candidate (or partial candidate) states to visit.
    pub max_states: u64,
    pub max_millis: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_states: 20_000_000, max_millis: 10_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleResult {
    Found(Solution),
    /// The search finished without finding a solution.
    NoSolution,
    /// The budget ran out first.
    Exhausted,
}

/// Finds a solution by exhaustive search.
///
/// Fails with [`Error::UnsupportedSize`] when a plain enumeration would
/// visit more candidates than `budget.max_states`; pruned searches start
/// regardless and report [`OracleResult::Exhausted`] if they run out.
pub fn solve_exact(instance: &Instance, budget: OracleBudget) -> Result<OracleResult> {
    if budget.max_states == 0 || budget.max_millis == 0 {
        return Err(Error::Config("oracle budget limits must be positive".into()));
    }
    let payload = instance.parsed()?;
    let mut meter = search::Meter::new(&budget);
    match search::run(&payload, &budget, &mut meter)? {
        Ok(Some(value)) => {
            debug_assert!(predicate::satisfies(&payload, &value), "search returned a non-solution");
            Ok(OracleResult::Found(Solution(value)))
        }
        Ok(None) => Ok(OracleResult::NoSolution),
        Err(search::Stop) => Ok(OracleResult::Exhausted),
    }
}

/// The oracle's own acceptance check. Malformed instances are never satisfied.
pub fn satisfies(instance: &Instance, candidate: &Solution) -> bool {
    instance.parsed().is_ok_and(|p| predicate::satisfies(&p, &candidate.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gym::{generate_level, verify_solution};
    use crate::model::ProblemId;
    use serde_json::json;

    #[test]
    fn finds_solutions_for_first_levels() {
        for problem in ProblemId::ALL {
            let pair = generate_level(problem, 1, 42).unwrap();
            match solve_exact(&pair.instance, OracleBudget::default()).unwrap() {
                OracleResult::Found(s) => assert!(verify_solution(&pair.instance, &s).ok, "{problem}"),
                other => panic!("{problem}: {other:?}"),
            }
        }
    }

    #[test]
    fn full_three_variable_family_is_unsatisfiable() {
        let clauses: Vec<[i64; 3]> = (0..8)
            .map(|m| [1, 2, 3].map(|v: i64| if m >> (v - 1) & 1 == 1 { -v } else { v }))
            .collect();
        let inst = Instance::new(ProblemId::ThreeSat, None, 0, json!({"num_vars": 3, "clauses": clauses}));
        assert_eq!(solve_exact(&inst, OracleBudget::default()).unwrap(), OracleResult::NoSolution);
    }

    #[test]
    fn oversized_enumeration_is_refused() {
        let pair = generate_level(ProblemId::ThreeSat, 10, 1).unwrap();
        let tiny = OracleBudget { max_states: 1000, max_millis: 1000 };
        assert!(matches!(solve_exact(&pair.instance, tiny), Err(Error::UnsupportedSize { .. })));
    }

    #[test]
    fn pruned_search_reports_exhaustion() {
        let pair = generate_level(ProblemId::HamiltonianCycle, 10, 1).unwrap();
        let tiny = OracleBudget { max_states: 5, max_millis: 1000 };
        assert_eq!(solve_exact(&pair.instance, tiny).unwrap(), OracleResult::Exhausted);
    }
}
