//! The gym verifier and the oracle's independent predicate must agree.

use npbench::gym::{generate_level, random_candidate, verify_solution};
use npbench::model::{seed, Instance, ProblemId, Solution};
use npbench::oracle::{satisfies, solve_exact, OracleBudget, OracleResult};
use proptest::prelude::*;
use serde_json::json;

mod common;
use common::mutations;

fn agree(instance: &Instance, candidate: &Solution) {
    let verdict = verify_solution(instance, candidate);
    assert_eq!(
        verdict.ok,
        satisfies(instance, candidate),
        "{} candidate {} verdict {:?}",
        instance.problem,
        candidate.0,
        verdict
    );
}

#[test]
fn oracle_solutions_verify_on_small_levels() {
    for problem in ProblemId::ALL {
        for level in [1, 2] {
            for s in [42u64, 53, 64] {
                let pair = generate_level(problem, level, s).unwrap();
                match solve_exact(&pair.instance, OracleBudget::default()) {
                    Ok(OracleResult::Found(sol)) => {
                        assert!(verify_solution(&pair.instance, &sol).ok, "{problem} L{level} s{s}: {}", sol.0)
                    }
                    Ok(OracleResult::NoSolution) => panic!("{problem} L{level}: planted instance reported unsolvable"),
                    Ok(OracleResult::Exhausted) | Err(_) => {}
                }
            }
        }
    }
}

#[test]
fn planted_and_mutated_solutions_agree() {
    for problem in ProblemId::ALL {
        for level in [1, 2, 3] {
            let pair = generate_level(problem, level, 7).unwrap();
            assert!(satisfies(&pair.instance, &pair.planted), "{problem} planted rejected by oracle");
            for m in mutations(&pair.planted.0) {
                agree(&pair.instance, &Solution(m));
            }
        }
    }
}

#[test]
fn hand_built_unsolvable_instances() {
    // Triangle is not 2-colorable, so K4 is not 3-colorable.
    let k4 = Instance::new(
        ProblemId::ThreeColoring,
        None,
        0,
        json!({"num_nodes": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}),
    );
    assert_eq!(solve_exact(&k4, OracleBudget::default()).unwrap(), OracleResult::NoSolution);
    for code in 0..81u32 {
        let colors: Vec<u32> = (0..4).map(|i| code / 3u32.pow(i) % 3).collect();
        assert!(!verify_solution(&k4, &Solution(json!(colors))).ok);
    }
    // Odd total cannot be split evenly.
    let odd = Instance::new(ProblemId::Partition, None, 0, json!({"sizes": [1, 2, 4]}));
    assert_eq!(solve_exact(&odd, OracleBudget::default()).unwrap(), OracleResult::NoSolution);
    for mask in 0..8u32 {
        let sides: Vec<u32> = (0..3).map(|i| mask >> i & 1).collect();
        assert!(!verify_solution(&odd, &Solution(json!(sides))).ok);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_candidates_agree(p in 0usize..25, level in 1u32..=3, s in any::<u64>()) {
        let problem = ProblemId::ALL[p];
        let pair = generate_level(problem, level, s).unwrap();
        let mut rng = seed::rng(s ^ 1);
        for _ in 0..5 {
            let cand = random_candidate(&pair.instance, &mut rng).unwrap();
            agree(&pair.instance, &cand);
        }
    }

    #[test]
    fn arbitrary_json_never_panics(p in 0usize..25, raw in prop::collection::vec(-3i64..40, 0..12)) {
        let pair = generate_level(ProblemId::ALL[p], 1, 3).unwrap();
        let cand = Solution(json!(raw));
        let out = verify_solution(&pair.instance, &cand);
        prop_assert_eq!(out.ok, satisfies(&pair.instance, &cand));
        prop_assert_eq!(out.ok, out.error.is_none());
    }
}
