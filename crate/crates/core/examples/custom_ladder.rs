//! Overrides the builtin difficulty ladder with extra, harder levels.

use npbench::gym::{generate_level_in, verify_solution};
use npbench::model::{DifficultyLadder, ProblemId};

const EXTRA: &str = r#"{
    "3SAT": {"11": {"num_variables": 40, "num_clauses": 170}},
    "Partition": {"14": {"n": 40, "max_value": 1000}}
}"#;

fn main() -> npbench::Result<()> {
    let ladder = DifficultyLadder::builtin().with_overrides(EXTRA)?;
    for (problem, level) in [(ProblemId::ThreeSat, 11), (ProblemId::Partition, 14)] {
        let pair = generate_level_in(&ladder, problem, level, 5)?;
        println!(
            "{problem} level {level} (max {}): planted solution verifies: {}",
            ladder.max_level(problem),
            verify_solution(&pair.instance, &pair.planted).ok
        );
    }
    Ok(())
}
