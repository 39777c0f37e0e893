//! Prints one instance per level of a problem, with the planted solution.
//!
//! Run with: cargo run --example generate_instances -- "Vertex Cover"

use npbench::gym::{generate_level, verify_solution};
use npbench::model::{DifficultyLadder, ProblemId};

fn main() -> npbench::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "3SAT".into());
    let problem: ProblemId = name.parse()?;
    let ladder = DifficultyLadder::builtin();

    for (level, config) in ladder.levels(problem).take(4) {
        let pair = generate_level(problem, level, 7)?;
        let ok = verify_solution(&pair.instance, &pair.planted).ok;
        println!("level {level} {:?}", config.params());
        println!("  instance: {}", pair.instance.render()?);
        println!("  planted:  {} (verifies: {ok})", pair.planted.render()?);
    }
    Ok(())
}
