//! Solves generated instances with the exhaustive oracle and cross-checks
//! the result against the gym verifier.

use std::time::Instant;

use npbench::gym::{generate_level, verify_solution};
use npbench::model::ProblemId;
use npbench::oracle::{solve_exact, OracleBudget, OracleResult};

fn main() -> npbench::Result<()> {
    for problem in [ProblemId::ThreeSat, ProblemId::Clique, ProblemId::HamiltonianCycle, ProblemId::BinPacking] {
        let pair = generate_level(problem, 3, 11)?;
        let start = Instant::now();
        match solve_exact(&pair.instance, OracleBudget::default())? {
            OracleResult::Found(s) => {
                let ok = verify_solution(&pair.instance, &s).ok;
                println!("{problem}: {} in {:?}, verifier agrees: {ok}", s.render()?, start.elapsed());
            }
            OracleResult::NoSolution => println!("{problem}: no solution"),
            OracleResult::Exhausted => println!("{problem}: budget exhausted"),
        }
    }
    Ok(())
}
