//! Checks a few hand-written answers and prints the verifier's verdict.

use npbench::gym::verify_solution;
use npbench::model::{Instance, ProblemId, Solution};
use serde_json::json;

fn main() {
    // (x1 or !x2 or x3) and (!x1 or x2 or x3)
    let instance = Instance::new(
        ProblemId::ThreeSat,
        None,
        0,
        json!({"num_vars": 3, "clauses": [[1, -2, 3], [-1, 2, 3]]}),
    );
    let candidates = [
        json!([true, true, false]),
        json!([true, false, false]),
        json!([true, true]),
        json!("yes"),
    ];
    for c in candidates {
        let outcome = verify_solution(&instance, &Solution(c.clone()));
        match outcome.error {
            None => println!("{c}: accepted"),
            Some(code) => println!("{c}: {} ({})", code.to_text(ProblemId::ThreeSat), outcome.message),
        }
    }
}
