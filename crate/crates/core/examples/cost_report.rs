//! Token usage, error codes and API cost for a run.

use npbench::eval::{cost_report, error_histogram, usage_summary, PriceTable};
use npbench::model::ProblemId;
use npbench::solver::{run_batch, RandomBackend, SolverConfig};
use serde_json::json;

fn main() -> npbench::Result<()> {
    let config = SolverConfig { n_trials: 10, seeds: vec![42], ..SolverConfig::default() };
    let records = run_batch(ProblemId::Clique, &[1, 2, 3, 4], &RandomBackend { seed: 0 }, &config)?;

    for ((model, problem, level), s) in usage_summary(&records) {
        println!("{model} {problem} level {level}: {:.1} completion tokens per trial", s.mean_completion_tokens());
    }
    for ((model, level), counts) in error_histogram(&records) {
        let counts: Vec<String> = counts.iter().map(|(code, n)| format!("{} x{n}", code.to_text(ProblemId::Clique))).collect();
        println!("{model} level {level}: {}", counts.join(", "));
    }

    let prices = PriceTable::from_json(&json!({
        "random": {"prompt": "15", "completion": "60", "currency": "USD"}
    }))?;
    for line in cost_report(&records, &prices)? {
        println!("{}: {} {}", line.model, line.display_total(), line.currency);
    }
    Ok(())
}
