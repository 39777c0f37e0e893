//! Aggregates a run log into IQM, mean, median and optimality gap with
//! stratified bootstrap intervals.

use npbench::eval::{accuracy_matrix, evaluate, rank_models, to_csv, EvalOptions, Grouping};
use npbench::model::ProblemId;
use npbench::solver::{run_batch, RandomBackend, SolverConfig};

fn main() -> npbench::Result<()> {
    let config = SolverConfig { n_trials: 10, ..SolverConfig::default() };
    let mut records = Vec::new();
    for seed in [1, 2] {
        let label = format!("random-{seed}");
        let config = SolverConfig { model_label: Some(label), ..config.clone() };
        records.extend(run_batch(ProblemId::Partition, &[1, 2, 3], &RandomBackend { seed }, &config)?);
    }

    let matrix = accuracy_matrix(&records);
    let options = EvalOptions { resamples: 500, groupings: vec![Grouping::Overall, Grouping::Level], ..EvalOptions::default() };
    print!("{}", to_csv(&evaluate(&matrix, &options)?));

    for entry in rank_models(&matrix, ProblemId::Partition)? {
        println!("#{} {} {:.3}", entry.rank, entry.model, entry.mean_accuracy);
    }
    Ok(())
}
