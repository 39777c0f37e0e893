use serde::{Deserialize, Serialize};

use super::matrix::ScoreMatrix;
use crate::error::{Error, Result};
use crate::model::ProblemId;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankEntry {
    pub model: String,
    pub mean_accuracy: f64,
    /// Competition rank: tied models share the better rank.
    pub rank: usize,
}

/// Orders models by mean cell accuracy on `problem`, best first.
pub fn rank_models(matrix: &ScoreMatrix, problem: ProblemId) -> Result<Vec<RankEntry>> {
    let mut entries: Vec<RankEntry> = matrix
        .models()
        .into_iter()
        .filter_map(|model| {
            let acc: Vec<f64> = matrix
                .cells
                .iter()
                .filter(|(k, _)| k.model == model && k.problem == problem)
                .map(|(_, c)| c.accuracy())
                .collect();
            (!acc.is_empty()).then(|| RankEntry {
                model: model.to_string(),
                mean_accuracy: acc.iter().sum::<f64>() / acc.len() as f64,
                rank: 0,
            })
        })
        .collect();
    if entries.len() < 2 {
        return Err(Error::InsufficientData(format!("ranking {problem} needs at least two models with results")));
    }
    entries.sort_by(|a, b| b.mean_accuracy.total_cmp(&a.mean_accuracy).then_with(|| a.model.cmp(&b.model)));
    for i in 0..entries.len() {
        entries[i].rank = if i > 0 && entries[i].mean_accuracy == entries[i - 1].mean_accuracy {
            entries[i - 1].rank
        } else {
            i + 1
        };
    }
    Ok(entries)
}
