//! Per-seed accuracy cells.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::model::ProblemId;
use crate::solver::TrialRecord;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CellKey {
    pub model: String,
    pub problem: ProblemId,
    pub level: u32,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub successes: u64,
    pub trials: u64,
}

impl Cell {
    pub fn accuracy(&self) -> f64 {
        self.successes as f64 / self.trials as f64
    }
}

/// Accuracy per (model, problem, level, seed). Cells only exist where trials were recorded.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ScoreMatrix {
    pub cells: BTreeMap<CellKey, Cell>,
}

/// A (problem, level) pair; the unit of stratification.
pub type Task = (ProblemId, u32);

/// Groups records into cells. A trial counts as solved only when its
/// outcome is ok; trials that never got a reply count as unsolved.
pub fn accuracy_matrix(records: &[TrialRecord]) -> ScoreMatrix {
    let mut cells: BTreeMap<CellKey, Cell> = BTreeMap::new();
    for r in records {
        let key = CellKey { model: r.model.clone(), problem: r.problem, level: r.level, seed: r.seed };
        let cell = cells.entry(key).or_default();
        cell.trials += 1;
        cell.successes += u64::from(r.ok());
    }
    ScoreMatrix { cells }
}

impl ScoreMatrix {
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn accuracy(&self, key: &CellKey) -> Option<f64> {
        self.cells.get(key).map(Cell::accuracy)
    }

    pub fn models(&self) -> BTreeSet<&str> {
        self.cells.keys().map(|k| k.model.as_str()).collect()
    }

    pub fn problems(&self) -> BTreeSet<ProblemId> {
        self.cells.keys().map(|k| k.problem).collect()
    }

    pub fn tasks(&self, model: &str) -> BTreeSet<Task> {
        self.cells.keys().filter(|k| k.model == model).map(|k| (k.problem, k.level)).collect()
    }

    /// Cells of `model` whose task passes `filter`, grouped by task.
    fn cells_by_task(&self, model: &str, filter: &dyn Fn(Task) -> bool) -> BTreeMap<Task, Vec<Cell>> {
        let mut out: BTreeMap<Task, Vec<Cell>> = BTreeMap::new();
        for (k, c) in &self.cells {
            if k.model == model && filter((k.problem, k.level)) {
                out.entry((k.problem, k.level)).or_default().push(*c);
            }
        }
        out
    }

    /// Per-seed accuracies of `model`, one list per task.
    pub fn strata(&self, model: &str, filter: &dyn Fn(Task) -> bool) -> Vec<Vec<f64>> {
        self.cells_by_task(model, filter).into_values().map(|cells| cells.iter().map(Cell::accuracy).collect()).collect()
    }

    /// Per-trial 0/1 scores of `model`, one list per task, pooling seeds.
    pub fn joint_strata(&self, model: &str, filter: &dyn Fn(Task) -> bool) -> Vec<Vec<f64>> {
        self.cells_by_task(model, filter)
            .into_values()
            .map(|cells| {
                cells
                    .iter()
                    .flat_map(|c| {
                        let ones = std::iter::repeat_n(1.0, c.successes as usize);
                        ones.chain(std::iter::repeat_n(0.0, (c.trials - c.successes) as usize))
                    })
                    .collect()
            })
            .collect()
    }
}
