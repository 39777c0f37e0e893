//! Turning trial logs into accuracy statistics, ranks and costs.

mod bootstrap;
mod cost;
mod matrix;
mod metrics;
mod rank;
mod report;
mod summary;

pub use bootstrap::{bootstrap_ci, DEFAULT_CONFIDENCE, DEFAULT_RESAMPLES};
pub use cost::{cost_report, format_money, parse_decimal, CostLine, Currency, Money, Price, PriceTable};
pub use matrix::{accuracy_matrix, Cell, CellKey, ScoreMatrix, Task};
pub use metrics::{aggregate, aggregate_strata, iqm, mean, median, optimality_gap, Metric};
pub use rank::{rank_models, RankEntry};
pub use report::{evaluate, summary_json, to_csv, AggregateReport, EvalOptions, Grouping, CSV_HEADER};
pub use summary::{error_histogram, usage_summary, UsageStats};
