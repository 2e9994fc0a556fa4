//! Seeded Monte Carlo experiments: draw a quantum sample, measure it with the
//! Holevo-Helstrom measurement, run a learner and record the exact excess
//! risk of its output.
//!
//! A run is fully determined by its [`ExperimentSpec`]; serial and parallel
//! execution give identical records.

mod records;
mod run;
mod spec;
mod summary;

pub use records::{canonical_sort, read_records, read_records_file, write_records, write_records_file, CSV_HEADER};
pub use run::{run_experiment, run_learner, ExperimentOutput, TrialFailure, TrialRecord};
pub use spec::{DistributionSource, Experiment, ExperimentSpec, GridPoint, LearnerKind, Scenario};
pub use summary::{
    binomial_upper_tail, failure_rate_consistent, loglog_slope, scaling_fit, summarize, ScalingFit, SizeSummary,
    Summary,
};
