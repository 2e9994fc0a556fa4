use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::spec::{Experiment, GridPoint, LearnerKind};
use crate::analysis::excess_risk;
use crate::concepts::ConceptClass;
use crate::learners::{
    erm_01, erm_noise_corrected, grouping_size, min_disagreement, realizable_learner_with, Hypothesis, LearnerConfig,
};
use crate::par::{map_range, Execution};
use crate::rng::{child_stream, trial_seed, MEASURE_STREAM, SAMPLE_STREAM};
use crate::sampling::{draw_quantum_sample, measure_labels, ClassicalSample, LabeledDistribution};
use crate::Result;

/// One row of experiment output.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub m: usize,
    pub trial: usize,
    pub seed: u64,
    pub excess_risk: f64,
    pub elapsed_ms: f64,
}

/// A trial that could not produce a record.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialFailure {
    pub grid_index: usize,
    pub trial: usize,
    pub seed: u64,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExperimentOutput {
    /// In `(grid_index, trial)` order.
    pub records: Vec<TrialRecord>,
    pub failures: Vec<TrialFailure>,
}

/// Runs one learner on one classical sample.
pub fn run_learner(
    kind: LearnerKind,
    sample: &ClassicalSample,
    class: &ConceptClass,
    exp: &Experiment,
    point: &GridPoint,
) -> Result<Hypothesis> {
    match kind {
        LearnerKind::Erm01 => erm_01(sample, class),
        LearnerKind::ErmNoiseCorrected => erm_noise_corrected(sample, class, exp.noise),
        LearnerKind::MinDisagreement => {
            let m1 = grouping_size(sample.len(), exp.eta_bound);
            min_disagreement(sample, class, m1.clamp(1, sample.len().saturating_sub(1).max(1)))
        }
        LearnerKind::Realizable => {
            let config = LearnerConfig::new(point.epsilon, point.delta, exp.eta_bound)?;
            realizable_learner_with(sample, class, &config, Execution::Serial)
        }
    }
}

fn run_trial(exp: &Experiment, mu: &LabeledDistribution, point: &GridPoint, seed: u64) -> Result<f64> {
    let quantum = draw_quantum_sample(mu, point.m, &mut child_stream(seed, SAMPLE_STREAM))?;
    let sample = measure_labels(&quantum, &exp.povm, &exp.labels, &mut child_stream(seed, MEASURE_STREAM))?;
    let h = run_learner(exp.spec.learner, &sample, &exp.class, exp, point)?;
    Ok(excess_risk(h.concept(), &exp.class, mu, &exp.labels))
}

impl Experiment {
    /// Seed of trial `trial` at grid point `grid_index`.
    pub fn seed(&self, grid_index: usize, trial: usize) -> u64 {
        let g = if self.spec.common_random_numbers { 0 } else { grid_index as u64 };
        trial_seed(self.spec.master_seed, g, trial as u64)
    }

    pub fn distribution(&self, point: &GridPoint) -> Result<LabeledDistribution> {
        self.source.at(point.epsilon, &self.labels)
    }
}

/// Every `(grid point, trial)` pair, fanned out under `exec`.
pub fn run_experiment(exp: &Experiment, exec: Execution) -> Result<ExperimentOutput> {
    let grid = &exp.spec.grid;
    let mus = grid.iter().map(|p| exp.distribution(p)).collect::<Result<Vec<_>>>()?;
    let trials = exp.spec.trials;
    let results = map_range(grid.len() * trials, exec, |k| {
        let (g, t) = (k / trials, k % trials);
        let seed = exp.seed(g, t);
        let start = Instant::now();
        let out = run_trial(exp, &mus[g], &grid[g], seed);
        let elapsed_ms = if exp.spec.timing { start.elapsed().as_secs_f64() * 1e3 } else { 0.0 };
        (g, t, seed, out, elapsed_ms)
    });
    let mut output = ExperimentOutput::default();
    for (g, t, seed, out, elapsed_ms) in results {
        match out {
            Ok(excess_risk) => {
                output.records.push(TrialRecord { m: grid[g].m, trial: t, seed, excess_risk, elapsed_ms })
            }
            Err(e) => output.failures.push(TrialFailure { grid_index: g, trial: t, seed, message: e.to_string() }),
        }
    }
    Ok(output)
}
