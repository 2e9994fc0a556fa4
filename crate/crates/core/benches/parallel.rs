use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::Rng;

use cqlearn::analysis::{rademacher_of_vectors, RademacherMode};
use cqlearn::experiment::{run_experiment, ExperimentSpec};
use cqlearn::par::Execution;
use cqlearn::rng::rng_from_seed;

const EXPERIMENT: &str = r#"
scenario = "agnostic"
class = "thresholds:50"
labels = "example1"
distribution = "flipped:20:0.2"
learner = "erm-nc"
trials = 64
master_seed = 7

[[grid]]
m = 2000
epsilon = 0.1
delta = 0.1
"#;

fn modes() -> [(&'static str, Execution); 2] {
    [("serial", Execution::Serial), ("parallel", Execution::Parallel)]
}

fn experiment(c: &mut Criterion) {
    let exp = ExperimentSpec::from_toml(EXPERIMENT).unwrap().resolve().unwrap();
    let mut group = c.benchmark_group("run_experiment");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| run_experiment(&exp, exec).unwrap()));
    }
    group.finish();
}

fn rademacher(c: &mut Criterion) {
    let mut rng = rng_from_seed(3);
    let vectors: Vec<Vec<f64>> = (0..64).map(|_| (0..200).map(|_| rng.random()).collect()).collect();
    let mode = RademacherMode::MonteCarlo { samples: 4000, seed: 11 };
    let mut group = c.benchmark_group("rademacher_monte_carlo");
    for (name, exec) in modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| rademacher_of_vectors(&vectors, mode, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, experiment, rademacher);
criterion_main!(benches);
