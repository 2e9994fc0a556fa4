use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cqlearn::analysis::{
    agnostic_sample_bound, excess_risk, mutual_info_single_example, pair_lower_bound, realizable_sample_bound,
    vc_lower_bound,
};
use cqlearn::concepts::{parse_class_spec, vc_dimension_bruteforce};
use cqlearn::experiment::{
    canonical_sort, run_experiment, run_learner, summarize, write_records, ExperimentSpec,
    GridPoint, LearnerKind, Scenario,
};
use cqlearn::learners::LearnerConfig;
use cqlearn::par::Execution;
use cqlearn::qstate::format_matrix;
use cqlearn::rng::{child_stream, MEASURE_STREAM, SAMPLE_STREAM};
use cqlearn::sampling::{draw_quantum_sample, measure_labels, LabelPair};
use cqlearn::Result;

/// Learning with classical instances and quantum labels.
#[derive(Parser)]
#[command(name = "cqlearn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Holevo-Helstrom measurement, flip rates and success probability of a label pair.
    Discriminate {
        /// `orthogonal`, `example1`, `symmetric:ETA` or `files:A,B`.
        #[arg(long, default_value = "example1")]
        labels: String,
    },
    /// Sample-complexity upper bounds with their named constants.
    Bounds {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value = "orthogonal")]
        labels: String,
        /// Noise bound for the realizable bound; defaults to the larger flip rate.
        #[arg(long)]
        eta_bound: Option<f64>,
    },
    /// Lower and upper bounds over a grid of accuracies and confidences, as CSV.
    Diagnose {
        #[arg(long)]
        d: usize,
        #[arg(long, value_delimiter = ',', default_value = "0.1,0.05,0.02,0.01")]
        epsilons: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "0.05")]
        deltas: Vec<f64>,
        #[arg(long, default_value = "orthogonal")]
        labels: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One learning run; prints the hypothesis table.
    Learn(LearnArgs),
    /// A grid of seeded trials, written as CSV.
    Experiment(ExperimentArgs),
    /// Brute-force VC dimension of a class.
    Vcdim {
        /// e.g. `thresholds:50`, `rectangles:5x5`, `file:PATH`.
        #[arg(long)]
        class: String,
    },
}

#[derive(Args)]
struct LearnArgs {
    #[arg(long)]
    class: String,
    #[arg(long, default_value = "example1")]
    labels: String,
    #[arg(long)]
    distribution: String,
    #[arg(long, default_value = "erm-nc")]
    learner: String,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    #[arg(long, default_value_t = 0.1)]
    delta: f64,
    #[arg(long)]
    eta_bound: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// TOML experiment file; flags below override its values.
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    /// CSV path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Run trials on one thread.
    #[arg(long)]
    serial: bool,
    /// Print a per-size summary to standard error.
    #[arg(long)]
    summary: bool,
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn discriminate(labels: &str) -> Result<()> {
    let labels = LabelPair::from_spec(labels)?;
    let povm = labels.helstrom();
    let noise = labels.error_rates(&povm)?;
    println!("trace_distance\t{}", labels.trace_distance());
    println!("eta0\t{}", noise.eta0);
    println!("eta1\t{}", noise.eta1);
    println!("success_probability\t{}", povm.success_probability(labels.sigma0(), labels.sigma1())?);
    print!("E0\n{}", format_matrix(povm.e0()));
    Ok(())
}

fn bounds(d: usize, epsilon: f64, delta: f64, labels: &str, eta_bound: Option<f64>) -> Result<()> {
    let labels = LabelPair::from_spec(labels)?;
    let noise = labels.error_rates(&labels.helstrom())?;
    let config = LearnerConfig::new(epsilon, delta, eta_bound.unwrap_or(noise.max()))?;
    println!("[agnostic]");
    print!("{}", agnostic_sample_bound(d, &config, &labels, noise)?);
    println!("\n[realizable]");
    print!("{}", realizable_sample_bound(d, &config)?);
    Ok(())
}

fn diagnose(d: usize, epsilons: &[f64], deltas: &[f64], labels: &str, out: &Option<PathBuf>) -> Result<()> {
    let labels = LabelPair::from_spec(labels)?;
    let noise = labels.error_rates(&labels.helstrom())?;
    let mut w = output(out)?;
    writeln!(w, "epsilon,delta,d,m_lower_pair,m_lower_vc,m_upper_agnostic,m_upper_realizable,I_exact_bits,I_closed_bits")?;
    for &epsilon in epsilons {
        let info = mutual_info_single_example(d, epsilon, &labels)?;
        for &delta in deltas {
            let config = LearnerConfig::new(epsilon, delta, noise.max())?;
            writeln!(
                w,
                "{epsilon},{delta},{d},{},{},{},{},{},{}",
                pair_lower_bound(epsilon, delta, &labels),
                vc_lower_bound(d, delta, info.exact_bits),
                agnostic_sample_bound(d, &config, &labels, noise)?.m_sufficient,
                realizable_sample_bound(d, &config)?.m_sufficient,
                info.exact_bits,
                info.closed_form_bits,
            )?;
        }
    }
    Ok(())
}

fn learn(args: &LearnArgs) -> Result<()> {
    let learner: LearnerKind = args.learner.parse()?;
    let spec = ExperimentSpec {
        scenario: Scenario::Agnostic,
        class: args.class.clone(),
        labels: args.labels.clone(),
        distribution: args.distribution.clone(),
        learner,
        grid: vec![GridPoint { m: args.m, epsilon: args.epsilon, delta: args.delta }],
        trials: 1,
        master_seed: args.seed,
        eta_bound: args.eta_bound,
        common_random_numbers: false,
        timing: false,
    };
    let exp = spec.resolve()?;
    let point = spec.grid[0];
    let mu = exp.distribution(&point)?;
    let seed = exp.seed(0, 0);
    let quantum = draw_quantum_sample(&mu, args.m, &mut child_stream(seed, SAMPLE_STREAM))?;
    let sample = measure_labels(&quantum, &exp.povm, &exp.labels, &mut child_stream(seed, MEASURE_STREAM))?;
    let h = run_learner(learner, &sample, &exp.class, &exp, &point)?;
    let mut w = output(&args.out)?;
    write!(w, "{}", h.to_table(exp.class.domain()))?;
    eprintln!("excess_risk\t{}", excess_risk(h.concept(), &exp.class, &mu, &exp.labels));
    Ok(())
}

fn experiment(args: &ExperimentArgs) -> Result<()> {
    let mut spec = ExperimentSpec::read_file(&args.config)?;
    if let Some(seed) = args.seed {
        spec.master_seed = seed;
    }
    if let Some(trials) = args.trials {
        spec.trials = trials;
    }
    let exp = spec.resolve()?;
    let exec = if args.serial { Execution::Serial } else { Execution::Parallel };
    let mut result = run_experiment(&exp, exec)?;
    canonical_sort(&mut result.records);
    write_records(&result.records, output(&args.out)?)?;
    for f in &result.failures {
        eprintln!("trial failed: grid {} trial {} seed {}: {}", f.grid_index, f.trial, f.seed, f.message);
    }
    if args.summary && !result.records.is_empty() {
        let mut epsilons: Vec<f64> = spec.grid.iter().map(|p| p.epsilon).collect();
        epsilons.dedup();
        let pair_source = exp.source.depends_on_epsilon();
        for eps in epsilons {
            let rows: Vec<_> = if pair_source {
                let ms: Vec<usize> = spec.grid.iter().filter(|p| p.epsilon == eps).map(|p| p.m).collect();
                result.records.iter().filter(|r| ms.contains(&r.m)).copied().collect()
            } else {
                result.records.clone()
            };
            eprint!("{}", summarize(&rows, eps)?.to_table());
        }
    }
    Ok(())
}

fn vcdim(class: &str) -> Result<()> {
    let class = parse_class_spec(class)?;
    println!("members\t{}", class.len());
    println!("vc_dimension\t{}", vc_dimension_bruteforce(&class)?);
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Discriminate { labels } => discriminate(&labels),
        Command::Bounds { d, epsilon, delta, labels, eta_bound } => bounds(d, epsilon, delta, &labels, eta_bound),
        Command::Diagnose { d, epsilons, deltas, labels, out } => diagnose(d, &epsilons, &deltas, &labels, &out),
        Command::Learn(args) => learn(&args),
        Command::Experiment(args) => experiment(&args),
        Command::Vcdim { class } => vcdim(&class),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
