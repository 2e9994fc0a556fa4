use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;

use crate::concepts::{parse_class_spec, Concept, ConceptClass};
use crate::learners::LearnerConfig;
use crate::qstate::{NoisePair, TwoOutcomePovm};
use crate::sampling::{Atom, LabelPair, LabeledDistribution};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Scenario {
    Agnostic,
    Realizable,
}

impl FromStr for Scenario {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "agnostic" => Ok(Scenario::Agnostic),
            "realizable" => Ok(Scenario::Realizable),
            _ => Err(Error::Spec(format!("unknown scenario `{s}` (expected agnostic or realizable)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
pub enum LearnerKind {
    /// Plain 0-1 empirical risk minimization.
    #[serde(rename = "erm01")]
    Erm01,
    /// ERM with the noise-corrected loss at the measured flip rates.
    #[serde(rename = "erm-nc")]
    ErmNoiseCorrected,
    /// Single minimum-disagreement run with the `C(η_b)` split.
    #[serde(rename = "mindis")]
    MinDisagreement,
    /// Subsample generation, minimum disagreement per subsample, majority vote.
    #[serde(rename = "realizable")]
    Realizable,
}

impl FromStr for LearnerKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "erm01" => Ok(LearnerKind::Erm01),
            "erm-nc" => Ok(LearnerKind::ErmNoiseCorrected),
            "mindis" => Ok(LearnerKind::MinDisagreement),
            "realizable" => Ok(LearnerKind::Realizable),
            _ => Err(Error::Spec(format!("unknown learner `{s}` (expected erm01, erm-nc, mindis or realizable)"))),
        }
    }
}

impl fmt::Display for LearnerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LearnerKind::Erm01 => "erm01",
            LearnerKind::ErmNoiseCorrected => "erm-nc",
            LearnerKind::MinDisagreement => "mindis",
            LearnerKind::Realizable => "realizable",
        })
    }
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GridPoint {
    pub m: usize,
    pub epsilon: f64,
    pub delta: f64,
}

/// An experiment as written in a TOML config file.
///
/// ```toml
/// scenario = "agnostic"
/// class = "thresholds:50"
/// labels = "example1"
/// distribution = "flipped:25:0.1"
/// learner = "erm-nc"
/// trials = 300
/// master_seed = 7
///
/// [[grid]]
/// m = 1000
/// epsilon = 0.2
/// delta = 0.1
/// ```
///
/// Distribution specs:
/// - `realizable:K`: uniform marginal labelled by class member `K`;
/// - `flipped:K:P`: as above with each latent label flipped with probability `P`;
/// - `hard-pair` or `hard-pair:S`: the two-point construction on a disagreeing
///   pair of the class with bias `λ = S·ε/‖σ₀−σ₁‖₁` (default `S = 1/2`), so
///   it changes with the grid's `ε`;
/// - `realizable-pair:K` or `realizable-pair:K:S`: member `K` labels two
///   points, and the point where a rival member disagrees gets mass
///   `λ = S·ε/‖σ₀−σ₁‖₁` (default `S = 2`);
/// - `file:PATH`: a distribution file over the class domain.
///
/// Optional keys: `eta_bound` (defaults to the larger measured flip rate),
/// `common_random_numbers` (seed trials independently of the grid point, so
/// smaller samples are prefixes of larger ones) and `timing` (record wall
/// time; off by default to keep output reproducible).
#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub scenario: Scenario,
    pub class: String,
    pub labels: String,
    pub distribution: String,
    pub learner: LearnerKind,
    pub grid: Vec<GridPoint>,
    pub trials: usize,
    pub master_seed: u64,
    #[serde(default)]
    pub eta_bound: Option<f64>,
    #[serde(default)]
    pub common_random_numbers: bool,
    #[serde(default)]
    pub timing: bool,
}

impl ExperimentSpec {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Spec(e.to_string()))
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    /// Checks the invariants and resolves every named component.
    pub fn resolve(&self) -> Result<Experiment> {
        if self.grid.is_empty() {
            return Err(Error::Spec("grid must not be empty".into()));
        }
        if self.trials == 0 {
            return Err(Error::Spec("trials must be at least 1".into()));
        }
        for p in &self.grid {
            if p.m == 0 {
                return Err(Error::Spec("grid sample sizes must be positive".into()));
            }
            LearnerConfig::new(p.epsilon, p.delta, 0.0)?;
        }
        let class = parse_class_spec(&self.class)?;
        let labels = LabelPair::from_spec(&self.labels)?;
        let povm = labels.helstrom();
        let noise = labels.error_rates(&povm)?;
        let eta_bound = self.eta_bound.unwrap_or(noise.max());
        if eta_bound < noise.max() - 1e-12 || !(0.0..0.5).contains(&eta_bound) {
            return Err(Error::Spec(format!(
                "eta_bound {eta_bound} must lie in [max(eta0, eta1), 1/2) = [{}, 0.5)",
                noise.max()
            )));
        }
        let source = DistributionSource::parse(&self.distribution, &class)?;
        if self.scenario == Scenario::Realizable {
            for p in &self.grid {
                let mu = source.at(p.epsilon, &labels)?;
                if !class.members().iter().any(|f| mu.is_realizable_by(f)) {
                    return Err(Error::Spec(format!(
                        "distribution `{}` is not realizable by the class",
                        self.distribution
                    )));
                }
            }
        }
        Ok(Experiment { spec: self.clone(), class, labels, povm, noise, eta_bound, source })
    }
}

/// Where the labeled distribution of each grid point comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum DistributionSource {
    Fixed(LabeledDistribution),
    /// Two-point construction with `μ(x, f(x)) = (1 + λ)/2`.
    HardPair { x: usize, best: u8, scale: f64 },
    /// Realizable two-point construction: `target` labels both points,
    /// `μ(x₂) = λ` and `μ(x₁) = 1 − λ`.
    RealizablePair { x1: usize, x2: usize, target: Concept, scale: f64 },
}

impl DistributionSource {
    pub fn parse(spec: &str, class: &ConceptClass) -> Result<Self> {
        let n = class.domain().len();
        let member = |s: &str| -> Result<&Concept> {
            let k: usize = s.parse().map_err(|_| Error::Spec(format!("bad member index `{s}`")))?;
            if k >= class.len() {
                return Err(Error::Spec(format!("member {k} out of range (class has {})", class.len())));
            }
            Ok(class.member(k))
        };
        let parts: Vec<&str> = spec.splitn(2, ':').collect();
        let uniform = LabeledDistribution::uniform_marginal(n);
        match parts.as_slice() {
            ["realizable", k] => Ok(Self::Fixed(LabeledDistribution::realizable(&uniform, member(k)?)?)),
            ["flipped", rest] => {
                let (k, p) = rest.split_once(':').ok_or_else(|| Error::Spec("expected flipped:K:P".into()))?;
                let f = member(k)?;
                let p: f64 = p.parse().map_err(|_| Error::Spec(format!("bad flip probability `{p}`")))?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::Spec(format!("flip probability {p} must lie in [0, 1]")));
                }
                let mu = LabeledDistribution::from_conditional(&uniform, |x| if f.at(x) == 1 { 1.0 - p } else { p })?;
                Ok(Self::Fixed(mu))
            }
            ["hard-pair"] | ["hard-pair", _] => {
                let scale = match parts.get(1) {
                    Some(s) => s.parse().map_err(|_| Error::Spec(format!("bad scale `{s}`")))?,
                    None => 0.5,
                };
                let (f, _, x) = class
                    .disagreeing_pair()
                    .ok_or_else(|| Error::Spec("hard-pair needs two members that disagree somewhere".into()))?;
                Ok(Self::HardPair { x, best: class.member(f).at(x), scale })
            }
            ["realizable-pair", rest] => {
                let (k, scale) = match rest.split_once(':') {
                    Some((k, s)) => (k, s.parse().map_err(|_| Error::Spec(format!("bad scale `{s}`")))?),
                    None => (*rest, 2.0),
                };
                let target = member(k)?;
                // a rival that agrees with the target on x1 and not on x2
                let pair = class.members().iter().filter(|g| *g != target).find_map(|g| {
                    let x1 = (0..n).find(|&x| g.at(x) == target.at(x))?;
                    let x2 = (0..n).find(|&x| g.at(x) != target.at(x))?;
                    Some((x1, x2))
                });
                let (x1, x2) = pair.ok_or_else(|| {
                    Error::Spec("realizable-pair needs a member that agrees and disagrees with the target".into())
                })?;
                Ok(Self::RealizablePair { x1, x2, target: target.clone(), scale })
            }
            ["file", path] => Ok(Self::Fixed(LabeledDistribution::read_file(path, class.domain())?)),
            _ => Err(Error::Spec(format!("unknown distribution spec `{spec}`"))),
        }
    }

    /// The distribution used at accuracy `epsilon`.
    pub fn at(&self, epsilon: f64, labels: &LabelPair) -> Result<LabeledDistribution> {
        match self {
            Self::Fixed(mu) => Ok(mu.clone()),
            Self::HardPair { x, best, scale } => {
                let lambda = scale * epsilon / labels.trace_distance();
                if !(0.0..=1.0).contains(&lambda) {
                    return Err(Error::Spec(format!("hard-pair bias {lambda} must lie in [0, 1]")));
                }
                LabeledDistribution::new(vec![
                    Atom { instance: *x, bit: *best, prob: (1.0 + lambda) / 2.0 },
                    Atom { instance: *x, bit: 1 - best, prob: (1.0 - lambda) / 2.0 },
                ])
            }
            Self::RealizablePair { x1, x2, target, scale } => {
                let lambda = scale * epsilon / labels.trace_distance();
                if !(0.0..1.0).contains(&lambda) {
                    return Err(Error::Spec(format!("realizable-pair weight {lambda} must lie in [0, 1)")));
                }
                LabeledDistribution::new(vec![
                    Atom { instance: *x1, bit: target.at(*x1), prob: 1.0 - lambda },
                    Atom { instance: *x2, bit: target.at(*x2), prob: lambda },
                ])
            }
        }
    }

    /// Whether [`Self::at`] changes with `epsilon`.
    pub fn depends_on_epsilon(&self) -> bool {
        !matches!(self, Self::Fixed(_))
    }
}

/// A resolved experiment, ready to run.
#[derive(Clone, Debug)]
pub struct Experiment {
    pub spec: ExperimentSpec,
    pub class: ConceptClass,
    pub labels: LabelPair,
    pub povm: TwoOutcomePovm,
    pub noise: NoisePair,
    pub eta_bound: f64,
    pub source: DistributionSource,
}
