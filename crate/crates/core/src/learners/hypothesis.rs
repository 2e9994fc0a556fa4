use std::fmt;

use crate::concepts::{Concept, Domain};
use crate::qstate::NoisePair;
use crate::{Error, Result};

/// Accuracy, confidence and noise-bound parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LearnerConfig {
    pub epsilon: f64,
    pub delta: f64,
    /// Upper bound `η_b` on both flip rates.
    pub eta_bound: f64,
}

impl LearnerConfig {
    pub fn new(epsilon: f64, delta: f64, eta_bound: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::param(format!("epsilon {epsilon} must lie in (0, 1)")));
        }
        if !(delta > 0.0 && delta < 1.0) {
            return Err(Error::param(format!("delta {delta} must lie in (0, 1)")));
        }
        if !(0.0..0.5).contains(&eta_bound) {
            return Err(Error::param(format!("eta bound {eta_bound} must lie in [0, 1/2)")));
        }
        Ok(Self { epsilon, delta, eta_bound })
    }

    /// Confidence threshold `2(2e/d)^d` of the realizable guarantee.
    pub fn delta_threshold(d: usize) -> f64 {
        let d = d.max(1) as f64;
        2.0 * (2.0 * std::f64::consts::E / d).powf(d)
    }

    /// A warning when `δ` is not below [`Self::delta_threshold`].
    pub fn realizable_warning(&self, d: usize) -> Option<String> {
        let t = Self::delta_threshold(d);
        (self.delta >= t).then(|| format!("delta {} is not below 2(2e/d)^d = {t:.6e} for d = {d}", self.delta))
    }
}

/// Which algorithm produced a hypothesis.
#[derive(Clone, Debug, PartialEq)]
pub enum Provenance {
    Erm01 { member: usize, empirical_risk: f64 },
    ErmNoiseCorrected { member: usize, empirical_risk: f64, noise: NoisePair },
    MinDisagreement { member: usize, m1: usize, m2: usize, disagreements: u64 },
    Majority { voters: usize },
    Provided,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Erm01 { member, empirical_risk } => {
                write!(f, "erm01 member={member} empirical_risk={empirical_risk}")
            }
            Provenance::ErmNoiseCorrected { member, empirical_risk, noise } => write!(
                f,
                "erm-nc member={member} empirical_risk={empirical_risk} eta0={} eta1={}",
                noise.eta0, noise.eta1
            ),
            Provenance::MinDisagreement { member, m1, m2, disagreements } => {
                write!(f, "mindis member={member} m1={m1} m2={m2} disagreements={disagreements}")
            }
            Provenance::Majority { voters } => write!(f, "majority voters={voters}"),
            Provenance::Provided => write!(f, "provided"),
        }
    }
}

/// A labelling of the domain together with how it was obtained.
#[derive(Clone, Debug, PartialEq)]
pub struct Hypothesis {
    labels: Concept,
    pub provenance: Provenance,
}

impl Hypothesis {
    pub fn new(labels: Concept, provenance: Provenance) -> Self {
        Self { labels, provenance }
    }

    pub fn provided(labels: Concept) -> Self {
        Self::new(labels, Provenance::Provided)
    }

    pub fn concept(&self) -> &Concept {
        &self.labels
    }

    pub fn at(&self, x: usize) -> u8 {
        self.labels.at(x)
    }

    /// Class index when the hypothesis is a single class member.
    pub fn member(&self) -> Option<usize> {
        match self.provenance {
            Provenance::Erm01 { member, .. }
            | Provenance::ErmNoiseCorrected { member, .. }
            | Provenance::MinDisagreement { member, .. } => Some(member),
            Provenance::Majority { .. } | Provenance::Provided => None,
        }
    }

    /// `instance<TAB>bit` lines, preceded by a comment with the provenance.
    pub fn to_table(&self, domain: &Domain) -> String {
        let mut out = format!("# {}\n", self.provenance);
        for (x, b) in self.labels.labels().iter().enumerate() {
            out.push_str(&format!("{}\t{}\n", domain.name(x), b));
        }
        out
    }
}

impl AsRef<Concept> for Hypothesis {
    fn as_ref(&self) -> &Concept {
        &self.labels
    }
}
