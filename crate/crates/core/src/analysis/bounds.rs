//! Sample-complexity upper bounds with explicit constants.
//!
//! Logarithms follow the usual typography: `log` is base 2 and `ln` is
//! natural. Every report carries the explicit-constant value and an
//! `O(·)`-shape value without constants.

use std::collections::BTreeMap;
use std::fmt;

use crate::learners::{laird_constant, LearnerConfig};
use crate::qstate::NoisePair;
use crate::sampling::LabelPair;
use crate::{Error, Result};

/// Induction constant of the realizable learner's guarantee.
pub const REALIZABLE_C: f64 = 7200.0;
/// Rademacher-to-VC constant times four.
pub const AGNOSTIC_VC_CONST: f64 = 124.0;
/// Bounded-difference constant of the agnostic generalization bound.
pub const AGNOSTIC_DEV_CONST: f64 = 5.0;

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub m_sufficient: u64,
    /// Named intermediate quantities in a stable order.
    pub constants: BTreeMap<String, f64>,
    /// Constant-free shape of the bound.
    pub shape: f64,
    pub warnings: Vec<String>,
}

impl BoundReport {
    pub fn constant(&self, name: &str) -> Option<f64> {
        self.constants.get(name).copied()
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<28} {}", "m_sufficient", self.m_sufficient)?;
        for (k, v) in &self.constants {
            writeln!(f, "{k:<28} {v}")?;
        }
        writeln!(f, "{:<28} {}", "shape", self.shape)?;
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}

fn to_count(x: f64, what: &str) -> Result<u64> {
    if !x.is_finite() || x < 0.0 || x > u64::MAX as f64 {
        return Err(Error::param(format!("{what} = {x} is not representable as a sample size")));
    }
    Ok(x as u64)
}

/// `m ≥ ‖σ₀−σ₁‖₁²/(4ε²)·((124√d + 5√(2 ln(8/δ)))/(1−η₀−η₁))²`, rounded up.
pub fn agnostic_sample_bound(d: usize, config: &LearnerConfig, labels: &LabelPair, noise: NoisePair) -> Result<BoundReport> {
    if d == 0 {
        return Err(Error::param("VC dimension must be positive"));
    }
    noise.check_learnable()?;
    let (eps, delta) = (config.epsilon, config.delta);
    let norm = labels.trace_distance();
    let scale = 1.0 / (1.0 - noise.sum());
    let dfl = d as f64;
    let dev = (2.0 * (8.0 / delta).ln()).sqrt();
    let inner = AGNOSTIC_VC_CONST * dfl.sqrt() + AGNOSTIC_DEV_CONST * dev;
    let exact = norm * norm / (4.0 * eps * eps) * (scale * inner).powi(2);
    // with 1/(1−η₀−η₁) ≤ 4/‖σ₀−σ₁‖₁
    let relaxed = 4.0 / (eps * eps) * inner * inner;
    let mut constants = BTreeMap::new();
    constants.insert("trace_norm".into(), norm);
    constants.insert("noise_scale".into(), scale);
    constants.insert("vc_term".into(), AGNOSTIC_VC_CONST * dfl.sqrt());
    constants.insert("deviation_term".into(), AGNOSTIC_DEV_CONST * dev);
    constants.insert("m_relaxed".into(), relaxed.ceil());
    constants.insert("eta0".into(), noise.eta0);
    constants.insert("eta1".into(), noise.eta1);
    let mut warnings = Vec::new();
    if scale > 4.0 / norm + 1e-12 {
        warnings.push(format!("1/(1-eta0-eta1) = {scale} exceeds 4/||s0-s1||_1 = {}", 4.0 / norm));
    }
    Ok(BoundReport {
        m_sufficient: to_count(exact.ceil(), "agnostic bound")?,
        constants,
        shape: (dfl + (1.0 / delta).ln()) / (eps * eps),
        warnings,
    })
}

/// Sample sizes required by the minimum-disagreement strategy on its own.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinDisagreementInputs {
    /// `max{(8/ε) log(6/δ), (16d/ε) log(16d/ε)}`.
    pub m1: f64,
    /// `C(η_b)/ε · ln((m₁^d + 1)/d)`.
    pub m2: f64,
    /// The same with `1/δ` in place of `1/d`.
    pub m2_confidence: f64,
}

pub fn min_disagreement_inputs(d: usize, config: &LearnerConfig) -> MinDisagreementInputs {
    let (eps, delta) = (config.epsilon, config.delta);
    let dfl = d.max(1) as f64;
    let m1 = f64::max(8.0 / eps * (6.0 / delta).log2(), 16.0 * dfl / eps * (16.0 * dfl / eps).log2());
    // ln(m1^d + 1) without overflow
    let ln_count = {
        let a = dfl * m1.ln();
        a + (-a).exp().ln_1p()
    };
    let c = laird_constant(config.eta_bound);
    MinDisagreementInputs {
        m1,
        m2: c / eps * (ln_count - dfl.ln()),
        m2_confidence: c / eps * (ln_count + (1.0 / delta).ln()),
    }
}

/// `m = ⌊7200·C(η_b)/ε·(d + ln(18/δ))⌋` for the subsample-and-vote learner.
pub fn realizable_sample_bound(d: usize, config: &LearnerConfig) -> Result<BoundReport> {
    if d == 0 {
        return Err(Error::param("VC dimension must be positive"));
    }
    let (eps, delta, eta) = (config.epsilon, config.delta, config.eta_bound);
    let dfl = d as f64;
    let c = laird_constant(eta);
    let log_term = dfl + (18.0 / delta).ln();
    let exact = REALIZABLE_C * c / eps * log_term;
    let relax_c = 4.0 / (1.0 - 2.0 * eta).powi(2);
    let md = min_disagreement_inputs(d, config);
    let mut constants = BTreeMap::new();
    constants.insert("c".into(), REALIZABLE_C);
    constants.insert("C(eta_b)".into(), c);
    constants.insert("relaxed_C".into(), relax_c);
    constants.insert("m_relaxed".into(), (REALIZABLE_C * relax_c / eps * log_term).floor());
    constants.insert("delta_threshold".into(), LearnerConfig::delta_threshold(d));
    constants.insert("alg1_m1".into(), md.m1);
    constants.insert("alg1_m2".into(), md.m2);
    constants.insert("alg1_m2_confidence".into(), md.m2_confidence);
    let mut warnings: Vec<String> = config.realizable_warning(d).into_iter().collect();
    if c > relax_c {
        warnings.push(format!("C(eta_b) = {c:.6} exceeds 4/(1-2eta_b)^2 = {relax_c:.6}"));
    }
    Ok(BoundReport {
        m_sufficient: to_count(exact.floor(), "realizable bound")?,
        constants,
        shape: log_term / (eps * (1.0 - 2.0 * eta).powi(2)),
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn cfg(eps: f64, delta: f64, eta: f64) -> LearnerConfig {
        LearnerConfig::new(eps, delta, eta).unwrap()
    }

    #[test]
    fn agnostic_regression_value() {
        let r = agnostic_sample_bound(4, &cfg(0.1, 0.05, 0.0), &LabelPair::orthogonal(), NoisePair::zero()).unwrap();
        let inner = 124.0 * 2.0 + 5.0 * (2.0 * 160f64.ln()).sqrt();
        assert_eq!(r.m_sufficient, (4.0 / (4.0 * 0.01) * inner * inner).ceil() as u64);
        assert_eq!(r.m_sufficient, 6_965_895);
    }

    #[test]
    fn agnostic_scaling() {
        let l = LabelPair::orthogonal();
        let n = NoisePair::zero();
        let a = agnostic_sample_bound(3, &cfg(0.2, 0.1, 0.0), &l, n).unwrap();
        let b = agnostic_sample_bound(3, &cfg(0.1, 0.1, 0.0), &l, n).unwrap();
        let ratio = b.m_sufficient as f64 / a.m_sufficient as f64;
        assert!((ratio - 4.0).abs() < 1e-5);
        for d in [100, 400, 1600] {
            let x = agnostic_sample_bound(d, &cfg(0.1, 0.1, 0.0), &l, n).unwrap().m_sufficient as f64;
            let y = agnostic_sample_bound(2 * d, &cfg(0.1, 0.1, 0.0), &l, n).unwrap().m_sufficient as f64;
            assert!(y / x > 1.0 && y / x <= 2.0 + 1e-9);
        }
    }

    #[test]
    fn realizable_regression_value() {
        let r = realizable_sample_bound(1, &cfg(0.1, 0.05, 0.0)).unwrap();
        assert_eq!(r.m_sufficient, 2_520_142);
        assert_eq!(r.constant("c"), Some(7200.0));
        assert_abs_diff_eq!(r.constant("C(eta_b)").unwrap(), 5.082_988, epsilon = 5e-7);
        assert!(r.constant("C(eta_b)").unwrap() > r.constant("relaxed_C").unwrap());
    }

    #[test]
    fn min_disagreement_inputs_are_finite() {
        let md = min_disagreement_inputs(50, &cfg(0.01, 0.01, 0.3));
        assert!(md.m1.is_finite() && md.m2.is_finite() && md.m2_confidence.is_finite());
        assert!(md.m2 > 0.0);
    }
}
