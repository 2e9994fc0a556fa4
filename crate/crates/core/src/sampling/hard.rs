//! Hard distributions from the lower-bound constructions.

use super::distribution::{Atom, LabeledDistribution};
use super::labels::LabelPair;
use crate::concepts::Concept;
use crate::{Error, Result};

/// The pair `μ±` on a single instance `x` where `f(x) = 0` and `g(x) = 1`:
/// `μ±(x, 0) = (1 ± λ)/2`, `μ±(x, 1) = (1 ∓ λ)/2` with `λ = ε/(2‖σ₀ − σ₁‖₁)`.
pub fn agnostic_hard_pair(
    f: &Concept,
    g: &Concept,
    x: usize,
    epsilon: f64,
    labels: &LabelPair,
) -> Result<(LabeledDistribution, LabeledDistribution)> {
    if f.evaluate(x)? != 0 || g.evaluate(x)? != 1 {
        return Err(Error::param("hard pair needs f(x) = 0 and g(x) = 1"));
    }
    let norm = labels.trace_distance();
    if !(0.0..norm / (2.0 * 2f64.sqrt())).contains(&epsilon) {
        return Err(Error::param(format!("epsilon {epsilon} must lie in [0, ‖σ₀−σ₁‖₁/(2√2))")));
    }
    let lambda = epsilon / (2.0 * norm);
    let build = |s: f64| {
        LabeledDistribution::new(vec![
            Atom { instance: x, bit: 0, prob: (1.0 + s * lambda) / 2.0 },
            Atom { instance: x, bit: 1, prob: (1.0 - s * lambda) / 2.0 },
        ])
    };
    Ok((build(1.0)?, build(-1.0)?))
}

/// `μ_a(s_i, b) = (1/2d)(1 + (−1)^{a_i + b} · 8ε/‖σ₀ − σ₁‖₁)` on the shattered points.
pub fn agnostic_hard_family(
    shattered: &[usize],
    a: &[u8],
    epsilon: f64,
    labels: &LabelPair,
) -> Result<LabeledDistribution> {
    let d = shattered.len();
    if d == 0 || a.len() != d {
        return Err(Error::param("need one bit of `a` per shattered point"));
    }
    let norm = labels.trace_distance();
    if !(0.0..norm / 8.0).contains(&epsilon) {
        return Err(Error::param(format!("epsilon {epsilon} must lie in [0, ‖σ₀−σ₁‖₁/8)")));
    }
    let lambda = 8.0 * epsilon / norm;
    let mut support = Vec::with_capacity(2 * d);
    for (&s, &ai) in shattered.iter().zip(a) {
        for b in 0..2u8 {
            let sign = if (ai + b) % 2 == 0 { 1.0 } else { -1.0 };
            support.push(Atom { instance: s, bit: b, prob: (1.0 + sign * lambda) / (2.0 * d as f64) });
        }
    }
    LabeledDistribution::new(support)
}

/// Realizable hard instances.
#[derive(Clone, Debug, PartialEq)]
pub enum RealizableHard {
    /// `μ(x₁) = 1 − λ`, `μ(x₂) = λ` with `λ = 2ε/‖σ₀ − σ₁‖₁`, labelled by `target`.
    Pair { x1: usize, x2: usize, target: Concept },
    /// `μ(s₀) = 1 − λ` with label 0 and `μ(s_i) = λ/d` with label `a_i`, where
    /// `λ = 8ε/‖σ₀ − σ₁‖₁` and `points = (s₀, s₁, …, s_d)`.
    Family { points: Vec<usize>, a: Vec<u8> },
}

pub fn realizable_hard_distribution(
    kind: &RealizableHard,
    epsilon: f64,
    labels: &LabelPair,
) -> Result<LabeledDistribution> {
    let norm = labels.trace_distance();
    if epsilon < 0.0 {
        return Err(Error::param("epsilon must be non-negative"));
    }
    match kind {
        RealizableHard::Pair { x1, x2, target } => {
            let lambda = 2.0 * epsilon / norm;
            if lambda >= 1.0 {
                return Err(Error::param(format!("lambda = {lambda} must be < 1")));
            }
            if x1 == x2 {
                return Err(Error::param("the two instances must differ"));
            }
            LabeledDistribution::new(vec![
                Atom { instance: *x1, bit: target.evaluate(*x1)?, prob: 1.0 - lambda },
                Atom { instance: *x2, bit: target.evaluate(*x2)?, prob: lambda },
            ])
        }
        RealizableHard::Family { points, a } => {
            let d = points.len().saturating_sub(1);
            if d == 0 || a.len() != d {
                return Err(Error::param("family needs points (s0, ..., sd) and d bits"));
            }
            let lambda = 8.0 * epsilon / norm;
            if lambda >= 1.0 {
                return Err(Error::param(format!("lambda = {lambda} must be < 1")));
            }
            let mut support = vec![Atom { instance: points[0], bit: 0, prob: 1.0 - lambda }];
            for (&s, &ai) in points[1..].iter().zip(a) {
                support.push(Atom { instance: s, bit: ai & 1, prob: lambda / d as f64 });
            }
            LabeledDistribution::new(support)
        }
    }
}
