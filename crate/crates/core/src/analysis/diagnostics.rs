//! Distinguishing-probability diagnostics behind the confidence lower bounds.

use crate::qstate::{binary_entropy, fidelity, trace_distance, DensityMatrix};
use crate::sampling::{LabelPair, LabeledDistribution};
use crate::{Error, Result};

/// Quantities for telling `ρ₊^{⊗m}` from `ρ₋^{⊗m}` apart.
#[derive(Clone, Debug, PartialEq)]
pub struct DistinguishingReport {
    /// `F(ρ₊, ρ₋)`.
    pub fidelity: f64,
    /// `√(1 − λ²)` with `λ = |μ₊(x,0) − μ₊(x,1)|`.
    pub fidelity_lower: f64,
    /// Single-copy `½‖ρ₊ − ρ₋‖₁`.
    pub trace_distance_half: f64,
    /// `½(1 + √(1 − F^{2m}))`.
    pub p_opt_upper: f64,
    /// Smallest `m` permitted by `F^{2m} ≤ 4δ(1−δ)`, as a real number.
    pub m_min: f64,
    /// The same bound with `F` replaced by its lower bound.
    pub m_min_from_lower: f64,
    /// Whether confidence `1 − δ` is out of reach at the given `m`.
    pub unreachable: bool,
}

fn single_instance(mu: &LabeledDistribution) -> Result<usize> {
    match mu.instances().as_slice() {
        [x] => Ok(*x),
        _ => Err(Error::UnsupportedRegime("distinguishing diagnostics need a single-instance distribution".into())),
    }
}

fn cq_state(mu: &LabeledDistribution, x: usize, labels: &LabelPair) -> Result<DensityMatrix> {
    DensityMatrix::mixture(&[mu.prob(x, 0), mu.prob(x, 1)], &[labels.sigma0(), labels.sigma1()])
}

/// `ln(1/(4δ(1−δ))) / ln(1/F²)`, infinite when `F = 1` and zero when `δ = 1/2`.
pub fn copies_needed(fidelity: f64, delta: f64) -> f64 {
    let num = (1.0 / (4.0 * delta * (1.0 - delta))).ln().max(0.0);
    let den = -(fidelity * fidelity).ln();
    if num == 0.0 {
        0.0
    } else if den <= 0.0 {
        f64::INFINITY
    } else {
        num / den
    }
}

pub fn distinguishing_diagnostics(
    mu_plus: &LabeledDistribution,
    mu_minus: &LabeledDistribution,
    labels: &LabelPair,
    m: usize,
    delta: f64,
) -> Result<DistinguishingReport> {
    if m == 0 {
        return Err(Error::param("m must be positive"));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::param(format!("delta {delta} must lie in (0, 1)")));
    }
    let x = single_instance(mu_plus)?;
    if single_instance(mu_minus)? != x {
        return Err(Error::UnsupportedRegime("both distributions must sit on the same instance".into()));
    }
    // the classical register is one-dimensional, so ρ± live on the label space
    let plus = cq_state(mu_plus, x, labels)?;
    let minus = cq_state(mu_minus, x, labels)?;
    let f = fidelity(&plus, &minus)?;
    let lambda = (mu_plus.prob(x, 0) - mu_plus.prob(x, 1)).abs();
    let f_lower = (1.0 - lambda * lambda).max(0.0).sqrt();
    let m_min = copies_needed(f, delta);
    Ok(DistinguishingReport {
        fidelity: f,
        fidelity_lower: f_lower,
        trace_distance_half: 0.5 * trace_distance(&plus, &minus)?,
        p_opt_upper: 0.5 * (1.0 + (1.0 - f.powf(2.0 * m as f64)).max(0.0).sqrt()),
        m_min,
        m_min_from_lower: copies_needed(f_lower, delta),
        unreachable: (m as f64) < m_min,
    })
}

/// Confidence lower bound of the agnostic hard pair: `λ = ε/(2‖σ₀−σ₁‖₁)`.
pub fn pair_lower_bound(epsilon: f64, delta: f64, labels: &LabelPair) -> f64 {
    let lambda = epsilon / (2.0 * labels.trace_distance());
    copies_needed((1.0 - lambda * lambda).max(0.0).sqrt(), delta)
}

/// Confidence lower bound of the realizable pair: `log(4δ(1−δ)) / (2 log(1 − ε))`.
pub fn realizable_pair_lower_bound(epsilon: f64, delta: f64) -> f64 {
    copies_needed(1.0 - epsilon, delta)
}

/// `[(1 − H(1/4) − δ)d − H(δ)] / I(A:B₁)`, clipped at zero.
pub fn vc_lower_bound(d: usize, delta: f64, info_bits: f64) -> f64 {
    let num = (1.0 - binary_entropy(0.25) - delta) * d as f64 - binary_entropy(delta);
    if num <= 0.0 {
        0.0
    } else if info_bits <= 0.0 {
        f64::INFINITY
    } else {
        num / info_bits
    }
}
