use crate::concepts::{Concept, ConceptClass};
use crate::qstate::TwoOutcomePovm;
use crate::sampling::{induced_nu, LabelPair, LabeledDistribution};
use crate::Result;

/// Tolerance for the risk-comparison identity.
pub const IDENTITY_TOL: f64 = 1e-10;

/// `P_{(x,b)∼μ}[h(x) ≠ b]`.
pub fn disagreement_probability(h: &Concept, mu: &LabeledDistribution) -> f64 {
    mu.support().iter().filter(|a| h.at(a.instance) != a.bit).map(|a| a.prob).sum()
}

/// `R_μ(h) = (‖σ₀ − σ₁‖₁/2)·P[h(x) ≠ b]`.
pub fn true_risk(h: &Concept, mu: &LabeledDistribution, labels: &LabelPair) -> f64 {
    0.5 * labels.trace_distance() * disagreement_probability(h, mu)
}

/// Smallest true risk over the class and the first member attaining it.
pub fn optimal_class_risk(class: &ConceptClass, mu: &LabeledDistribution, labels: &LabelPair) -> (usize, f64) {
    let risks: Vec<f64> = class.members().iter().map(|f| true_risk(f, mu, labels)).collect();
    let best = risks.iter().copied().fold(f64::INFINITY, f64::min);
    (risks.iter().position(|&r| r == best).unwrap(), best)
}

/// Risk of the pointwise Bayes predictor (the infimum over all labellings).
pub fn bayes_risk(mu: &LabeledDistribution, labels: &LabelPair) -> f64 {
    let p: f64 = mu.joint_by_instance().iter().map(|(_, [m0, m1])| m0.min(*m1)).sum();
    0.5 * labels.trace_distance() * p
}

/// The pointwise Bayes predictor over `n` instances; ties and unseen points predict 0.
pub fn bayes_predictor(mu: &LabeledDistribution, n: usize) -> Concept {
    let joint = mu.joint_by_instance();
    Concept::from_fn(n, |x| joint.iter().any(|(y, [m0, m1])| *y == x && m1 > m0))
}

/// `R̃_ν(g) = P_{(x,y)∼ν}[g(x) ≠ y]`.
pub fn intermediate_risk(g: &Concept, nu: &LabeledDistribution) -> f64 {
    disagreement_probability(g, nu)
}

/// `E_{μ₁}[g]`.
pub fn marginal_mean(g: &Concept, mu: &LabeledDistribution) -> f64 {
    mu.support().iter().filter(|a| g.at(a.instance) == 1).map(|a| a.prob).sum()
}

#[derive(Clone, Debug, PartialEq)]
pub struct RiskReport {
    pub true_risk: f64,
    pub optimal_class_risk: f64,
    pub excess: f64,
    pub intermediate_risk: Option<f64>,
}

pub fn risk_report(
    h: &Concept,
    class: &ConceptClass,
    mu: &LabeledDistribution,
    labels: &LabelPair,
    nu: Option<&LabeledDistribution>,
) -> RiskReport {
    let true_risk = true_risk(h, mu, labels);
    let (_, optimal_class_risk) = optimal_class_risk(class, mu, labels);
    RiskReport {
        true_risk,
        optimal_class_risk,
        excess: true_risk - optimal_class_risk,
        intermediate_risk: nu.map(|nu| intermediate_risk(h, nu)),
    }
}

/// `R_μ(h) − min_{f∈F} R_μ(f)`.
pub fn excess_risk(h: &Concept, class: &ConceptClass, mu: &LabeledDistribution, labels: &LabelPair) -> f64 {
    true_risk(h, mu, labels) - optimal_class_risk(class, mu, labels).1
}

/// Both sides of the intermediate-risk identity and its two sandwich corollaries.
#[derive(Clone, Debug, PartialEq)]
pub struct RiskComparison {
    pub eta0: f64,
    pub eta1: f64,
    pub true_risk: f64,
    /// `R̃_ν(g)` evaluated directly under the induced `ν`.
    pub intermediate_risk: f64,
    /// `(‖σ₀−σ₁‖₁/2)·P[h≠ρ] + η₀ + (η₁ − η₀)·E_{μ₁}[g]`.
    pub identity_rhs: f64,
    /// `(R̃ − max η, R̃ − min η)`, which should contain `true_risk`.
    pub risk_sandwich: (f64, f64),
    pub excess_risk: f64,
    pub intermediate_excess: f64,
    /// `(R̃ − R̃* − |η₀ − η₁|, R̃ − R̃* + |η₀ − η₁|)`, which should contain `excess_risk`.
    pub excess_sandwich: (f64, f64),
}

impl RiskComparison {
    pub fn identity_gap(&self) -> f64 {
        (self.intermediate_risk - self.identity_rhs).abs()
    }

    pub fn identity_holds(&self, tol: f64) -> bool {
        self.identity_gap() <= tol
    }

    pub fn risk_sandwich_holds(&self, tol: f64) -> bool {
        self.risk_sandwich.0 - tol <= self.true_risk && self.true_risk <= self.risk_sandwich.1 + tol
    }

    pub fn excess_sandwich_holds(&self, tol: f64) -> bool {
        self.excess_sandwich.0 - tol <= self.excess_risk && self.excess_risk <= self.excess_sandwich.1 + tol
    }

    pub fn all_hold(&self, tol: f64) -> bool {
        self.identity_holds(tol) && self.risk_sandwich_holds(tol) && self.excess_sandwich_holds(tol)
    }
}

/// Compares the true risk of `h = σ_{g(·)}` with the 0-1 risk of `g` under
/// the measured law. The identity is exact for the Holevo-Helstrom
/// measurement; for other measurements the record shows the mismatch.
pub fn risk_comparison(
    g: &Concept,
    class: &ConceptClass,
    mu: &LabeledDistribution,
    labels: &LabelPair,
    povm: &TwoOutcomePovm,
) -> Result<RiskComparison> {
    let noise = labels.error_rates(povm)?;
    let (eta0, eta1) = (noise.eta0, noise.eta1);
    let nu = induced_nu(mu, povm, labels)?;
    let true_risk = true_risk(g, mu, labels);
    let intermediate = intermediate_risk(g, &nu);
    let identity_rhs =
        0.5 * labels.trace_distance() * disagreement_probability(g, mu) + eta0 + (eta1 - eta0) * marginal_mean(g, mu);
    let best_true = optimal_class_risk(class, mu, labels).1;
    let best_intermediate =
        class.members().iter().map(|f| intermediate_risk(f, &nu)).fold(f64::INFINITY, f64::min);
    let gap = (eta0 - eta1).abs();
    let intermediate_excess = intermediate - best_intermediate;
    Ok(RiskComparison {
        eta0,
        eta1,
        true_risk,
        intermediate_risk: intermediate,
        identity_rhs,
        risk_sandwich: (intermediate - noise.max(), intermediate - noise.min()),
        excess_risk: true_risk - best_true,
        intermediate_excess,
        excess_sandwich: (intermediate_excess - gap, intermediate_excess + gap),
    })
}
