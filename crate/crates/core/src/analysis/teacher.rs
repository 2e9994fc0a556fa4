//! Rejection probability of a teacher who tests predictions with the
//! minimum-error measurement.

use crate::concepts::Concept;
use crate::qstate::DensityMatrix;
use crate::sampling::{LabelPair, LabeledDistribution};
use crate::{Error, Result};

use super::risk::{bayes_risk, true_risk};

/// Largest purity difference treated as equal purity.
pub const PURITY_TOL: f64 = 1e-9;
const MATCH_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct TeacherGameReport {
    /// `∫ ½ tr[E_reject(ρ) h(x)] dμ` at equal priors.
    pub rejection: f64,
    /// Smallest rejection over all predictors `X → {σ₀, σ₁}`.
    pub optimal_rejection: f64,
    pub gap: f64,
    pub half_risk: f64,
    /// `½(R_μ(h) − R_Bayes)`.
    pub half_excess_over_bayes: f64,
}

impl TeacherGameReport {
    pub fn matches_half_risk(&self) -> bool {
        (self.gap - self.half_risk).abs() <= MATCH_TOL
    }

    pub fn matches_half_excess(&self) -> bool {
        (self.gap - self.half_excess_over_bayes).abs() <= MATCH_TOL
    }
}

pub fn teacher_game_check(h: &Concept, mu: &LabeledDistribution, labels: &LabelPair) -> Result<TeacherGameReport> {
    let (p0, p1) = (labels.sigma0().purity(), labels.sigma1().purity());
    if (p0 - p1).abs() > PURITY_TOL {
        return Err(Error::UnsupportedRegime(format!("label purities differ: {p0} vs {p1}")));
    }
    let povm = labels.helstrom();
    // reject[b][c] = ½ tr[E_reject(σ_b) σ_c]; E_reject(σ₀) = E₁ and E_reject(σ₁) = E₀
    let mut reject = [[0.0; 2]; 2];
    for b in 0..2u8 {
        for c in 0..2u8 {
            let state: &DensityMatrix = labels.state(c);
            reject[b as usize][c as usize] = 0.5 * povm.probability(1 - b, state)?;
        }
    }
    let mut rejection = 0.0;
    let mut optimal = 0.0;
    for (x, [m0, m1]) in mu.joint_by_instance() {
        let cost = |c: usize| m0 * reject[0][c] + m1 * reject[1][c];
        rejection += cost(h.evaluate(x)? as usize);
        optimal += cost(0).min(cost(1));
    }
    let r = true_risk(h, mu, labels);
    Ok(TeacherGameReport {
        rejection,
        optimal_rejection: optimal,
        gap: rejection - optimal,
        half_risk: 0.5 * r,
        half_excess_over_bayes: 0.5 * (r - bayes_risk(mu, labels)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::risk::bayes_predictor;
    use approx::assert_abs_diff_eq;

    #[test]
    fn bayes_predictor_has_zero_gap() {
        let l = LabelPair::ground_state_example();
        let mu = LabeledDistribution::from_conditional(&LabeledDistribution::uniform_marginal(4), |x| 0.15 + 0.2 * x as f64)
            .unwrap();
        let h = bayes_predictor(&mu, 4);
        let r = teacher_game_check(&h, &mu, &l).unwrap();
        assert_abs_diff_eq!(r.gap, 0.0, epsilon = 1e-12);
        assert!(r.matches_half_excess());
    }

    #[test]
    fn wrong_everywhere_orthogonal() {
        let target = Concept::from_fn(3, |x| x == 2);
        let mu = LabeledDistribution::realizable(&LabeledDistribution::uniform_marginal(3), &target).unwrap();
        let wrong = Concept::from_fn(3, |x| x != 2);
        let r = teacher_game_check(&wrong, &mu, &LabelPair::orthogonal()).unwrap();
        assert_abs_diff_eq!(r.gap, 0.5, epsilon = 1e-12);
        assert!(r.matches_half_risk());
    }

    #[test]
    fn unequal_purity_is_rejected() {
        let l = LabelPair::new(DensityMatrix::maximally_mixed(2), DensityMatrix::basis(2, 0)).unwrap();
        let mu = LabeledDistribution::point_mass(0, 0);
        assert!(matches!(teacher_game_check(&Concept::constant(1, 0), &mu, &l), Err(Error::UnsupportedRegime(_))));
    }
}
