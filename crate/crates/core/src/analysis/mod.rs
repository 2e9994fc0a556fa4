//! Exact risk functionals, Rademacher complexity, sample-complexity bounds
//! and lower-bound diagnostics.
//!
//! Everything here is computed by exact summation over finite supports; no
//! function in this module draws random samples except the Monte Carlo
//! Rademacher estimator, which is seeded explicitly.

mod bounds;
mod diagnostics;
mod info;
mod rademacher;
mod risk;
mod teacher;

pub use crate::concepts::hamming_distance;
pub use bounds::{
    agnostic_sample_bound, min_disagreement_inputs, realizable_sample_bound, BoundReport, MinDisagreementInputs,
    AGNOSTIC_DEV_CONST, AGNOSTIC_VC_CONST, REALIZABLE_C,
};
pub use diagnostics::{
    copies_needed, distinguishing_diagnostics, pair_lower_bound, realizable_pair_lower_bound, vc_lower_bound,
    DistinguishingReport,
};
pub use info::{mutual_info_single_example, realizable_mutual_info, InfoReport, MAX_ENUMERATED_D};
pub use rademacher::{
    class_vectors, empirical_rademacher, loss_class_contraction, loss_class_vectors, rademacher_of_vectors,
    ContractionCheck, RademacherMode, EXACT_LIMIT,
};
pub use risk::{
    bayes_predictor, bayes_risk, disagreement_probability, excess_risk, intermediate_risk, marginal_mean,
    optimal_class_risk, risk_comparison, risk_report, true_risk, RiskComparison, RiskReport, IDENTITY_TOL,
};
pub use teacher::{teacher_game_check, TeacherGameReport};
