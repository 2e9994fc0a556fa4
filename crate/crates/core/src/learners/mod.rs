//! Learners operating on measured (classical) samples.
//!
//! All of them are exhaustive over a finite [`ConceptClass`], deterministic
//! and break ties towards the lowest member index.
//!
//! [`ConceptClass`]: crate::concepts::ConceptClass

mod erm;
mod hypothesis;
mod laird;
mod realizable;
mod subsample;

pub use erm::{erm_01, erm_noise_corrected, noise_corrected_loss};
pub use hypothesis::{Hypothesis, LearnerConfig, Provenance};
pub use laird::{laird_constant, laird_min_size, laird_split, min_disagreement};
pub use realizable::{grouping_size, majority_vote, realizable_learner, realizable_learner_with, subsample_hypotheses};
pub use subsample::{subsample_count, subsample_ranges, subsamples};
