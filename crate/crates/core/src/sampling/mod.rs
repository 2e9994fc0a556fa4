//! Labeled distributions, sample generation and measurement.
//!
//! Randomness is supplied by the caller. The experiment runner gives every
//! trial its own [`crate::rng::SimRng`] seed and uses one child stream for
//! drawing examples and another for measuring them.

mod distribution;
mod hard;
mod labels;
mod sample;

pub use distribution::{Atom, LabeledDistribution, MASS_TOL};
pub use hard::{agnostic_hard_family, agnostic_hard_pair, realizable_hard_distribution, RealizableHard};
pub use labels::LabelPair;
pub use sample::{draw_quantum_sample, induced_nu, measure_labels, ClassicalSample, QuantumSample};
pub(crate) use sample::count_items;
