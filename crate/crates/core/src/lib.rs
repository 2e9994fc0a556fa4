//! Simulation laboratory for binary classification with classical instances
//! and quantum labels.
//!
//! Training examples are pairs `(x, ρ)` where `x` comes from a finite
//! classical domain and `ρ` is one of two known label states `σ₀`, `σ₁`.
//! The crate covers the whole pipeline:
//!
//! - [`qstate`]: density matrices, trace distance, fidelity, entropies and the
//!   Holevo-Helstrom measurement.
//! - [`concepts`]: finite concept classes, brute-force VC dimension and
//!   sample-equivalence partitions.
//! - [`sampling`]: labeled distributions, quantum sample generation,
//!   measurement-induced noisy samples and the hard-instance families used in
//!   lower-bound arguments.
//! - [`learners`]: noise-corrected ERM, plain 0-1 ERM, minimum disagreement,
//!   the subsample generator and the majority-vote realizable learner.
//! - [`analysis`]: exact risks, risk-comparison identities, Rademacher
//!   complexity, sample-complexity bounds and information-theoretic
//!   diagnostics.
//! - [`experiment`]: seeded Monte Carlo experiments with CSV output.
//!
//! Data-parallel loops go through [`par::Execution`]; with the `parallel`
//! feature disabled every loop runs serially.

#![forbid(unsafe_code)]

pub mod analysis;
pub mod concepts;
pub mod error;
pub mod experiment;
pub mod learners;
pub mod par;
pub mod qstate;
pub mod rng;
pub mod sampling;

pub use error::{Error, Result};
