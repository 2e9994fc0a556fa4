//! Finite-dimensional quantum-state arithmetic.
//!
//! Entropies are in bits. Trace distance is the full Schatten 1-norm
//! `‖ρ − σ‖₁ ∈ [0, 2]`, not the halved version.

mod literal;
mod matrix;
mod measures;
mod povm;
pub mod random;
mod state;

pub use literal::{format_complex, format_matrix, parse_complex, parse_matrix, read_matrix_file};
pub use matrix::{ComplexMatrix, HermitianEigen, C64, DEFAULT_TOL};
pub use measures::{
    binary_entropy, fidelity, helstrom_success_probability, mixture_eigenvalues, shannon_entropy,
    trace_distance, von_neumann_entropy,
};
pub use povm::{error_rates, holevo_helstrom, measure, NoisePair, TwoOutcomePovm};
pub use state::{DensityMatrix, PureState};
