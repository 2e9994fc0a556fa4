use nalgebra::DMatrix;
use rand::Rng;

use super::matrix::{ComplexMatrix, C64, DEFAULT_TOL};
use super::measures::trace_distance;
use super::state::DensityMatrix;
use crate::{Error, Result};

/// Below this trace distance two label states are treated as identical.
const INDISTINGUISHABLE: f64 = 1e-8;

/// A measurement with outcomes 0 and 1.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoOutcomePovm {
    e0: ComplexMatrix,
    e1: ComplexMatrix,
}

impl TwoOutcomePovm {
    pub fn new(e0: ComplexMatrix, e1: ComplexMatrix) -> Result<Self> {
        e0.check_same_dim(&e1)?;
        let tol = DEFAULT_TOL;
        let sum = &e0 + &e1;
        if !sum.approx_eq(&ComplexMatrix::identity(e0.dim()), tol) {
            return Err(Error::InvalidPovm("effects do not sum to the identity".into()));
        }
        for (name, e) in [("E0", &e0), ("E1", &e1)] {
            if !e.is_hermitian(tol) {
                return Err(Error::InvalidPovm(format!("{name} is not Hermitian")));
            }
            let eig = e.eigenvalues_hermitian();
            if eig[0] < -tol || eig[eig.len() - 1] > 1.0 + tol {
                return Err(Error::InvalidPovm(format!("{name} has spectrum outside [0, 1]")));
            }
        }
        Ok(Self { e0: e0.hermitian_part(), e1: e1.hermitian_part() })
    }

    /// Completes `E₀` with `E₁ = I − E₀`.
    pub fn from_e0(e0: ComplexMatrix) -> Result<Self> {
        let e1 = &ComplexMatrix::identity(e0.dim()) - &e0;
        Self::new(e0, e1)
    }

    /// The measurement that always reports `bit`.
    pub fn constant(dim: usize, bit: u8) -> Self {
        let (i, z) = (ComplexMatrix::identity(dim), ComplexMatrix::zeros(dim));
        if bit == 0 {
            Self { e0: i, e1: z }
        } else {
            Self { e0: z, e1: i }
        }
    }

    pub fn e0(&self) -> &ComplexMatrix {
        &self.e0
    }

    pub fn e1(&self) -> &ComplexMatrix {
        &self.e1
    }

    pub fn effect(&self, outcome: u8) -> &ComplexMatrix {
        if outcome == 0 {
            &self.e0
        } else {
            &self.e1
        }
    }

    pub fn dim(&self) -> usize {
        self.e0.dim()
    }

    /// `tr[E_outcome ρ]`, clamped into `[0, 1]`.
    pub fn probability(&self, outcome: u8, state: &DensityMatrix) -> Result<f64> {
        let e = self.effect(outcome);
        e.check_same_dim(state.matrix())?;
        Ok(e.trace_product(state.matrix()).re.clamp(0.0, 1.0))
    }

    /// `½ tr[E₀σ₀] + ½ tr[E₁σ₁]`.
    pub fn success_probability(&self, sigma0: &DensityMatrix, sigma1: &DensityMatrix) -> Result<f64> {
        Ok(0.5 * self.probability(0, sigma0)? + 0.5 * self.probability(1, sigma1)?)
    }
}

/// Error rates `η₀ = tr[σ₀E₁]`, `η₁ = tr[σ₁E₀]` of a measurement.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoisePair {
    pub eta0: f64,
    pub eta1: f64,
}

impl NoisePair {
    pub fn new(eta0: f64, eta1: f64) -> Result<Self> {
        for eta in [eta0, eta1] {
            if !(0.0..=1.0).contains(&eta) {
                return Err(Error::param(format!("noise rate {eta} outside [0, 1]")));
            }
        }
        Ok(Self { eta0, eta1 })
    }

    pub fn zero() -> Self {
        Self { eta0: 0.0, eta1: 0.0 }
    }

    pub fn symmetric(eta: f64) -> Result<Self> {
        Self::new(eta, eta)
    }

    /// Flip probability for true label `bit`.
    pub fn eta(&self, bit: u8) -> f64 {
        if bit == 0 {
            self.eta0
        } else {
            self.eta1
        }
    }

    pub fn sum(&self) -> f64 {
        self.eta0 + self.eta1
    }

    pub fn max(&self) -> f64 {
        self.eta0.max(self.eta1)
    }

    pub fn min(&self) -> f64 {
        self.eta0.min(self.eta1)
    }

    /// Fails with [`Error::DegenerateNoise`] unless `η₀ + η₁ < 1`.
    pub fn check_learnable(&self) -> Result<()> {
        if self.sum() >= 1.0 {
            return Err(Error::DegenerateNoise { sum: self.sum() });
        }
        Ok(())
    }
}

/// Projector onto the positive eigenspace of `σ₀ − σ₁` as `E₀`, and its
/// complement as `E₁`. Eigenvalues within `±1e-10` of zero count as zero and
/// go to `E₁`, so directions outside both supports are padded with 0 in `E₀`.
pub fn holevo_helstrom(sigma0: &DensityMatrix, sigma1: &DensityMatrix) -> Result<TwoOutcomePovm> {
    let distance = trace_distance(sigma0, sigma1)?;
    if distance <= INDISTINGUISHABLE {
        return Err(Error::IndistinguishableStates { distance });
    }
    let eig = (sigma0.matrix() - sigma1.matrix()).hermitian_eigen();
    let dim = sigma0.dim();
    let mut e0 = DMatrix::<C64>::zeros(dim, dim);
    for (k, &l) in eig.values.iter().enumerate() {
        if l > DEFAULT_TOL {
            let v = eig.vectors.column(k);
            e0 += v * v.adjoint();
        }
    }
    let e0 = ComplexMatrix::from_dmatrix(e0)?;
    let e1 = &ComplexMatrix::identity(dim) - &e0;
    Ok(TwoOutcomePovm { e0: e0.hermitian_part(), e1: e1.hermitian_part() })
}

pub fn error_rates(povm: &TwoOutcomePovm, sigma0: &DensityMatrix, sigma1: &DensityMatrix) -> Result<NoisePair> {
    NoisePair::new(povm.probability(1, sigma0)?, povm.probability(0, sigma1)?)
}

/// Samples an outcome using exactly one uniform draw.
pub fn measure<R: Rng + ?Sized>(povm: &TwoOutcomePovm, state: &DensityMatrix, rng: &mut R) -> Result<u8> {
    let p1 = povm.probability(1, state)?;
    Ok(u8::from(rng.random::<f64>() < p1))
}
