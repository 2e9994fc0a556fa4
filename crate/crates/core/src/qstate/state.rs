use nalgebra::DVector;

use super::matrix::{ComplexMatrix, C64, DEFAULT_TOL};
use crate::{Error, Result};

/// Unit-norm state vector.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    amplitudes: DVector<C64>,
}

impl PureState {
    /// Validates the norm against [`DEFAULT_TOL`].
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::InvalidState("empty state vector".into()));
        }
        let v = DVector::from_vec(amplitudes);
        let norm = v.norm();
        if (norm - 1.0).abs() > DEFAULT_TOL {
            return Err(Error::InvalidState(format!("state vector has norm {norm}")));
        }
        Ok(Self { amplitudes: v })
    }

    /// Rescales a non-zero vector to unit norm.
    pub fn normalized(amplitudes: Vec<C64>) -> Result<Self> {
        let v = DVector::from_vec(amplitudes);
        let norm = v.norm();
        if v.is_empty() || !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::InvalidState("cannot normalize a zero vector".into()));
        }
        Ok(Self { amplitudes: v.map(|z| z / norm) })
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::normalized(amplitudes.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// Computational basis vector `|k⟩`.
    pub fn basis(dim: usize, k: usize) -> Self {
        assert!(k < dim, "basis index out of range");
        let mut v = DVector::zeros(dim);
        v[k] = C64::new(1.0, 0.0);
        Self { amplitudes: v }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amplitudes
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<C64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        Ok(self.amplitudes.dotc(&other.amplitudes))
    }

    /// `|⟨self|other⟩|`.
    pub fn overlap(&self, other: &Self) -> Result<f64> {
        Ok(self.inner(other)?.norm().min(1.0))
    }

    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes)
    }

    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix { matrix: self.projector() }
    }
}

/// Positive semidefinite, unit-trace Hermitian matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(matrix, DEFAULT_TOL)
    }

    pub fn with_tolerance(matrix: ComplexMatrix, tol: f64) -> Result<Self> {
        if !matrix.is_hermitian(tol) {
            return Err(Error::InvalidState("matrix is not Hermitian".into()));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > tol || tr.im.abs() > tol {
            return Err(Error::InvalidState(format!("trace is {tr}, expected 1")));
        }
        let lowest = matrix.eigenvalues_hermitian()[0];
        if lowest < -tol {
            return Err(Error::InvalidState(format!("negative eigenvalue {lowest:e}")));
        }
        Ok(Self { matrix: matrix.hermitian_part() })
    }

    /// Normalizes a non-zero PSD matrix by its trace.
    pub fn from_psd(matrix: ComplexMatrix) -> Result<Self> {
        let tr = matrix.trace().re;
        if !(tr > 0.0) {
            return Err(Error::InvalidState("matrix has non-positive trace".into()));
        }
        Self::new(matrix.scale(1.0 / tr))
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self { matrix: ComplexMatrix::identity(dim).scale(1.0 / dim as f64) }
    }

    /// `|k⟩⟨k|`.
    pub fn basis(dim: usize, k: usize) -> Self {
        PureState::basis(dim, k).to_density()
    }

    /// Convex combination `Σ wᵢ ρᵢ`; weights must be non-negative and sum to 1.
    pub fn mixture(weights: &[f64], states: &[&DensityMatrix]) -> Result<Self> {
        if weights.len() != states.len() || states.is_empty() {
            return Err(Error::param("mixture needs one weight per state"));
        }
        let dim = states[0].dim();
        let mut acc = ComplexMatrix::zeros(dim);
        for (&w, s) in weights.iter().zip(states) {
            states[0].matrix.check_same_dim(&s.matrix)?;
            if w < 0.0 {
                return Err(Error::param("mixture weights must be non-negative"));
            }
            acc = &acc + &s.matrix.scale(w);
        }
        Self::new(acc)
    }

    /// Direct sum `⊕ wᵢ ρᵢ`, the classical-quantum state with classical weights `w`.
    pub fn block_diagonal(weights: &[f64], blocks: &[&DensityMatrix]) -> Result<Self> {
        if weights.len() != blocks.len() || blocks.is_empty() {
            return Err(Error::param("block_diagonal needs one weight per block"));
        }
        let scaled: Vec<ComplexMatrix> =
            weights.iter().zip(blocks).map(|(&w, b)| b.matrix.scale(w)).collect();
        let refs: Vec<&ComplexMatrix> = scaled.iter().collect();
        Self::new(ComplexMatrix::direct_sum(&refs)?)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self { matrix: self.matrix.kron(&other.matrix) }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// `tr[ρ²]`.
    pub fn purity(&self) -> f64 {
        self.matrix.trace_product(&self.matrix).re
    }

    /// `tr[ρσ]`.
    pub fn overlap_trace(&self, other: &Self) -> Result<f64> {
        self.matrix.check_same_dim(&other.matrix)?;
        Ok(self.matrix.trace_product(&other.matrix).re)
    }

    pub fn is_pure(&self, tol: f64) -> bool {
        (self.purity() - 1.0).abs() <= tol
    }

    /// The state vector of a rank-one density matrix (global phase arbitrary).
    pub fn as_pure(&self, tol: f64) -> Option<PureState> {
        if !self.is_pure(tol) {
            return None;
        }
        let eig = self.matrix.hermitian_eigen();
        let top = self.dim() - 1;
        let v: Vec<C64> = eig.vectors.column(top).iter().copied().collect();
        PureState::normalized(v).ok()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.matrix.approx_eq(&other.matrix, tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(PureState::new(vec![C64::new(1.0, 0.0), C64::new(1.0, 0.0)]).is_err());
        let not_unit = ComplexMatrix::identity(2);
        assert!(DensityMatrix::new(not_unit).is_err());
        let negative = ComplexMatrix::from_real_rows(&[&[1.5, 0.0], &[0.0, -0.5]]).unwrap();
        assert!(DensityMatrix::new(negative).is_err());
        assert!(DensityMatrix::new(ComplexMatrix::identity(3).scale(1.0 / 3.0)).is_ok());
    }

    #[test]
    fn pure_roundtrip() {
        let psi = PureState::from_real(&[1.0, -1.0, 0.0]).unwrap();
        let rho = psi.to_density();
        let back = rho.as_pure(1e-9).unwrap();
        assert!((psi.overlap(&back).unwrap() - 1.0).abs() < 1e-12);
        assert!(DensityMatrix::maximally_mixed(2).as_pure(1e-9).is_none());
    }

    #[test]
    fn block_diagonal_weights() {
        let a = DensityMatrix::basis(2, 0);
        let b = DensityMatrix::maximally_mixed(2);
        let cq = DensityMatrix::block_diagonal(&[0.25, 0.75], &[&a, &b]).unwrap();
        assert_eq!(cq.dim(), 4);
        assert!((cq.matrix().get(0, 0).re - 0.25).abs() < 1e-15);
        assert!((cq.matrix().get(3, 3).re - 0.375).abs() < 1e-15);
    }
}
