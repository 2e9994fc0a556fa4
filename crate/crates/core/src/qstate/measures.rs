use super::matrix::ComplexMatrix;
use super::state::{DensityMatrix, PureState};
use crate::Result;

/// Eigenvalues this small are treated as exact zeros before taking square
/// roots, so that round-off in a rank-deficient state does not leak
/// `√1e-17 ≈ 3e-9` into fidelities.
const SQRT_FLOOR: f64 = 1e-13;

/// `‖ρ − σ‖₁ = Σ |λᵢ(ρ − σ)|`, in `[0, 2]`.
pub fn trace_distance(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    rho.matrix().check_same_dim(sigma.matrix())?;
    let diff = rho.matrix() - sigma.matrix();
    Ok(diff.eigenvalues_hermitian().iter().map(|l| l.abs()).sum::<f64>().min(2.0))
}

fn psd_sqrt(m: &ComplexMatrix) -> ComplexMatrix {
    m.hermitian_eigen().apply(|l| if l <= SQRT_FLOOR { 0.0 } else { l.sqrt() })
}

/// `F(ρ, σ) = tr √(√ρ σ √ρ)`, computed as the nuclear norm of `√ρ √σ`.
pub fn fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    rho.matrix().check_same_dim(sigma.matrix())?;
    let product = &psd_sqrt(rho.matrix()) * &psd_sqrt(sigma.matrix());
    let svd = product.as_dmatrix().clone().svd(false, false);
    Ok(svd.singular_values.iter().sum::<f64>().clamp(0.0, 1.0))
}

/// `½(1 + ½‖σ₀ − σ₁‖₁)`: the best single-copy success probability at equal priors.
pub fn helstrom_success_probability(sigma0: &DensityMatrix, sigma1: &DensityMatrix) -> Result<f64> {
    Ok(0.5 * (1.0 + 0.5 * trace_distance(sigma0, sigma1)?))
}

/// `−Σ pᵢ log₂ pᵢ` with `0 log 0 = 0`.
pub fn shannon_entropy(probs: &[f64]) -> f64 {
    probs.iter().map(|&p| if p > 0.0 { -p * p.log2() } else { 0.0 }).sum()
}

pub fn binary_entropy(p: f64) -> f64 {
    shannon_entropy(&[p, 1.0 - p])
}

/// Von Neumann entropy in bits; eigenvalues are clamped to `[0, 1]`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    let eig: Vec<f64> = rho.matrix().eigenvalues_hermitian().iter().map(|l| l.clamp(0.0, 1.0)).collect();
    shannon_entropy(&eig).max(0.0)
}

/// Non-zero eigenvalues of `α|ψ⟩⟨ψ| + β|φ⟩⟨φ|`, larger first.
pub fn mixture_eigenvalues(alpha: f64, beta: f64, psi: &PureState, phi: &PureState) -> Result<(f64, f64)> {
    let overlap_sq = psi.inner(phi)?.norm_sqr().min(1.0);
    let disc = ((alpha - beta).powi(2) + 4.0 * alpha * beta * overlap_sq).max(0.0).sqrt();
    let sum = alpha + beta;
    Ok(((sum + disc) / 2.0, ((sum - disc) / 2.0).max(0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn example_states() -> (DensityMatrix, DensityMatrix) {
        let phi0 = PureState::from_real(&[0.0, 1.0, 0.0]).unwrap();
        let phi1 = PureState::from_real(&[1.0, -1.0, 0.0]).unwrap();
        (phi0.to_density(), phi1.to_density())
    }

    #[test]
    fn trace_distance_examples() {
        let (p0, p1) = example_states();
        assert_abs_diff_eq!(trace_distance(&p0, &p1).unwrap(), 2f64.sqrt(), epsilon = 1e-12);
        // pure-state formula 2√(1 − |⟨φ₀|φ₁⟩|²) with overlap² = 1/2
        assert_abs_diff_eq!(trace_distance(&p0, &p1).unwrap(), 2.0 * (0.5f64).sqrt(), epsilon = 1e-12);
        let z0 = DensityMatrix::basis(2, 0);
        let z1 = DensityMatrix::basis(2, 1);
        assert_abs_diff_eq!(trace_distance(&z0, &z1).unwrap(), 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(trace_distance(&z0, &z0).unwrap(), 0.0, epsilon = 1e-12);
        assert!(trace_distance(&z0, &p0).is_err());
    }

    #[test]
    fn fidelity_examples() {
        let z0 = DensityMatrix::basis(2, 0);
        let z1 = DensityMatrix::basis(2, 1);
        assert_abs_diff_eq!(fidelity(&z0, &z0).unwrap(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(fidelity(&z0, &z1).unwrap(), 0.0, epsilon = 1e-12);
        let plus = PureState::from_real(&[1.0, 1.0]).unwrap().to_density();
        assert_abs_diff_eq!(fidelity(&z0, &plus).unwrap(), 0.5f64.sqrt(), epsilon = 1e-12);
        let mixed = DensityMatrix::maximally_mixed(2);
        assert_abs_diff_eq!(fidelity(&mixed, &mixed).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn entropy_and_success_examples() {
        let (p0, p1) = example_states();
        assert_abs_diff_eq!(von_neumann_entropy(&p0), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(von_neumann_entropy(&DensityMatrix::maximally_mixed(2)), 1.0, epsilon = 1e-12);
        let mix = DensityMatrix::mixture(&[0.5, 0.5], &[&p0, &p1]).unwrap();
        assert_abs_diff_eq!(von_neumann_entropy(&mix), 0.6008760, epsilon = 1e-7);
        assert_abs_diff_eq!(von_neumann_entropy(&mix), binary_entropy(0.5 + 0.25 * 2f64.sqrt()), epsilon = 1e-12);
        assert_abs_diff_eq!(helstrom_success_probability(&p0, &p1).unwrap(), 0.8535534, epsilon = 1e-7);
        assert_abs_diff_eq!(helstrom_success_probability(&p0, &p0).unwrap(), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn mixture_eigenvalue_examples() {
        let a = PureState::basis(2, 0);
        let b = PureState::basis(2, 1);
        assert_eq!(mixture_eigenvalues(1.0, 0.0, &a, &b).unwrap(), (1.0, 0.0));
        let (l1, l2) = mixture_eigenvalues(0.5, 0.5, &a, &b).unwrap();
        assert_abs_diff_eq!(l1, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(l2, 0.5, epsilon = 1e-15);
        let plus = PureState::from_real(&[1.0, 1.0]).unwrap();
        let (l1, l2) = mixture_eigenvalues(0.5, 0.5, &a, &plus).unwrap();
        let explicit = ComplexMatrix::from_real_rows(&[&[0.75, 0.25], &[0.25, 0.25]]).unwrap();
        let dense = explicit.eigenvalues_hermitian();
        assert_abs_diff_eq!(l1, dense[1], epsilon = 1e-12);
        assert_abs_diff_eq!(l2, dense[0], epsilon = 1e-12);
        assert_abs_diff_eq!(l1, 0.8535534, epsilon = 1e-7);
        assert_abs_diff_eq!(l2, 0.1464466, epsilon = 1e-7);
    }
}
