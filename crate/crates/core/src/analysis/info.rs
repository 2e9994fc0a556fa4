//! Single-example mutual information `I(A:B₁)` of the hard families.
//!
//! `A` is uniform on `{0,1}^d` and `B₁` is one classical-quantum example
//! drawn from `μ_A`. All values are in bits.

use crate::qstate::{binary_entropy, mixture_eigenvalues, shannon_entropy, PureState};
use crate::sampling::LabelPair;
use crate::{Error, Result};

/// Largest `d` for which the exact path enumerates every string `a`.
pub const MAX_ENUMERATED_D: usize = 8;

const PURITY_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InfoReport {
    pub exact_bits: f64,
    pub closed_form_bits: f64,
    pub leading_order_bits: f64,
}

fn pure_labels(labels: &LabelPair) -> Result<(PureState, PureState)> {
    match (labels.sigma0().as_pure(PURITY_TOL), labels.sigma1().as_pure(PURITY_TOL)) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::UnsupportedRegime("mutual information needs pure label states".into())),
    }
}

fn log2_ratio(c: f64) -> f64 {
    ((1.0 + c) / (1.0 - c)).log2()
}

/// `(1 − c²)/(4c)·log((1+c)/(1−c))`, with the limit `1/(2 ln 2)` at `c = 0`
/// and `0` at `c = 1`.
fn leading_factor(c: f64) -> f64 {
    if c <= 1e-6 {
        // series of (1/4c)·log((1+c)/(1−c)) is (1/(2 ln 2))(1 + c²/3 + …)
        (1.0 - c * c) * (1.0 + c * c / 3.0) / (2.0 * std::f64::consts::LN_2)
    } else if c >= 1.0 {
        0.0
    } else {
        (1.0 - c * c) / (4.0 * c) * log2_ratio(c)
    }
}

/// Agnostic family `μ_a(i,b) = (1/2d)(1 + (−1)^{a_i+b}·8ε/‖σ₀−σ₁‖₁)` with a
/// uniform prior on `a`.
pub fn mutual_info_single_example(d: usize, epsilon: f64, labels: &LabelPair) -> Result<InfoReport> {
    if d == 0 {
        return Err(Error::param("d must be positive"));
    }
    if d > MAX_ENUMERATED_D {
        return Err(Error::EnumerationLimit { what: "strings a", size: 1u128 << d, limit: 1u128 << MAX_ENUMERATED_D });
    }
    let (psi0, psi1) = pure_labels(labels)?;
    let norm = labels.trace_distance();
    let lambda = 8.0 * epsilon / norm;
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::param(format!("8ε/‖σ₀−σ₁‖₁ = {lambda} must lie in [0, 1]")));
    }
    let c = psi0.overlap(&psi1)?.min(1.0);
    let dfl = d as f64;

    // σ_B₁ = ⊕ᵢ (1/2d)(|ψ₀⟩⟨ψ₀| + |ψ₁⟩⟨ψ₁|)
    let (b1, b2) = mixture_eigenvalues(0.5 / dfl, 0.5 / dfl, &psi0, &psi1)?;
    let s_b = dfl * shannon_entropy(&[b1, b2]);

    // σ_AB₁ = ⊕_a ⊕_i 2^{-d}(μ_a(i,0)|ψ₀⟩⟨ψ₀| + μ_a(i,1)|ψ₁⟩⟨ψ₁|)
    let weight = 1.0 / (1u64 << d) as f64;
    let mut spectrum = Vec::with_capacity((2 * d) << d);
    for a in 0..1usize << d {
        for i in 0..d {
            let sign = if a >> i & 1 == 0 { 1.0 } else { -1.0 };
            let p0 = (1.0 + sign * lambda) / (2.0 * dfl);
            let p1 = (1.0 - sign * lambda) / (2.0 * dfl);
            let (l1, l2) = mixture_eigenvalues(weight * p0, weight * p1, &psi0, &psi1)?;
            spectrum.push(l1);
            spectrum.push(l2);
        }
    }
    let s_ab = shannon_entropy(&spectrum);
    let exact = (dfl + s_b - s_ab).max(0.0);

    // closed form with t = c·√(1 + λ²(1−c²)/c²) = √(c² + λ²(1−c²))
    let k = lambda * lambda;
    let t = (c * c + k * (1.0 - c * c)).sqrt().min(1.0);
    let closed = if c >= 1.0 {
        0.0
    } else if t >= 1.0 {
        // t = 1: the two log terms diverge but their sum is H₂((1+c)/2)
        binary_entropy((1.0 + c) / 2.0)
    } else {
        0.5 * ((1.0 - t * t).log2() - (1.0 - c * c).log2()) + 0.5 * (t * log2_ratio(t) - c * log2_ratio(c))
    };

    Ok(InfoReport { exact_bits: exact, closed_form_bits: closed, leading_order_bits: k * leading_factor(c) })
}

/// Realizable family: `μ(s₀) = 1 − λ` labelled 0 and `μ(s_i) = λ/d` labelled
/// `a_i`, with `λ = 8ε/‖σ₀−σ₁‖₁`.
pub fn realizable_mutual_info(d: usize, epsilon: f64, labels: &LabelPair) -> Result<InfoReport> {
    if d == 0 {
        return Err(Error::param("d must be positive"));
    }
    let (psi0, psi1) = pure_labels(labels)?;
    let lambda = 8.0 * epsilon / labels.trace_distance();
    if !(0.0..1.0).contains(&lambda) {
        return Err(Error::param(format!("8ε/‖σ₀−σ₁‖₁ = {lambda} must lie in [0, 1)")));
    }
    let c = psi0.overlap(&psi1)?.min(1.0);
    let dfl = d as f64;
    let pow = (1u64 << d.min(63)) as f64;

    // σ_B₁: 1 − λ once, and the spectrum of (λ/2d)(|ψ₀⟩⟨ψ₀| + |ψ₁⟩⟨ψ₁|) d times
    let (b1, b2) = mixture_eigenvalues(lambda / (2.0 * dfl), lambda / (2.0 * dfl), &psi0, &psi1)?;
    let s_b = shannon_entropy(&[1.0 - lambda]) + dfl * shannon_entropy(&[b1, b2]);
    // σ_AB₁: (1−λ)/2^d with multiplicity 2^d, λ/(d 2^d) with multiplicity d 2^d
    let term = |p: f64, mult: f64| if p <= 0.0 { 0.0 } else { -mult * p * p.log2() };
    let s_ab = term((1.0 - lambda) / pow, pow) + term(lambda / (dfl * pow), dfl * pow);
    let exact = (dfl + s_b - s_ab).max(0.0);

    let closed = if c >= 1.0 { 0.0 } else { -(lambda / 2.0) * (((1.0 - c * c) / 4.0).log2() + c * log2_ratio(c)) };
    Ok(InfoReport { exact_bits: exact, closed_form_bits: closed, leading_order_bits: closed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstate::{von_neumann_entropy, DensityMatrix};
    use approx::assert_abs_diff_eq;

    fn pair_with_overlap(c: f64) -> LabelPair {
        let a = PureState::from_real(&[1.0, 0.0]).unwrap();
        let b = PureState::from_real(&[c, (1.0 - c * c).sqrt()]).unwrap();
        LabelPair::from_pure(&a, &b).unwrap()
    }

    #[test]
    fn zero_epsilon_gives_zero() {
        let l = pair_with_overlap(0.3);
        let r = mutual_info_single_example(3, 0.0, &l).unwrap();
        assert_abs_diff_eq!(r.exact_bits, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.closed_form_bits, 0.0, epsilon = 1e-12);
        let r = realizable_mutual_info(3, 0.0, &l).unwrap();
        assert_abs_diff_eq!(r.exact_bits, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn exact_matches_closed_form() {
        let l = pair_with_overlap(std::f64::consts::FRAC_1_SQRT_2);
        let r = mutual_info_single_example(2, 0.01, &l).unwrap();
        assert_abs_diff_eq!(r.exact_bits, r.closed_form_bits, epsilon = 1e-8);
        assert!((r.exact_bits / r.leading_order_bits - 1.0).abs() < 0.05);
    }

    #[test]
    fn orthogonal_limits() {
        let l = LabelPair::orthogonal();
        let r = mutual_info_single_example(2, 0.05, &l).unwrap();
        let lambda: f64 = 8.0 * 0.05 / 2.0;
        assert_abs_diff_eq!(r.exact_bits, r.closed_form_bits, epsilon = 1e-10);
        assert_abs_diff_eq!(r.exact_bits, 1.0 - binary_entropy((1.0 + lambda) / 2.0), epsilon = 1e-12);
        assert_abs_diff_eq!(r.leading_order_bits, lambda * lambda / (2.0 * std::f64::consts::LN_2), epsilon = 1e-12);
        let r = realizable_mutual_info(3, 0.05, &l).unwrap();
        assert_abs_diff_eq!(r.closed_form_bits, lambda, epsilon = 1e-12);
        assert_abs_diff_eq!(r.exact_bits, lambda, epsilon = 1e-12);
    }

    #[test]
    fn dense_entropies_agree() {
        // rebuild σ_B₁ and σ_AB₁ for d = 2 as dense block-diagonal matrices
        let l = pair_with_overlap(0.4);
        let (eps, d) = (0.02, 2usize);
        let lambda = 8.0 * eps / l.trace_distance();
        let mut ab_weights = Vec::new();
        let mut ab_blocks = Vec::new();
        for a in 0..4usize {
            for i in 0..d {
                let s = if a >> i & 1 == 0 { 1.0 } else { -1.0 };
                let p0 = (1.0 + s * lambda) / 2.0;
                let block = DensityMatrix::mixture(&[p0, 1.0 - p0], &[l.sigma0(), l.sigma1()]).unwrap();
                ab_weights.push(0.25 * 0.5);
                ab_blocks.push(block);
            }
        }
        let refs: Vec<&DensityMatrix> = ab_blocks.iter().collect();
        let ab = DensityMatrix::block_diagonal(&ab_weights, &refs).unwrap();
        let half = DensityMatrix::mixture(&[0.5, 0.5], &[l.sigma0(), l.sigma1()]).unwrap();
        let b = DensityMatrix::block_diagonal(&[0.5, 0.5], &[&half, &half]).unwrap();
        let dense = d as f64 + von_neumann_entropy(&b) - von_neumann_entropy(&ab);
        let r = mutual_info_single_example(d, eps, &l).unwrap();
        assert_abs_diff_eq!(r.exact_bits, dense, epsilon = 1e-9);
    }

    #[test]
    fn realizable_is_linear() {
        let l = pair_with_overlap(0.6);
        let a = realizable_mutual_info(4, 0.01, &l).unwrap();
        let b = realizable_mutual_info(4, 0.02, &l).unwrap();
        assert_abs_diff_eq!(b.exact_bits / a.exact_bits, 2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(a.exact_bits, a.closed_form_bits, epsilon = 1e-12);
    }

    #[test]
    fn rejects_mixed_labels() {
        assert!(matches!(
            mutual_info_single_example(2, 0.01, &LabelPair::symmetric(0.1).unwrap()).map(|_| ()),
            Ok(())
        ));
        let mixed = LabelPair::new(DensityMatrix::maximally_mixed(2), DensityMatrix::basis(2, 0)).unwrap();
        assert!(matches!(mutual_info_single_example(2, 0.01, &mixed), Err(Error::UnsupportedRegime(_))));
    }
}
