//! Random states and measurements for property sweeps.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;

use super::matrix::{ComplexMatrix, C64};
use super::povm::TwoOutcomePovm;
use super::state::{DensityMatrix, PureState};

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random pure state.
pub fn pure_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> PureState {
    loop {
        let v: Vec<C64> = (0..dim).map(|_| gaussian(rng)).collect();
        if let Ok(s) = PureState::normalized(v) {
            return s;
        }
    }
}

/// Mixed state `GG*/tr[GG*]` with `G` a complex Ginibre matrix.
pub fn mixed_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DensityMatrix {
    let g = DMatrix::from_fn(dim, dim, |_, _| gaussian(rng));
    let psd = ComplexMatrix::from_dmatrix(&g * g.adjoint()).expect("square");
    DensityMatrix::from_psd(psd).expect("Ginibre product is positive definite")
}

/// Projector onto a random subspace of random rank (possibly 0 or `dim`) as `E₀`.
pub fn projective_povm<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> TwoOutcomePovm {
    let rank = rng.random_range(0..=dim);
    let g = DMatrix::from_fn(dim, dim, |_, _| gaussian(rng));
    let q = g.qr().q();
    let mut e0 = DMatrix::<C64>::zeros(dim, dim);
    for k in 0..rank {
        let v = q.column(k);
        e0 += v * v.adjoint();
    }
    TwoOutcomePovm::from_e0(ComplexMatrix::from_dmatrix(e0).expect("square")).expect("projector")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn generated_objects_are_valid() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for dim in 1..=4 {
            let rho = mixed_state(dim, &mut rng);
            assert!(DensityMatrix::new(rho.matrix().clone()).is_ok());
            assert_eq!(pure_state(dim, &mut rng).dim(), dim);
            let povm = projective_povm(dim, &mut rng);
            assert_eq!(povm.dim(), dim);
        }
    }
}
