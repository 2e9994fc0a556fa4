use rand::Rng;

use crate::concepts::ConceptClass;
use crate::learners::noise_corrected_loss;
use crate::par::{map_range, Execution};
use crate::qstate::NoisePair;
use crate::rng::rng_from_seed;
use crate::{Error, Result};

/// Largest point set accepted by exact sign enumeration.
pub const EXACT_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RademacherMode {
    /// All `2^n` sign vectors.
    Exact,
    /// Average over `samples` sign vectors from a seeded generator.
    MonteCarlo { samples: usize, seed: u64 },
}

fn sup_dot(vectors: &[Vec<f64>], signs: u64, n: usize) -> f64 {
    vectors
        .iter()
        .map(|v| {
            (0..n).map(|i| if signs >> i & 1 == 1 { v[i] } else { -v[i] }).sum::<f64>()
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

/// `E_σ[sup_v (1/n)⟨σ, v⟩]` for a finite set of real vectors of length `n`.
pub fn rademacher_of_vectors(vectors: &[Vec<f64>], mode: RademacherMode, exec: Execution) -> Result<f64> {
    let Some(first) = vectors.first() else {
        return Err(Error::param("the function class is empty"));
    };
    let n = first.len();
    if n == 0 {
        return Err(Error::EmptySample);
    }
    if vectors.iter().any(|v| v.len() != n) {
        return Err(Error::param("all value vectors must have the same length"));
    }
    match mode {
        RademacherMode::Exact => {
            if n > EXACT_LIMIT {
                return Err(Error::EnumerationLimit {
                    what: "sign vectors",
                    size: 1u128 << n,
                    limit: 1u128 << EXACT_LIMIT,
                });
            }
            let total = 1usize << n;
            // chunked so the parallel reduce stays deterministic
            let chunk = 1usize << n.min(10);
            let sums = map_range(total / chunk, exec, |c| {
                (c * chunk..(c + 1) * chunk).map(|s| sup_dot(vectors, s as u64, n)).sum::<f64>()
            });
            Ok(sums.iter().sum::<f64>() / (total as f64 * n as f64))
        }
        RademacherMode::MonteCarlo { samples, seed } => {
            if samples == 0 {
                return Err(Error::param("Monte Carlo mode needs at least one sample"));
            }
            let mut rng = rng_from_seed(seed);
            let mut acc = 0.0;
            for _ in 0..samples {
                let signs: Vec<bool> = (0..n).map(|_| rng.random()).collect();
                acc += vectors
                    .iter()
                    .map(|v| v.iter().zip(&signs).map(|(x, &s)| if s { *x } else { -x }).sum::<f64>())
                    .fold(f64::NEG_INFINITY, f64::max);
            }
            Ok(acc / (samples as f64 * n as f64))
        }
    }
}

/// Value vectors `(f(z₁), …, f(zₙ))` of every class member.
pub fn class_vectors(class: &ConceptClass, instances: &[usize]) -> Result<Vec<Vec<f64>>> {
    for &x in instances {
        class.domain().check(x)?;
    }
    Ok(class
        .members()
        .iter()
        .map(|f| instances.iter().map(|&x| f.at(x) as f64).collect())
        .collect())
}

/// Value vectors of the noise-corrected loss class `(x, y) ↦ ℓ̃(f(x), y)`.
pub fn loss_class_vectors(class: &ConceptClass, sample: &[(usize, u8)], noise: NoisePair) -> Result<Vec<Vec<f64>>> {
    let mut table = [[0.0; 2]; 2];
    for (y1, row) in table.iter_mut().enumerate() {
        for (y2, v) in row.iter_mut().enumerate() {
            *v = noise_corrected_loss(y1 as u8, y2 as u8, noise)?;
        }
    }
    for &(x, _) in sample {
        class.domain().check(x)?;
    }
    Ok(class
        .members()
        .iter()
        .map(|f| sample.iter().map(|&(x, y)| table[f.at(x) as usize][(y & 1) as usize]).collect())
        .collect())
}

/// Empirical Rademacher complexity of `class` with respect to `instances`.
pub fn empirical_rademacher(class: &ConceptClass, instances: &[usize], mode: RademacherMode) -> Result<f64> {
    rademacher_of_vectors(&class_vectors(class, instances)?, mode, Execution::default())
}

/// Both sides of the loss-class contraction inequality on one sample.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContractionCheck {
    pub loss_class: f64,
    pub base_class: f64,
    /// `2/(1 − η₀ − η₁)·R̂(F)`.
    pub bound: f64,
}

impl ContractionCheck {
    pub fn holds(&self, tol: f64) -> bool {
        self.loss_class <= self.bound + tol
    }
}

pub fn loss_class_contraction(
    class: &ConceptClass,
    sample: &[(usize, u8)],
    noise: NoisePair,
    mode: RademacherMode,
) -> Result<ContractionCheck> {
    noise.check_learnable()?;
    let instances: Vec<usize> = sample.iter().map(|p| p.0).collect();
    let base_class = rademacher_of_vectors(&class_vectors(class, &instances)?, mode, Execution::default())?;
    let loss_class =
        rademacher_of_vectors(&loss_class_vectors(class, sample, noise)?, mode, Execution::default())?;
    Ok(ContractionCheck { loss_class, base_class, bound: 2.0 / (1.0 - noise.sum()) * base_class })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concepts::{Concept, Domain};
    use approx::assert_abs_diff_eq;

    #[test]
    fn single_concept_is_zero() {
        let class = ConceptClass::explicit(Domain::line(5).unwrap(), vec![Concept::from_fn(5, |x| x % 2 == 0)]).unwrap();
        let r = empirical_rademacher(&class, &[0, 1, 2, 3, 4], RademacherMode::Exact).unwrap();
        assert_abs_diff_eq!(r, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn full_class_on_three_points() {
        let class = ConceptClass::full(Domain::line(3).unwrap()).unwrap();
        let r = empirical_rademacher(&class, &[0, 1, 2], RademacherMode::Exact).unwrap();
        assert_abs_diff_eq!(r, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn serial_and_parallel_exact_agree() {
        let class = ConceptClass::thresholds(Domain::line(14).unwrap()).unwrap();
        let v = class_vectors(&class, &(0..14).collect::<Vec<_>>()).unwrap();
        let a = rademacher_of_vectors(&v, RademacherMode::Exact, Execution::Serial).unwrap();
        let b = rademacher_of_vectors(&v, RademacherMode::Exact, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn monte_carlo_is_close_to_exact() {
        let class = ConceptClass::full(Domain::line(4).unwrap()).unwrap();
        let pts = [0, 1, 2, 3];
        let exact = empirical_rademacher(&class, &pts, RademacherMode::Exact).unwrap();
        let mc = empirical_rademacher(&class, &pts, RademacherMode::MonteCarlo { samples: 20000, seed: 3 }).unwrap();
        assert!((exact - mc).abs() < 0.01);
    }

    #[test]
    fn exact_limit() {
        let class = ConceptClass::thresholds(Domain::line(21).unwrap()).unwrap();
        let pts: Vec<usize> = (0..21).collect();
        assert!(matches!(
            empirical_rademacher(&class, &pts, RademacherMode::Exact),
            Err(Error::EnumerationLimit { .. })
        ));
    }

    #[test]
    fn contraction_holds_on_thresholds() {
        let class = ConceptClass::thresholds(Domain::line(6).unwrap()).unwrap();
        let sample = [(0, 1), (2, 0), (3, 1), (5, 0), (5, 1)];
        let c = loss_class_contraction(&class, &sample, NoisePair::new(0.1, 0.25).unwrap(), RademacherMode::Exact)
            .unwrap();
        assert!(c.holds(1e-12));
    }
}
