use crate::concepts::ConceptClass;
use crate::qstate::NoisePair;
use crate::sampling::{count_items, ClassicalSample};
use crate::{Error, Result};

use super::hypothesis::{Hypothesis, Provenance};

/// Relative slack under which two empirical risks count as tied.
const TIE_TOL: f64 = 1e-12;

/// `ℓ̃(y1, y2) = [(1 − η_{1⊕y2})·1{y1≠y2} − η_{y2}·1{y1=y2}] / (1 − η₀ − η₁)`
/// for prediction `y1` and observed label `y2`.
pub fn noise_corrected_loss(y1: u8, y2: u8, noise: NoisePair) -> Result<f64> {
    noise.check_learnable()?;
    let denom = 1.0 - noise.sum();
    let value = if y1 != y2 { 1.0 - noise.eta(1 ^ y2) } else { -noise.eta(y2) };
    Ok(value / denom)
}

/// Per member `A[z][y]`: number of sample items with prediction `z` and label `y`.
fn confusion_counts(sample: &ClassicalSample, class: &ConceptClass) -> Result<Vec<[[u64; 2]; 2]>> {
    let counts = count_items(sample.items(), class.domain().len())?;
    let present: Vec<(usize, [u64; 2])> =
        counts.into_iter().enumerate().filter(|(_, c)| c[0] + c[1] > 0).collect();
    Ok(class
        .members()
        .iter()
        .map(|f| {
            let mut a = [[0u64; 2]; 2];
            for &(x, [n0, n1]) in &present {
                let z = f.at(x) as usize;
                a[z][0] += n0;
                a[z][1] += n1;
            }
            a
        })
        .collect())
}

/// Lowest index whose value is within the tie tolerance of the minimum.
fn argmin(values: &[f64]) -> usize {
    let best = values.iter().copied().fold(f64::INFINITY, f64::min);
    let slack = TIE_TOL * best.abs().max(1.0);
    values.iter().position(|&v| v <= best + slack).expect("non-empty class")
}

/// Noise-corrected empirical risk minimization over the whole class.
pub fn erm_noise_corrected(sample: &ClassicalSample, class: &ConceptClass, noise: NoisePair) -> Result<Hypothesis> {
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    noise.check_learnable()?;
    let (e0, e1) = (noise.eta0, noise.eta1);
    let scale = 1.0 / ((1.0 - e0 - e1) * sample.len() as f64);
    let risks: Vec<f64> = confusion_counts(sample, class)?
        .iter()
        .map(|a| {
            let [[a00, a01], [a10, a11]] = a.map(|r| r.map(|v| v as f64));
            ((1.0 - e0) * a01 + (1.0 - e1) * a10 - e0 * a00 - e1 * a11) * scale
        })
        .collect();
    let member = argmin(&risks);
    Ok(Hypothesis::new(
        class.member(member).clone(),
        Provenance::ErmNoiseCorrected { member, empirical_risk: risks[member], noise },
    ))
}

/// Plain 0-1 empirical risk minimization over the whole class.
pub fn erm_01(sample: &ClassicalSample, class: &ConceptClass) -> Result<Hypothesis> {
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    let errors: Vec<u64> = confusion_counts(sample, class)?.iter().map(|a| a[0][1] + a[1][0]).collect();
    let best = *errors.iter().min().expect("non-empty class");
    let member = errors.iter().position(|&e| e == best).unwrap();
    Ok(Hypothesis::new(
        class.member(member).clone(),
        Provenance::Erm01 { member, empirical_risk: best as f64 / sample.len() as f64 },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concepts::{Concept, Domain};
    use approx::assert_abs_diff_eq;

    fn constants(n: usize) -> ConceptClass {
        ConceptClass::explicit(Domain::line(n).unwrap(), vec![Concept::constant(n, 0), Concept::constant(n, 1)])
            .unwrap()
    }

    #[test]
    fn loss_examples() {
        let zero = NoisePair::zero();
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert_eq!(noise_corrected_loss(a, b, zero).unwrap(), f64::from(u8::from(a != b)));
        }
        let n = NoisePair::symmetric(0.1).unwrap();
        assert_abs_diff_eq!(noise_corrected_loss(1, 0, n).unwrap(), 1.125, epsilon = 1e-12);
        assert_abs_diff_eq!(noise_corrected_loss(0, 0, n).unwrap(), -0.125, epsilon = 1e-12);
        assert!(matches!(
            noise_corrected_loss(0, 0, NoisePair::new(0.5, 0.5).unwrap()),
            Err(Error::DegenerateNoise { .. })
        ));
    }

    #[test]
    fn erm_examples() {
        let class = constants(10);
        let sample = ClassicalSample::new((0..10).map(|i| (i, u8::from(i < 7))).collect());
        let h = erm_noise_corrected(&sample, &class, NoisePair::zero()).unwrap();
        assert_eq!(h.member(), Some(1));
        let h01 = erm_01(&sample, &class).unwrap();
        assert_eq!(h01.member(), Some(1));
        assert!(matches!(h01.provenance, Provenance::Erm01 { empirical_risk, .. } if (empirical_risk - 0.3).abs() < 1e-15));
        assert!(matches!(erm_01(&ClassicalSample::new(vec![]), &class), Err(Error::EmptySample)));

        let single = ConceptClass::explicit(Domain::line(3).unwrap(), vec![Concept::constant(3, 1)]).unwrap();
        let s = ClassicalSample::new(vec![(0, 0), (1, 0)]);
        assert_eq!(erm_01(&s, &single).unwrap().member(), Some(0));
    }

    #[test]
    fn consistent_sample_recovers_target() {
        let class = ConceptClass::thresholds(Domain::line(20).unwrap()).unwrap();
        let target = class.member(7).clone();
        let sample = ClassicalSample::new((0..20).map(|x| (x, target.at(x))).collect());
        assert_eq!(erm_noise_corrected(&sample, &class, NoisePair::zero()).unwrap().member(), Some(7));
        assert_eq!(erm_01(&sample, &class).unwrap().member(), Some(7));
    }
}
