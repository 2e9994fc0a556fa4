use rand::distr::{weighted::WeightedIndex, Distribution};
use rand::Rng;

use super::distribution::{Atom, LabeledDistribution};
use super::labels::LabelPair;
use crate::qstate::TwoOutcomePovm;
use crate::{Error, Result};

/// Training data `(x, σ_b)`, stored as `(x, b)`. The latent bit is for the
/// harness only; learners receive a [`ClassicalSample`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumSample {
    items: Vec<(usize, u8)>,
}

impl QuantumSample {
    pub fn new(items: Vec<(usize, u8)>) -> Self {
        Self { items }
    }

    pub fn items(&self) -> &[(usize, u8)] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// Measured training data `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalSample {
    items: Vec<(usize, u8)>,
}

impl ClassicalSample {
    pub fn new(items: Vec<(usize, u8)>) -> Self {
        Self { items: items.into_iter().map(|(x, y)| (x, y & 1)).collect() }
    }

    pub fn items(&self) -> &[(usize, u8)] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn instances(&self) -> impl Iterator<Item = usize> + '_ {
        self.items.iter().map(|&(x, _)| x)
    }

    /// `counts[x][y]` = number of items `(x, y)`, for instances `< n`.
    pub fn counts(&self, n: usize) -> Result<Vec<[u64; 2]>> {
        count_items(&self.items, n)
    }
}

pub(crate) fn count_items(items: &[(usize, u8)], n: usize) -> Result<Vec<[u64; 2]>> {
    let mut counts = vec![[0u64; 2]; n];
    for &(x, y) in items {
        let cell = counts.get_mut(x).ok_or_else(|| Error::UnknownInstance(format!("#{x}")))?;
        cell[y as usize] += 1;
    }
    Ok(counts)
}

/// `m` i.i.d. draws from `mu`; one weighted draw per item, so a shorter
/// sample from the same generator state is a prefix of a longer one.
pub fn draw_quantum_sample<R: Rng + ?Sized>(mu: &LabeledDistribution, m: usize, rng: &mut R) -> Result<QuantumSample> {
    if m == 0 {
        return Err(Error::EmptySample);
    }
    let atoms = mu.support();
    let index = WeightedIndex::new(atoms.iter().map(|a| a.prob))
        .map_err(|e| Error::param(format!("cannot sample from distribution: {e}")))?;
    let items = (0..m)
        .map(|_| {
            let a = &atoms[index.sample(rng)];
            (a.instance, a.bit)
        })
        .collect();
    Ok(QuantumSample { items })
}

/// Probability of outcome 1 for each label state.
fn flip_table(povm: &TwoOutcomePovm, labels: &LabelPair) -> Result<[f64; 2]> {
    Ok([povm.probability(1, labels.sigma0())?, povm.probability(1, labels.sigma1())?])
}

/// Measures every example once; each outcome costs one uniform draw.
pub fn measure_labels<R: Rng + ?Sized>(
    sample: &QuantumSample,
    povm: &TwoOutcomePovm,
    labels: &LabelPair,
    rng: &mut R,
) -> Result<ClassicalSample> {
    let p1 = flip_table(povm, labels)?;
    let items = sample.items.iter().map(|&(x, b)| (x, u8::from(rng.random::<f64>() < p1[b as usize]))).collect();
    Ok(ClassicalSample { items })
}

/// Exact law of the measured examples: `ν₁ = μ₁` and
/// `ν(y|x) = Σ_b μ(b|x) tr[σ_b E_y]`.
pub fn induced_nu(mu: &LabeledDistribution, povm: &TwoOutcomePovm, labels: &LabelPair) -> Result<LabeledDistribution> {
    let p1 = flip_table(povm, labels)?;
    let mut support = Vec::new();
    for (x, [m0, m1]) in mu.joint_by_instance() {
        let one = m0 * p1[0] + m1 * p1[1];
        let zero = m0 * (1.0 - p1[0]) + m1 * (1.0 - p1[1]);
        support.push(Atom { instance: x, bit: 0, prob: zero });
        support.push(Atom { instance: x, bit: 1, prob: one });
    }
    LabeledDistribution::new(support)
}
