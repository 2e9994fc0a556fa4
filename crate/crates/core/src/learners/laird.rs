use crate::concepts::{s_equivalence_classes, ConceptClass};
use crate::{Error, Result};

use super::hypothesis::{Hypothesis, Provenance};

/// `C(η_b) = 2 / (1 − exp(−½(1 − 2η_b)²))`.
pub fn laird_constant(eta_bound: f64) -> f64 {
    let s = 1.0 - 2.0 * eta_bound;
    2.0 / (1.0 - (-0.5 * s * s).exp())
}

/// Smallest sample admitted by [`laird_split`]: `2(1 + C(η_b))`.
pub fn laird_min_size(eta_bound: f64) -> f64 {
    2.0 * (1.0 + laird_constant(eta_bound))
}

/// `m₂ = ⌈C/(1+C)·m⌉` test items and `m₁ = m − m₂` grouping items.
pub fn laird_split(m: usize, eta_bound: f64) -> Result<(usize, usize)> {
    if !(0.0..0.5).contains(&eta_bound) {
        return Err(Error::param(format!("eta bound {eta_bound} must lie in [0, 1/2)")));
    }
    let min = laird_min_size(eta_bound);
    if (m as f64) < min {
        return Err(Error::param(format!("sample of size {m} is below 2(1 + C) = {min:.4}")));
    }
    let c = laird_constant(eta_bound);
    let m2 = ((c / (1.0 + c)) * m as f64).ceil() as usize;
    Ok((m - m2, m2))
}

/// Minimum disagreement on a sample given as an ordered item slice.
pub(crate) fn min_disagreement_items<'a, I>(items: I, class: &ConceptClass, m1: usize) -> Result<Hypothesis>
where
    I: Iterator<Item = &'a (usize, u8)> + Clone,
{
    let n = class.domain().len();
    let grouping: Vec<usize> = items.clone().take(m1).map(|&(x, _)| x).collect();
    let partition = s_equivalence_classes(class, &grouping)?;
    let mut counts = vec![[0u64; 2]; n];
    let mut m2 = 0;
    for &(x, y) in items.skip(m1) {
        class.domain().check(x)?;
        counts[x][y as usize] += 1;
        m2 += 1;
    }
    let present: Vec<(usize, [u64; 2])> = counts.into_iter().enumerate().filter(|(_, c)| c[0] + c[1] > 0).collect();
    let mut best: Option<(u64, usize)> = None;
    for &member in &partition.representatives {
        let f = class.member(member);
        let dis: u64 = present.iter().map(|&(x, c)| c[1 - f.at(x) as usize]).sum();
        if best.is_none_or(|(b, _)| dis < b) {
            best = Some((dis, member));
        }
    }
    let (disagreements, member) = best.expect("partition is non-empty");
    Ok(Hypothesis::new(class.member(member).clone(), Provenance::MinDisagreement { member, m1, m2, disagreements }))
}

/// Groups the class on the first `m1` items and returns the representative
/// with the fewest disagreements on the remaining items (lowest index on ties).
pub fn min_disagreement(sample: &crate::sampling::ClassicalSample, class: &ConceptClass, m1: usize) -> Result<Hypothesis> {
    if m1 == 0 || m1 >= sample.len() {
        return Err(Error::param(format!("m1 = {m1} must lie in [1, {})", sample.len())));
    }
    min_disagreement_items(sample.items().iter(), class, m1)
}
