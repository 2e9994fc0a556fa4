use std::collections::HashMap;

use itertools::Itertools;

use super::class::{Concept, ConceptClass};
use crate::{Error, Result};

/// Largest subset [`shatters`] will enumerate labellings for.
pub const MAX_SHATTER_SIZE: usize = 25;

/// Budget of `(subset, member)` checks for [`vc_dimension_bruteforce`].
pub const VC_WORK_LIMIT: u128 = 2_000_000_000;

fn patterns_cover(class: &ConceptClass, subset: &[usize]) -> bool {
    let k = subset.len();
    let needed = 1usize << k;
    if class.len() < needed {
        return false;
    }
    let mut seen = vec![false; needed];
    let mut count = 0;
    for c in class.members() {
        let mask = subset.iter().enumerate().fold(0usize, |acc, (i, &x)| acc | (c.at(x) as usize) << i);
        if !seen[mask] {
            seen[mask] = true;
            count += 1;
            if count == needed {
                return true;
            }
        }
    }
    false
}

/// Whether every labelling of `subset` is realized by some member.
pub fn shatters(class: &ConceptClass, subset: &[usize]) -> Result<bool> {
    if subset.len() > MAX_SHATTER_SIZE {
        return Err(Error::EnumerationLimit {
            what: "shattering subset",
            size: subset.len() as u128,
            limit: MAX_SHATTER_SIZE as u128,
        });
    }
    for &x in subset {
        class.domain().check(x)?;
    }
    if subset.iter().duplicates().next().is_some() {
        return Err(Error::param("shattering subset contains a repeated instance"));
    }
    Ok(patterns_cover(class, subset))
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Largest `n` such that some `n`-subset of the domain is shattered.
///
/// Sizes are tried in increasing order up to `⌊log₂|class|⌋`; since subsets
/// of shattered sets are shattered, the search stops at the first size with
/// no shattered subset.
pub fn vc_dimension_bruteforce(class: &ConceptClass) -> Result<usize> {
    let n = class.domain().len();
    let cap = (usize::BITS - 1 - class.len().leading_zeros()) as usize;
    let cap = cap.min(n).min(MAX_SHATTER_SIZE);
    let work: u128 = (1..=cap).map(|k| binomial(n as u128, k as u128).saturating_mul(class.len() as u128)).sum();
    if work > VC_WORK_LIMIT {
        return Err(Error::EnumerationLimit { what: "VC-dimension search", size: work, limit: VC_WORK_LIMIT });
    }
    let mut best = 0;
    for k in 1..=cap {
        if (0..n).combinations(k).any(|s| patterns_cover(class, &s)) {
            best = k;
        } else {
            break;
        }
    }
    Ok(best)
}

/// Grouping of class members by their labels on a sample.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplePartition {
    /// Member index of each cell's representative (the lowest index in the cell),
    /// in increasing order.
    pub representatives: Vec<usize>,
    /// Cell of every member.
    pub class_index: Vec<usize>,
}

impl SamplePartition {
    pub fn cells(&self) -> usize {
        self.representatives.len()
    }

    pub fn representative_concepts<'a>(&'a self, class: &'a ConceptClass) -> impl Iterator<Item = &'a Concept> + 'a {
        self.representatives.iter().map(move |&i| class.member(i))
    }

    /// Sauer-type bound `cells ≤ min(Σ_{i≤d} C(m, i), m^d + 1)` for `m` distinct sampled points.
    pub fn within_sauer_bound(&self, distinct_points: usize, d: usize) -> bool {
        let m = distinct_points as u128;
        let sauer: u128 = (0..=d as u128).map(|i| binomial(m, i)).fold(0, u128::saturating_add);
        let power = m.saturating_pow(d as u32).saturating_add(1);
        (self.cells() as u128) <= sauer.min(power)
    }
}

/// Partitions the class by agreement on `sample` (repeats are irrelevant).
pub fn s_equivalence_classes(class: &ConceptClass, sample: &[usize]) -> Result<SamplePartition> {
    for &x in sample {
        class.domain().check(x)?;
    }
    let mut points: Vec<usize> = sample.to_vec();
    points.sort_unstable();
    points.dedup();
    // refine one point at a time; cell ids stay dense
    let mut cell = vec![0usize; class.len()];
    let mut cells = 1;
    for &x in &points {
        if cells == class.len() {
            break;
        }
        let mut relabel: HashMap<(usize, u8), usize> = HashMap::with_capacity(2 * cells);
        for (i, c) in class.members().iter().enumerate() {
            let next = relabel.len();
            cell[i] = *relabel.entry((cell[i], c.at(x))).or_insert(next);
        }
        cells = relabel.len();
    }
    // renumber cells by first (lowest) member
    let mut order: HashMap<usize, usize> = HashMap::with_capacity(cells);
    let mut representatives = Vec::with_capacity(cells);
    let class_index = cell
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            *order.entry(c).or_insert_with(|| {
                representatives.push(i);
                representatives.len() - 1
            })
        })
        .collect();
    Ok(SamplePartition { representatives, class_index })
}
