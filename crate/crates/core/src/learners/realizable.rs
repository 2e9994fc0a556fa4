use crate::concepts::{Concept, ConceptClass};
use crate::par::{map_slice, Execution};
use crate::sampling::ClassicalSample;
use crate::{Error, Result};

use super::hypothesis::{Hypothesis, LearnerConfig, Provenance};
use super::laird::{laird_min_size, laird_split, min_disagreement_items};
use super::subsample::subsample_ranges;

/// Pointwise majority over equal-length labellings; ties predict 0.
pub fn majority_vote(voters: &[&Concept]) -> Result<Hypothesis> {
    let first = voters.first().ok_or(Error::EmptySample)?;
    let n = first.len();
    if voters.iter().any(|v| v.len() != n) {
        return Err(Error::param("voters must label the same domain"));
    }
    let mut ones = vec![0usize; n];
    for v in voters {
        for (x, &b) in v.labels().iter().enumerate() {
            ones[x] += b as usize;
        }
    }
    let labels = Concept::from_fn(n, |x| 2 * ones[x] > voters.len());
    Ok(Hypothesis::new(labels, Provenance::Majority { voters: voters.len() }))
}

/// Grouping size used on a subsample of length `len`: from [`laird_split`]
/// when the subsample is long enough, otherwise `⌈len/2⌉`.
pub fn grouping_size(len: usize, eta_bound: f64) -> usize {
    if (len as f64) >= laird_min_size(eta_bound) {
        laird_split(len, eta_bound).expect("length checked").0
    } else {
        len.div_ceil(2)
    }
}

/// Minimum disagreement on every generated subsample, then a majority vote.
pub fn realizable_learner(sample: &ClassicalSample, class: &ConceptClass, config: &LearnerConfig) -> Result<Hypothesis> {
    realizable_learner_with(sample, class, config, Execution::default())
}

pub fn realizable_learner_with(
    sample: &ClassicalSample,
    class: &ConceptClass,
    config: &LearnerConfig,
    exec: Execution,
) -> Result<Hypothesis> {
    subsample_hypotheses(sample, class, config, exec).and_then(|hs| {
        let voters: Vec<&Concept> = hs.iter().map(Hypothesis::concept).collect();
        majority_vote(&voters)
    })
}

/// The per-subsample hypotheses, in subsample order.
pub fn subsample_hypotheses(
    sample: &ClassicalSample,
    class: &ConceptClass,
    config: &LearnerConfig,
    exec: Execution,
) -> Result<Vec<Hypothesis>> {
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    let items = sample.items();
    let ranges = subsample_ranges(items.len());
    map_slice(&ranges, exec, |rs| {
        let len: usize = rs.iter().map(|r| r.len()).sum();
        let m1 = grouping_size(len, config.eta_bound);
        min_disagreement_items(rs.iter().flat_map(|r| items[r.clone()].iter()), class, m1)
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concepts::Domain;
    use crate::learners::min_disagreement;

    #[test]
    fn majority_examples() {
        let a = Concept::new(vec![1, 0]).unwrap();
        let b = Concept::new(vec![1, 1]).unwrap();
        let c = Concept::new(vec![0, 0]).unwrap();
        assert_eq!(majority_vote(&[&a, &b, &c]).unwrap().concept().labels(), &[1, 0]);
        assert_eq!(majority_vote(&[&a, &c]).unwrap().concept().labels(), &[0, 0]);
    }

    #[test]
    fn learner_on_consistent_data() {
        let class = ConceptClass::thresholds(Domain::line(20).unwrap()).unwrap();
        let target = class.member(5).clone();
        let items: Vec<(usize, u8)> = (0..200).map(|i| (i * 13 % 20, 0)).map(|(x, _)| (x, target.at(x))).collect();
        let config = LearnerConfig::new(0.1, 0.05, 0.0).unwrap();
        let h = realizable_learner(&ClassicalSample::new(items), &class, &config).unwrap();
        assert_eq!(h.concept(), &target);
    }

    #[test]
    fn small_sample_matches_min_disagreement() {
        let class = ConceptClass::thresholds(Domain::line(5).unwrap()).unwrap();
        let s = ClassicalSample::new(vec![(1, 0), (3, 1), (4, 1)]);
        let config = LearnerConfig::new(0.1, 0.05, 0.0).unwrap();
        let h = realizable_learner(&s, &class, &config).unwrap();
        let direct = min_disagreement(&s, &class, 2).unwrap();
        assert_eq!(h.concept(), direct.concept());
    }

    #[test]
    fn serial_matches_parallel() {
        let class = ConceptClass::thresholds(Domain::line(30).unwrap()).unwrap();
        let items: Vec<(usize, u8)> = (0..500).map(|i| (i * 7 % 30, ((i * 31) % 5 == 0) as u8)).collect();
        let s = ClassicalSample::new(items);
        let config = LearnerConfig::new(0.1, 0.05, 0.2).unwrap();
        let a = subsample_hypotheses(&s, &class, &config, Execution::Serial).unwrap();
        let b = subsample_hypotheses(&s, &class, &config, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
