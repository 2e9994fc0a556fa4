//! Failure frequencies, quantiles and scaling fits over trial records.

use std::collections::BTreeMap;

use statrs::distribution::{Binomial, DiscreteCDF};

use super::run::TrialRecord;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct SizeSummary {
    pub m: usize,
    pub trials: usize,
    /// Trials with excess risk above `ε`.
    pub failures: usize,
    pub failure_rate: f64,
    pub mean: f64,
    pub median: f64,
    pub q90: f64,
    pub max: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Summary {
    pub epsilon: f64,
    /// Sorted by `m`.
    pub sizes: Vec<SizeSummary>,
}

/// Linear-interpolation quantile of sorted data.
fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let (lo, hi) = (pos.floor() as usize, pos.ceil() as usize);
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

pub fn summarize(records: &[TrialRecord], epsilon: f64) -> Result<Summary> {
    if records.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut by_m: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for r in records {
        by_m.entry(r.m).or_default().push(r.excess_risk);
    }
    let sizes = by_m
        .into_iter()
        .map(|(m, mut v)| {
            v.sort_by(f64::total_cmp);
            let failures = v.iter().filter(|&&e| e > epsilon).count();
            SizeSummary {
                m,
                trials: v.len(),
                failures,
                failure_rate: failures as f64 / v.len() as f64,
                mean: v.iter().sum::<f64>() / v.len() as f64,
                median: quantile(&v, 0.5),
                q90: quantile(&v, 0.9),
                max: *v.last().unwrap(),
            }
        })
        .collect();
    Ok(Summary { epsilon, sizes })
}

impl Summary {
    /// Smallest `m` from which every larger size also has failure rate `≤ δ`.
    pub fn minimal_m(&self, delta: f64) -> Option<usize> {
        let last_bad = self.sizes.iter().rposition(|s| s.failure_rate > delta);
        match last_bad {
            None => self.sizes.first().map(|s| s.m),
            Some(i) => self.sizes.get(i + 1).map(|s| s.m),
        }
    }

    /// Crossing point of the failure rate with `δ`, interpolated linearly in
    /// `ln m` between the last failing size and the next one.
    pub fn minimal_m_interpolated(&self, delta: f64) -> Option<f64> {
        let last_bad = self.sizes.iter().rposition(|s| s.failure_rate > delta);
        match last_bad {
            None => self.sizes.first().map(|s| s.m as f64),
            Some(i) => {
                let (a, b) = (&self.sizes[i], self.sizes.get(i + 1)?);
                let t = (a.failure_rate - delta) / (a.failure_rate - b.failure_rate);
                Some(((a.m as f64).ln() + t * ((b.m as f64).ln() - (a.m as f64).ln())).exp())
            }
        }
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("# epsilon = {}\n", self.epsilon);
        out.push_str("m,trials,failures,failure_rate,mean,median,q90,max\n");
        for s in &self.sizes {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                s.m, s.trials, s.failures, s.failure_rate, s.mean, s.median, s.q90, s.max
            ));
        }
        out
    }
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Result<f64> {
    if points.len() < 2 || points.iter().any(|&(x, y)| !(x > 0.0 && y > 0.0)) {
        return Err(Error::param("slope fit needs at least two points with positive coordinates"));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::param("slope fit needs distinct x values"));
    }
    Ok(sxy / sxx)
}

/// Minimal `m` per accuracy from one set of records, and the fitted slope.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalingFit {
    pub points: Vec<(f64, f64)>,
    pub slope: f64,
}

pub fn scaling_fit(records: &[TrialRecord], epsilons: &[f64], delta: f64) -> Result<ScalingFit> {
    let mut points = Vec::new();
    for &eps in epsilons {
        let m = summarize(records, eps)?
            .minimal_m_interpolated(delta)
            .ok_or_else(|| Error::param(format!("no sample size reaches failure rate {delta} at epsilon {eps}")))?;
        points.push((eps, m));
    }
    Ok(ScalingFit { slope: loglog_slope(&points)?, points })
}

/// `P[Bin(n, p) ≥ k]`.
pub fn binomial_upper_tail(n: usize, k: usize, p: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let b = Binomial::new(p, n as u64).expect("p in [0, 1]");
    b.sf(k as u64 - 1)
}

/// One-sided test of `H₀: failure probability ≤ δ`; true when `k` failures
/// out of `n` trials do not reject it at level `alpha`.
pub fn failure_rate_consistent(n: usize, k: usize, delta: f64, alpha: f64) -> bool {
    binomial_upper_tail(n, k, delta) > alpha
}

#[cfg(test)]
mod tests {
    use super::*;

    fn synthetic(f: impl Fn(f64) -> f64) -> Vec<TrialRecord> {
        // deterministic spread of multipliers stands in for sampling noise
        let mut out = Vec::new();
        let mut m = 10usize;
        while m < 2_000_000 {
            for t in 0..50 {
                let u = 0.5 + t as f64 / 49.0;
                out.push(TrialRecord { m, trial: t, seed: t as u64, excess_risk: u * f(m as f64), elapsed_ms: 0.0 });
            }
            m = (m as f64 * 1.1).ceil() as usize;
        }
        out
    }

    #[test]
    fn zero_records_never_fail() {
        let r = vec![TrialRecord { m: 5, trial: 0, seed: 0, excess_risk: 0.0, elapsed_ms: 0.0 }; 3];
        let s = summarize(&r, 0.1).unwrap();
        assert_eq!(s.sizes[0].failure_rate, 0.0);
        assert_eq!(s.minimal_m(0.1), Some(5));
        assert!(summarize(&[], 0.1).is_err());
    }

    #[test]
    fn slope_of_inverse_m() {
        let r = synthetic(|m| 3.0 / m);
        let fit = scaling_fit(&r, &[0.4, 0.2, 0.1, 0.05], 0.1).unwrap();
        assert!((fit.slope + 1.0).abs() < 0.05, "{}", fit.slope);
    }

    #[test]
    fn slope_of_inverse_sqrt_m() {
        let r = synthetic(|m| 3.0 / m.sqrt());
        let fit = scaling_fit(&r, &[0.4, 0.2, 0.1, 0.05], 0.1).unwrap();
        assert!((fit.slope + 2.0).abs() < 0.05, "{}", fit.slope);
    }

    #[test]
    fn quantiles() {
        let r: Vec<TrialRecord> = (0..5)
            .map(|i| TrialRecord { m: 1, trial: i, seed: 0, excess_risk: i as f64, elapsed_ms: 0.0 })
            .collect();
        let s = summarize(&r, 10.0).unwrap();
        assert_eq!(s.sizes[0].median, 2.0);
        assert_eq!(s.sizes[0].max, 4.0);
        assert!((s.sizes[0].q90 - 3.6).abs() < 1e-12);
    }

    #[test]
    fn binomial_test() {
        assert!((binomial_upper_tail(10, 0, 0.3) - 1.0).abs() < 1e-15);
        assert!((binomial_upper_tail(2, 2, 0.5) - 0.25).abs() < 1e-12);
        assert!(failure_rate_consistent(300, 30, 0.1, 0.05));
        assert!(!failure_rate_consistent(300, 50, 0.1, 0.05));
    }
}
