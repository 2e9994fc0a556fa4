use std::collections::{BTreeMap, HashSet};
use std::path::Path;

use crate::concepts::{Concept, Domain};
use crate::{Error, Result};

/// Tolerance on the total mass.
pub const MASS_TOL: f64 = 1e-12;

/// One support point `(instance, bit, probability)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Atom {
    pub instance: usize,
    pub bit: u8,
    pub prob: f64,
}

/// Finite-support probability measure on instance × bit.
#[derive(Clone, Debug, PartialEq)]
pub struct LabeledDistribution {
    support: Vec<Atom>,
}

impl LabeledDistribution {
    pub fn new(support: Vec<Atom>) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::param("distribution needs at least one support point"));
        }
        let mut seen = HashSet::new();
        let mut total = 0.0;
        for a in &support {
            if a.bit > 1 {
                return Err(Error::param("label bits must be 0 or 1"));
            }
            if !(0.0..=1.0).contains(&a.prob) {
                return Err(Error::param(format!("probability {} outside [0, 1]", a.prob)));
            }
            if !seen.insert((a.instance, a.bit)) {
                return Err(Error::param(format!("duplicate support point ({}, {})", a.instance, a.bit)));
            }
            total += a.prob;
        }
        if (total - 1.0).abs() > MASS_TOL {
            return Err(Error::param(format!("probabilities sum to {total}, not 1")));
        }
        Ok(Self { support })
    }

    pub fn from_triples(triples: &[(usize, u8, f64)]) -> Result<Self> {
        Self::new(triples.iter().map(|&(instance, bit, prob)| Atom { instance, bit, prob }).collect())
    }

    pub fn point_mass(instance: usize, bit: u8) -> Self {
        Self { support: vec![Atom { instance, bit: bit & 1, prob: 1.0 }] }
    }

    /// Marginal `μ₁` with labels given by `target`.
    pub fn realizable(marginal: &[(usize, f64)], target: &Concept) -> Result<Self> {
        Self::new(marginal.iter().map(|&(x, p)| Atom { instance: x, bit: target.at(x), prob: p }).collect())
    }

    /// Marginal `μ₁` and conditional `P[bit = 1 | x]`; both bits are kept in the support.
    pub fn from_conditional(marginal: &[(usize, f64)], p1: impl Fn(usize) -> f64) -> Result<Self> {
        let mut support = Vec::with_capacity(2 * marginal.len());
        for &(x, p) in marginal {
            let q = p1(x).clamp(0.0, 1.0);
            support.push(Atom { instance: x, bit: 0, prob: p * (1.0 - q) });
            support.push(Atom { instance: x, bit: 1, prob: p * q });
        }
        Self::new(support)
    }

    pub fn uniform_marginal(n: usize) -> Vec<(usize, f64)> {
        (0..n).map(|x| (x, 1.0 / n as f64)).collect()
    }

    pub fn support(&self) -> &[Atom] {
        &self.support
    }

    pub fn prob(&self, instance: usize, bit: u8) -> f64 {
        self.support.iter().filter(|a| a.instance == instance && a.bit == bit).map(|a| a.prob).sum()
    }

    /// Marginal on instances, sorted by instance.
    pub fn marginal(&self) -> Vec<(usize, f64)> {
        let mut m: BTreeMap<usize, f64> = BTreeMap::new();
        for a in &self.support {
            *m.entry(a.instance).or_default() += a.prob;
        }
        m.into_iter().collect()
    }

    /// Per-instance masses `[μ(x,0), μ(x,1)]`, sorted by instance.
    pub fn joint_by_instance(&self) -> Vec<(usize, [f64; 2])> {
        let mut m: BTreeMap<usize, [f64; 2]> = BTreeMap::new();
        for a in &self.support {
            m.entry(a.instance).or_default()[a.bit as usize] += a.prob;
        }
        m.into_iter().collect()
    }

    /// `μ(bit | x)`; `None` when `x` has no mass.
    pub fn conditional(&self, instance: usize, bit: u8) -> Option<f64> {
        let px: f64 = self.support.iter().filter(|a| a.instance == instance).map(|a| a.prob).sum();
        (px > 0.0).then(|| self.prob(instance, bit) / px)
    }

    pub fn instances(&self) -> Vec<usize> {
        self.marginal().into_iter().map(|(x, _)| x).collect()
    }

    pub fn max_instance(&self) -> usize {
        self.support.iter().map(|a| a.instance).max().unwrap_or(0)
    }

    /// Whether some concept labels the support (ignoring zero-mass atoms) without error.
    pub fn is_realizable_by(&self, concept: &Concept) -> bool {
        self.support.iter().all(|a| a.prob == 0.0 || concept.at(a.instance) == a.bit)
    }

    /// Lines of `instance-id, bit, probability`.
    pub fn to_text(&self, domain: &Domain) -> String {
        self.support.iter().map(|a| format!("{}, {}, {}\n", domain.name(a.instance), a.bit, a.prob)).collect()
    }

    pub fn parse(text: &str, domain: &Domain) -> Result<Self> {
        let mut support = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let fields: Vec<&str> = body.rsplitn(3, ',').map(str::trim).collect();
            let [prob, bit, id] = fields[..] else {
                return Err(Error::parse(line, "expected `instance-id, bit, probability`"));
            };
            let instance = domain.index_of(id)?;
            let bit = match bit {
                "0" => 0,
                "1" => 1,
                _ => return Err(Error::parse(line, format!("invalid bit `{bit}`"))),
            };
            let prob = prob.parse().map_err(|_| Error::parse(line, format!("invalid probability `{prob}`")))?;
            support.push(Atom { instance, bit, prob });
        }
        Self::new(support)
    }

    pub fn read_file(path: impl AsRef<Path>, domain: &Domain) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?, domain)
    }
}
