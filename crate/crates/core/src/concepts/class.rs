use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;

use super::domain::Domain;
use crate::{Error, Result};

/// Largest class any generator will materialize.
pub const MAX_CLASS_SIZE: usize = 1_000_000;

/// A total binary labelling of a domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Concept {
    labels: Vec<u8>,
}

impl Concept {
    pub fn new(labels: Vec<u8>) -> Result<Self> {
        if labels.iter().any(|&b| b > 1) {
            return Err(Error::param("concept labels must be 0 or 1"));
        }
        Ok(Self { labels })
    }

    pub fn constant(n: usize, bit: u8) -> Self {
        Self { labels: vec![bit & 1; n] }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Self {
        Self { labels: (0..n).map(|x| u8::from(f(x))).collect() }
    }

    pub fn evaluate(&self, x: usize) -> Result<u8> {
        self.labels.get(x).copied().ok_or_else(|| Error::UnknownInstance(format!("#{x}")))
    }

    /// Unchecked lookup for hot loops over validated instances.
    #[inline]
    pub fn at(&self, x: usize) -> u8 {
        self.labels[x]
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// How a class was built.
#[derive(Clone, Debug, PartialEq)]
pub enum Generator {
    Explicit,
    Full,
    Thresholds,
    AxisRectangles { dims: usize },
    Balls { dims: usize },
    /// `{0} ∪ {1_R : R ∈ regions}`: type-0 noise never changes the ground
    /// state, type-1 noise flips it exactly on `R`.
    GroundState { regions: Box<Generator> },
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Explicit => write!(f, "explicit"),
            Generator::Full => write!(f, "full"),
            Generator::Thresholds => write!(f, "thresholds"),
            Generator::AxisRectangles { dims } => write!(f, "axis-rectangles({dims})"),
            Generator::Balls { dims } => write!(f, "balls({dims})"),
            Generator::GroundState { regions } => write!(f, "ground-state({regions})"),
        }
    }
}

/// Non-empty finite family of distinct concepts over one domain.
#[derive(Clone, Debug, PartialEq)]
pub struct ConceptClass {
    domain: Domain,
    members: Vec<Concept>,
    generator: Generator,
}

fn check_size(size: u128) -> Result<()> {
    if size > MAX_CLASS_SIZE as u128 {
        return Err(Error::EnumerationLimit { what: "concept class", size, limit: MAX_CLASS_SIZE as u128 });
    }
    Ok(())
}

impl ConceptClass {
    /// Explicit list of members; duplicates are rejected.
    pub fn explicit(domain: Domain, members: Vec<Concept>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (i, c) in members.iter().enumerate() {
            if !seen.insert(c) {
                return Err(Error::param(format!("member {i} duplicates an earlier member")));
            }
        }
        Self::checked(domain, members, Generator::Explicit)
    }

    fn checked(domain: Domain, members: Vec<Concept>, generator: Generator) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::param("concept class must be non-empty"));
        }
        check_size(members.len() as u128)?;
        if let Some(i) = members.iter().position(|c| c.len() != domain.len()) {
            return Err(Error::param(format!("member {i} is not total over the domain")));
        }
        Ok(Self { domain, members, generator })
    }

    /// Keeps the first occurrence of every labelling.
    fn deduplicated(domain: Domain, members: Vec<Concept>, generator: Generator) -> Result<Self> {
        let mut seen = HashSet::new();
        let members = members.into_iter().filter(|c| seen.insert(c.clone())).collect();
        Self::checked(domain, members, generator)
    }

    /// All `2^n` labellings, in binary counting order (bit `x` of the index is the label of `x`).
    pub fn full(domain: Domain) -> Result<Self> {
        let n = domain.len();
        check_size(1u128.checked_shl(n as u32).unwrap_or(u128::MAX))?;
        let members = (0..1usize << n).map(|k| Concept::from_fn(n, |x| k >> x & 1 == 1)).collect();
        Self::checked(domain, members, Generator::Full)
    }

    /// `f_t(x) = 1` iff `x` is at position `≥ t`, for `t = 0..=n`. Member 0 is
    /// constant 1 and member `n` is constant 0.
    pub fn thresholds(domain: Domain) -> Result<Self> {
        let n = domain.len();
        let members = (0..=n).map(|t| Concept::from_fn(n, |x| x >= t)).collect();
        Self::checked(domain, members, Generator::Thresholds)
    }

    /// Indicators of closed axis-aligned boxes, with the empty box first.
    /// Box corners range over the coordinate values occurring in the domain.
    pub fn axis_rectangles(domain: Domain) -> Result<Self> {
        let dims = domain.dimension().ok_or_else(|| Error::param("axis rectangles need coordinates"))?;
        let axis_values: Vec<Vec<f64>> = (0..dims)
            .map(|a| {
                let mut v: Vec<f64> = (0..domain.len()).map(|x| domain.coords(x).unwrap()[a]).collect();
                v.sort_by(f64::total_cmp);
                v.dedup();
                v
            })
            .collect();
        let intervals: Vec<Vec<(f64, f64)>> = axis_values
            .iter()
            .map(|v| (0..v.len()).flat_map(|i| (i..v.len()).map(move |j| (v[i], v[j]))).collect())
            .collect();
        check_size(intervals.iter().map(|i| i.len() as u128).product::<u128>() + 1)?;
        let n = domain.len();
        let mut members = vec![Concept::constant(n, 0)];
        for boxes in intervals.iter().map(|i| i.iter()).multi_cartesian_product() {
            members.push(Concept::from_fn(n, |x| {
                let c = domain.coords(x).unwrap();
                boxes.iter().enumerate().all(|(a, &&(lo, hi))| lo <= c[a] && c[a] <= hi)
            }));
        }
        Self::deduplicated(domain, members, Generator::AxisRectangles { dims })
    }

    /// Indicators of closed Euclidean balls centred at domain points, with
    /// radii ranging over the occurring pairwise distances; the empty set first.
    pub fn balls(domain: Domain) -> Result<Self> {
        let dims = domain.dimension().ok_or_else(|| Error::param("balls need coordinates"))?;
        let n = domain.len();
        check_size((n as u128) * (n as u128) + 1)?;
        let dist = |a: usize, b: usize| -> f64 {
            let (p, q) = (domain.coords(a).unwrap(), domain.coords(b).unwrap());
            p.iter().zip(q).map(|(u, v)| (u - v) * (u - v)).sum::<f64>().sqrt()
        };
        let mut members = vec![Concept::constant(n, 0)];
        for centre in 0..n {
            let mut radii: Vec<f64> = (0..n).map(|x| dist(centre, x)).collect();
            radii.sort_by(f64::total_cmp);
            radii.dedup();
            for r in radii {
                members.push(Concept::from_fn(n, |x| dist(centre, x) <= r + 1e-12));
            }
        }
        Self::deduplicated(domain, members, Generator::Balls { dims })
    }

    /// The binary class of the noisy ground-state preparation: the zero
    /// concept, then every region indicator of `regions`.
    pub fn ground_state(regions: &ConceptClass) -> Result<Self> {
        let n = regions.domain.len();
        let mut members = vec![Concept::constant(n, 0)];
        members.extend(regions.members.iter().cloned());
        Self::deduplicated(
            regions.domain.clone(),
            members,
            Generator::GroundState { regions: Box::new(regions.generator.clone()) },
        )
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn members(&self) -> &[Concept] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &Concept {
        &self.members[i]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn generator(&self) -> &Generator {
        &self.generator
    }

    /// Index of the member with exactly these labels.
    pub fn position(&self, concept: &Concept) -> Option<usize> {
        self.members.iter().position(|c| c == concept)
    }

    /// Two members and a point where the first is 0 and the second is 1.
    pub fn disagreeing_pair(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.domain.len() {
            let f = self.members.iter().position(|c| c.at(x) == 0);
            let g = self.members.iter().position(|c| c.at(x) == 1);
            if let (Some(f), Some(g)) = (f, g) {
                return Some((f, g, x));
            }
        }
        None
    }

    /// Two members and points `(x1, x2)` with `f(x1) = g(x1)` and `f(x2) = 0 ≠ g(x2) = 1`.
    pub fn agreeing_and_disagreeing_pair(&self) -> Option<(usize, usize, usize, usize)> {
        let n = self.domain.len();
        for (f, g) in (0..self.len()).tuple_combinations() {
            let (a, b) = (&self.members[f], &self.members[g]);
            let agree = (0..n).find(|&x| a.at(x) == b.at(x));
            let split = (0..n).find(|&x| a.at(x) != b.at(x));
            if let (Some(x1), Some(x2)) = (agree, split) {
                return Some(if a.at(x2) == 0 { (f, g, x1, x2) } else { (g, f, x1, x2) });
            }
        }
        None
    }

    /// Some point carries both labels across the class.
    pub fn is_nontrivial(&self) -> bool {
        self.disagreeing_pair().is_some()
    }

    /// Additionally some pair agrees somewhere while disagreeing elsewhere.
    pub fn is_nontrivial_realizable(&self) -> bool {
        self.agreeing_and_disagreeing_pair().is_some()
    }
}
