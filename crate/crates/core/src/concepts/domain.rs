use std::collections::HashMap;

use crate::{Error, Result};

/// Finite ordered set of instances. Instances are referred to by their
/// position (`usize`) everywhere else in the crate; names and coordinates are
/// for I/O and geometric generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Domain {
    names: Vec<String>,
    coords: Option<Vec<Vec<f64>>>,
    lookup: HashMap<String, usize>,
}

impl Domain {
    pub fn new(names: Vec<String>) -> Result<Self> {
        Self::build(names, None)
    }

    /// Named points with coordinates in `R^D` (all of the same length `D`).
    pub fn with_coords(names: Vec<String>, coords: Vec<Vec<f64>>) -> Result<Self> {
        if coords.len() != names.len() {
            return Err(Error::param("one coordinate vector per point is required"));
        }
        let dim = coords.first().map_or(0, Vec::len);
        if dim == 0 || coords.iter().any(|c| c.len() != dim) {
            return Err(Error::param("coordinates must share a positive dimension"));
        }
        Self::build(names, Some(coords))
    }

    fn build(names: Vec<String>, coords: Option<Vec<Vec<f64>>>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::param("domain must be non-empty"));
        }
        let mut lookup = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if lookup.insert(n.clone(), i).is_some() {
                return Err(Error::param(format!("duplicate instance `{n}`")));
            }
        }
        Ok(Self { names, coords, lookup })
    }

    /// Points `1..=n` on the real line, named by their value.
    pub fn line(n: usize) -> Result<Self> {
        let names = (1..=n).map(|i| i.to_string()).collect();
        let coords = (1..=n).map(|i| vec![i as f64]).collect();
        Self::with_coords(names, coords)
    }

    /// Integer grid `{1..shape[0]} × … × {1..shape[D-1]}` in row-major order,
    /// named like `2,3`.
    pub fn grid(shape: &[usize]) -> Result<Self> {
        if shape.is_empty() || shape.contains(&0) {
            return Err(Error::param("grid shape must be non-empty with positive sides"));
        }
        let total: usize = shape.iter().product();
        let mut names = Vec::with_capacity(total);
        let mut coords = Vec::with_capacity(total);
        for mut k in 0..total {
            let mut c = vec![0.0; shape.len()];
            for axis in (0..shape.len()).rev() {
                c[axis] = (k % shape[axis] + 1) as f64;
                k /= shape[axis];
            }
            names.push(c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
            coords.push(c);
        }
        Self::with_coords(names, coords)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.lookup.get(name).copied().ok_or_else(|| Error::UnknownInstance(name.to_string()))
    }

    pub fn check(&self, x: usize) -> Result<()> {
        if x >= self.len() {
            return Err(Error::UnknownInstance(format!("#{x}")));
        }
        Ok(())
    }

    pub fn coords(&self, x: usize) -> Option<&[f64]> {
        self.coords.as_ref().map(|c| c[x].as_slice())
    }

    /// Ambient dimension `D` of a coordinate domain.
    pub fn dimension(&self) -> Option<usize> {
        self.coords.as_ref().map(|c| c[0].len())
    }
}
