//! Finite concept classes over finite domains.
//!
//! Instances are positions in a [`Domain`]. Geometric generators work on
//! explicit point sets (for example grids in `R^D`), so every class is
//! enumerable and every risk can be computed exactly.

mod class;
mod domain;
mod file;
mod vc;

pub use class::{Concept, ConceptClass, Generator, MAX_CLASS_SIZE};
pub use domain::Domain;
pub use file::{parse_class, parse_class_spec, parse_domain_spec, read_class_file};
pub use vc::{
    s_equivalence_classes, shatters, vc_dimension_bruteforce, SamplePartition, MAX_SHATTER_SIZE, VC_WORK_LIMIT,
};

/// Number of positions where two equal-length bit strings differ.
pub fn hamming_distance(a: &[u8], b: &[u8]) -> crate::Result<usize> {
    if a.len() != b.len() {
        return Err(crate::Error::DimensionMismatch { left: a.len(), right: b.len() });
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}
