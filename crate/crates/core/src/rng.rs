//! Seeding and stream splitting.
//!
//! All randomness comes from [`SimRng`] (ChaCha8). A trial seed is derived
//! from `(master_seed, grid_index, trial_index)` with [`trial_seed`]; within a
//! trial, independent purposes (drawing examples, measuring them) use
//! separate ChaCha streams of the same key via [`child_stream`]. Because the
//! streams are consumed sequentially, the first `m` examples of a trial are a
//! prefix of the first `m' > m` examples for the same seed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The named generator used throughout the crate.
pub type SimRng = ChaCha8Rng;

/// Stream used for drawing instances and latent labels.
pub const SAMPLE_STREAM: u64 = 0;
/// Stream used for measurement outcomes.
pub const MEASURE_STREAM: u64 = 1;

/// SplitMix64 finalizer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-trial seed: `splitmix64(splitmix64(splitmix64(master) ^ grid) ^ trial)`.
pub fn trial_seed(master_seed: u64, grid_index: u64, trial_index: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(master_seed) ^ grid_index) ^ trial_index)
}

pub fn rng_from_seed(seed: u64) -> SimRng {
    SimRng::seed_from_u64(seed)
}

/// Independent stream `stream` of the generator keyed by `seed`.
pub fn child_stream(seed: u64, stream: u64) -> SimRng {
    let mut rng = SimRng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
