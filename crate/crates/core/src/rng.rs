//! Seeded randomness.
//!
//! Every random procedure in the crate draws from ChaCha8 (`rand_chacha`),
//! whose output stream is fixed by its published specification, so tables
//! and p-values are bit-reproducible for a given seed. Independent work items
//! (percolation trials, permutation shuffles) each get their own stream from
//! [`derive_seed`], which makes results independent of scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// SplitMix64 finaliser.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Folds a sequence of indices into a base seed.
pub fn derive_seed(seed: u64, indices: &[u64]) -> u64 {
    indices.iter().fold(mix(seed), |acc, &i| mix(acc ^ mix(i)))
}
