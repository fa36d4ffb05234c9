//! Seed derivation. Every randomized routine takes a `u64` seed; parallel
//! work derives one independent stream per item from `(seed, stream, index)`
//! so results never depend on scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The generator used everywhere in the crate.
pub type Rng = ChaCha8Rng;

/// Stream tags keep derived seeds of different consumers apart.
pub mod stream {
    pub const LEMMA_TRIAL: u64 = 0x4c45_4d4d;
    pub const DISTINCT_RUN: u64 = 0x4449_5354;
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

pub fn derive_seed(seed: u64, stream: u64, index: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index)
}

pub fn seeded(seed: u64) -> Rng {
    Rng::seed_from_u64(seed)
}

pub fn stream_rng(seed: u64, stream: u64, index: u64) -> Rng {
    seeded(derive_seed(seed, stream, index))
}
