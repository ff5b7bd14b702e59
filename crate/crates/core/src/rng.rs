//! The random source behind the chaos game.
//!
//! SplitMix64: the state advances by `0x9E3779B97F4A7C15` and each output is
//! the state passed through the mixing function
//! `z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB; z ^ (z >> 31)`.
//! The initial state is the seed itself. A choice among `n` options takes the
//! high 64 bits of the 128-bit product `next_u64() * n`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

#[derive(Clone, Debug)]
pub struct ChaosRng {
    inner: SplitMix64,
}

impl ChaosRng {
    pub fn new(seed: u64) -> Self {
        ChaosRng { inner: SplitMix64::from_seed(seed.to_le_bytes()) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform index in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        ((u128::from(self.next_u64()) * n as u128) >> 64) as usize
    }
}
