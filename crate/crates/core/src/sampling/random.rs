use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::lds::NumberStream;
use crate::{Error, Result};

/// Pseudo-random points from SplitMix64 (64-bit state, period 2^64).
#[derive(Debug, Clone)]
pub struct RandomStream {
    rng: SplitMix64,
    dim: usize,
}

impl RandomStream {
    pub fn new(dim: usize, seed: u64) -> Self {
        RandomStream { rng: SplitMix64::seed_from_u64(seed), dim }
    }
}

impl NumberStream for RandomStream {
    fn dimension(&self) -> usize {
        self.dim
    }

    fn fill_next(&mut self, out: &mut [f64]) -> Result<()> {
        if out.len() != self.dim {
            return Err(Error::InvalidInput("output buffer does not match stream dimension".into()));
        }
        for c in out.iter_mut() {
            *c = (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        }
        Ok(())
    }
}
