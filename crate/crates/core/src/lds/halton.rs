use alloc::vec::Vec;

use super::point::check_out_len;
use super::primes::PRIMES;
use super::radical::radical_inverse_unchecked;
use super::{NumberStream, UnitPoint};
use crate::{Error, Result};

/// Number of dimensions covered by the embedded prime table.
pub const HALTON_MAX_DIMENSION: usize = PRIMES.len();

fn check_dimension(d: usize) -> Result<()> {
    if d == 0 || d > HALTON_MAX_DIMENSION {
        return Err(Error::UnsupportedDimension { requested: d, max: HALTON_MAX_DIMENSION });
    }
    Ok(())
}

fn fill(n: u64, out: &mut [f64]) {
    for (c, &p) in out.iter_mut().zip(PRIMES.iter()) {
        *c = radical_inverse_unchecked(n, u64::from(p));
    }
}

/// Point `n` (1-based) of the `d`-dimensional Halton sequence: coordinate `j`
/// is the radical inverse of `n` in the `j`th prime base.
pub fn halton_point(n: u64, d: usize) -> Result<UnitPoint> {
    if n == 0 {
        return Err(Error::InvalidArgument("Halton indices start at 1".into()));
    }
    check_dimension(d)?;
    let mut coords = alloc::vec![0.0; d];
    fill(n, &mut coords);
    Ok(UnitPoint::from_checked(coords))
}

#[derive(Debug, Clone)]
pub struct HaltonStream {
    dim: usize,
    next_index: u64,
}

impl HaltonStream {
    pub fn new(dim: usize) -> Result<Self> {
        check_dimension(dim)?;
        Ok(HaltonStream { dim, next_index: 1 })
    }

    /// Index of the point the next call will emit.
    pub fn next_index(&self) -> u64 {
        self.next_index
    }

    pub fn take_points(&mut self, count: usize) -> Result<Vec<UnitPoint>> {
        (0..count).map(|_| self.next_point()).collect()
    }
}

impl NumberStream for HaltonStream {
    fn dimension(&self) -> usize {
        self.dim
    }

    fn fill_next(&mut self, out: &mut [f64]) -> Result<()> {
        check_out_len(out, self.dim)?;
        if self.next_index == u64::MAX {
            return Err(Error::SequenceExhausted { capacity: u64::MAX - 1 });
        }
        fill(self.next_index, out);
        self.next_index += 1;
        Ok(())
    }
}
