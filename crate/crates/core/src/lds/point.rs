use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A point of the unit hypercube; every coordinate lies in `[0, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitPoint(Vec<f64>);

impl UnitPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if let Some(c) = coords.iter().find(|c| !(0.0..1.0).contains(*c)) {
            return Err(Error::InvalidInput(alloc::format!(
                "coordinate {c} is outside [0, 1)"
            )));
        }
        Ok(UnitPoint(coords))
    }

    pub(crate) fn from_checked(coords: Vec<f64>) -> Self {
        debug_assert!(coords.iter().all(|c| (0.0..1.0).contains(c)));
        UnitPoint(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl core::ops::Index<usize> for UnitPoint {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// A source of points in the unit hypercube, consumed one point per sample.
///
/// Low-discrepancy streams are deterministic given their construction
/// parameters; pseudo-random streams are deterministic given their seed. A
/// stream is stateful and must be driven by one thread at a time.
pub trait NumberStream {
    fn dimension(&self) -> usize;

    /// Writes the next point into `out`, which must have length [`dimension`](Self::dimension).
    fn fill_next(&mut self, out: &mut [f64]) -> Result<()>;

    fn next_point(&mut self) -> Result<UnitPoint> {
        let mut coords = vec![0.0; self.dimension()];
        self.fill_next(&mut coords)?;
        Ok(UnitPoint::from_checked(coords))
    }
}

impl<S: NumberStream + ?Sized> NumberStream for &mut S {
    fn dimension(&self) -> usize {
        (**self).dimension()
    }

    fn fill_next(&mut self, out: &mut [f64]) -> Result<()> {
        (**self).fill_next(out)
    }
}

impl<S: NumberStream + ?Sized> NumberStream for alloc::boxed::Box<S> {
    fn dimension(&self) -> usize {
        (**self).dimension()
    }

    fn fill_next(&mut self, out: &mut [f64]) -> Result<()> {
        (**self).fill_next(out)
    }
}

pub(crate) fn check_out_len(out: &[f64], dim: usize) -> Result<()> {
    if out.len() != dim {
        return Err(Error::InvalidInput(alloc::format!(
            "output buffer has length {}, stream dimension is {dim}",
            out.len()
        )));
    }
    Ok(())
}
