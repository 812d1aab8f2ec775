//! Random search for Sobol initial direction numbers.
//!
//! Dimensions are settled one at a time. For dimension `i`, `random_times`
//! legal candidates are drawn; each is scored by summing the cell-uniformity
//! measure of its first `points` Gray-code points paired with every settled
//! dimension `k` in `[i - window, i - 1]`, and the lowest score wins (earliest
//! draw on ties).

use alloc::vec::Vec;

use rand::{RngExt, SeedableRng};
use rand_xoshiro::SplitMix64;

use super::cell_uniformity_raw;
use crate::lds::{dimension_polynomial, DirectionTable, SobolDimensionParams, SobolStream, MAX_SOBOL_DIMENSION};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformitySearchConfig {
    /// Number of dimensions to configure, starting from dimension 1.
    pub dimensions: usize,
    /// Candidates drawn per dimension.
    pub random_times: usize,
    /// Points evaluated per candidate.
    pub points: usize,
    /// Grid divisions per axis.
    pub grid: usize,
    /// Dimension `k` is paired with `i` only when `k >= i - window`.
    pub window: usize,
    pub seed: u64,
}

impl Default for UniformitySearchConfig {
    fn default() -> Self {
        UniformitySearchConfig {
            dimensions: 1,
            random_times: 64,
            points: 1024,
            grid: 32,
            window: 8,
            seed: 0,
        }
    }
}

impl UniformitySearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.dimensions == 0 || self.dimensions > MAX_SOBOL_DIMENSION {
            return Err(Error::UnsupportedDimension {
                requested: self.dimensions,
                max: MAX_SOBOL_DIMENSION,
            });
        }
        let bad = |msg: &str| Err(Error::InvalidArgument(msg.into()));
        if self.random_times == 0 {
            return bad("random_times must be at least 1");
        }
        if self.window == 0 {
            return bad("window must be at least 1");
        }
        if self.grid == 0 {
            return bad("grid must be at least 1");
        }
        if self.points < self.grid * self.grid {
            return bad("points must be at least grid^2");
        }
        if self.points as u64 >= 1u64 << 32 {
            return bad("points exceed the 32-bit Sobol capacity");
        }
        Ok(())
    }
}

/// One scored candidate.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateRecord {
    /// 1-based dimension.
    pub dimension: usize,
    /// 0-based draw index within the dimension.
    pub candidate: usize,
    pub initial: Vec<u32>,
    pub error_sum: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub params: Vec<SobolDimensionParams>,
    pub log: Vec<CandidateRecord>,
}

fn draw_initial<R: RngExt>(rng: &mut R, degree: u32) -> Vec<u32> {
    (1..=degree).map(|i| 2 * rng.random_range(0..1u32 << (i - 1)) + 1).collect()
}

fn first_points(params: &SobolDimensionParams, n: usize) -> Result<Vec<u32>> {
    let table = DirectionTable::new(core::slice::from_ref(params))?;
    let mut stream = SobolStream::new(&table, 1)?;
    (0..n).map(|_| stream.next_raw().map(|x| x[0])).collect()
}

pub fn search_direction_numbers(cfg: &UniformitySearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let mut rng = SplitMix64::seed_from_u64(cfg.seed);
    let mut settled: Vec<Vec<u32>> = Vec::with_capacity(cfg.dimensions);
    let mut params = Vec::with_capacity(cfg.dimensions);
    let mut log = Vec::with_capacity(cfg.dimensions * cfg.random_times);
    let mut counts = alloc::vec![0u32; cfg.grid * cfg.grid];

    for dim in 1..=cfg.dimensions {
        let (degree, bits) = dimension_polynomial(dim).expect("dimension validated");
        let lo = dim.saturating_sub(cfg.window).max(1);
        let mut best: Option<(f64, SobolDimensionParams, Vec<u32>)> = None;

        for candidate in 0..cfg.random_times {
            let initial = draw_initial(&mut rng, degree);
            let p = SobolDimensionParams::new(degree, bits, initial.clone())?;
            let xs = first_points(&p, cfg.points)?;
            let error_sum: f64 = (lo..dim)
                .map(|k| cell_uniformity_raw(&settled[k - 1], &xs, cfg.grid, &mut counts))
                .sum();
            log.push(CandidateRecord { dimension: dim, candidate, initial, error_sum });
            if best.as_ref().is_none_or(|(score, _, _)| error_sum < *score) {
                best = Some((error_sum, p, xs));
            }
        }

        let (_, p, xs) = best.expect("random_times >= 1");
        params.push(p);
        settled.push(xs);
    }
    Ok(SearchOutcome { params, log })
}
