//! Low-discrepancy point generators.
//!
//! All generators emit coordinates in `[0, 1)`. Halton and Sobol streams start at
//! index 1; the origin is never emitted because a zero coordinate always selects
//! the first state of a CPT row.

mod faure;
mod halton;
mod point;
mod poly_table;
mod primes;
mod radical;
mod sobol;

pub use faure::{faure_point, FaureParams, FaureStream, FAURE_DEFAULT_MAX_POINTS};
pub use halton::{halton_point, HaltonStream, HALTON_MAX_DIMENSION};
pub use point::{NumberStream, UnitPoint};
pub use primes::{first_prime_geq, nth_prime};
pub use radical::radical_inverse;
pub use sobol::{
    dimension_polynomial, expand_direction_numbers, sobol_direct_point, DirectionTable,
    SobolDimensionParams, SobolStream, MAX_SOBOL_DIMENSION, SOBOL_BITS,
};

