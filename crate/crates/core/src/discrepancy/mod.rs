//! Uniformity measures for point sets and the search for Sobol initial
//! direction numbers that uses them.

mod search;
mod star;
mod uniformity;

pub use search::{
    search_direction_numbers, CandidateRecord, SearchOutcome, UniformitySearchConfig,
};
pub use star::{star_discrepancy_exact, STAR_DISCREPANCY_MAX_POINTS};
pub use uniformity::{cell_uniformity, PointSet2D};

pub(crate) use uniformity::cell_uniformity_raw;
