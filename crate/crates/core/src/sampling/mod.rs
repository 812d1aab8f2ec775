//! Stochastic estimation of marginals and `Pr(E = e)`.
//!
//! Every estimator consumes one point of a [`NumberStream`] per sample.
//! Dimension `j` of the point drives the `j`th non-evidence node in the
//! network's topological order, so the same code runs on pseudo-random and
//! low-discrepancy input.

mod draw;
mod estimate;
mod isf;
mod metric;
mod random;

pub use crate::lds::NumberStream;
pub use draw::draw_node_state;
pub use estimate::{
    importance_checkpoints, importance_estimate, logic_sample, pls_checkpoints, pls_estimate,
    EstimationResult,
};
pub use isf::{likelihood_weighting_isf, load_isf_table, ImportanceFunction, LikelihoodWeighting, TableImportance};
pub use metric::rmse_metric;
pub use random::RandomStream;
