//! Discrete Bayesian networks and exact inference.
//!
//! CPT rows are indexed by parent configuration in mixed-radix order with the
//! first listed parent as the most significant digit.

mod elimination;
mod enumerate;
mod evidence;
mod marginals;
mod network;

pub use elimination::variable_elimination;
pub use enumerate::{brute_force_marginals, BRUTE_FORCE_MAX_CONFIGURATIONS};
pub use evidence::Evidence;
pub use marginals::MarginalSet;
pub use network::{BayesNet, Node, NodeSpec, PARSE_ROW_TOLERANCE, ROW_TOLERANCE};
