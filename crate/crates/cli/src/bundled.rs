//! Networks and direction numbers shipped with the crate.

/// ASIA (Lauritzen and Spiegelhalter), 8 binary nodes.
pub const ASIA: &str = include_str!("../data/asia.json");
pub const ASIA_EVIDENCE: &str = include_str!("../data/asia_evidence.json");
/// Five-node two-state network with the COMA topology.
pub const COMA: &str = include_str!("../data/coma.json");
/// Seven-node tree-structured network; with tree structure the exact
/// posterior factors along the sampling order.
pub const TREE7: &str = include_str!("../data/tree7.json");
pub const TREE7_EVIDENCE: &str = include_str!("../data/tree7_evidence.json");
/// Exact `Pr(X_i | parents, e)` tables for [`TREE7`] under [`TREE7_EVIDENCE`].
pub const TREE7_POSTERIOR_ICPT: &str = include_str!("../data/tree7_posterior.icpt.json");
/// Default Sobol initial direction numbers, produced by
/// `qmcbn dirnums --n-dimension 337 --seed 2001`.
pub const SOBOL_DIRECTION_NUMBERS: &str = include_str!("../data/sobol_dirnums.txt");
/// Seed used to produce [`SOBOL_DIRECTION_NUMBERS`].
pub const SOBOL_DIRECTION_SEED: u64 = 2001;
