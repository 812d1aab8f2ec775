use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bn::{BayesNet, Evidence, PARSE_ROW_TOLERANCE};
use crate::{Error, Result};

/// A sampling distribution `Pr_isf` over the non-evidence nodes, factored
/// along the topological order.
///
/// Implementations must put positive mass wherever the target
/// `Pr(X \ E, E = e)` is positive.
pub trait ImportanceFunction {
    /// Distribution for `node` given `assignment`, in which every node that
    /// precedes `node` in topological order (in particular its parents) is set.
    fn distribution(&self, node: usize, assignment: &[usize]) -> &[f64];
}

/// Samples each non-evidence node from its own CPT row.
#[derive(Debug, Clone, Copy)]
pub struct LikelihoodWeighting<'a> {
    net: &'a BayesNet,
}

pub fn likelihood_weighting_isf<'a>(net: &'a BayesNet, _evidence: &Evidence) -> LikelihoodWeighting<'a> {
    LikelihoodWeighting { net }
}

impl ImportanceFunction for LikelihoodWeighting<'_> {
    fn distribution(&self, node: usize, assignment: &[usize]) -> &[f64] {
        self.net.node(node).row(self.net.parent_config(node, assignment))
    }
}

/// Replacement CPTs for the non-evidence nodes, same shape as the originals.
#[derive(Debug, Clone)]
pub struct TableImportance<'a> {
    net: &'a BayesNet,
    /// Flattened rows per node; `None` for evidence nodes.
    tables: Vec<Option<Vec<f64>>>,
}

impl ImportanceFunction for TableImportance<'_> {
    fn distribution(&self, node: usize, assignment: &[usize]) -> &[f64] {
        let k = self.net.node(node).cardinality();
        let row = self.net.parent_config(node, assignment);
        let table = self.tables[node].as_ref().expect("only non-evidence nodes are sampled");
        &table[row * k..(row + 1) * k]
    }
}

/// Builds an importance function from replacement CPTs keyed by node id.
///
/// Every non-evidence node needs a table. Tables for evidence nodes are
/// accepted and ignored. A zero entry where the network's own CPT is positive
/// is rejected as a support violation.
pub fn load_isf_table<'a>(
    tables: &BTreeMap<String, Vec<Vec<f64>>>,
    net: &'a BayesNet,
    evidence: &Evidence,
) -> Result<TableImportance<'a>> {
    evidence.check(net)?;
    if let Some(id) = tables.keys().find(|id| net.node_index(id).is_none()) {
        return Err(Error::InvalidInput(format!("importance table names unknown node `{id}`")));
    }
    let mut out = alloc::vec![None; net.len()];
    for (i, node) in net.nodes().iter().enumerate() {
        if evidence.contains(i) {
            continue;
        }
        let rows = tables.get(node.id()).ok_or_else(|| {
            Error::ShapeMismatch(format!("no importance table for node `{}`", node.id()))
        })?;
        if rows.len() != node.row_count() {
            return Err(Error::ShapeMismatch(format!(
                "node `{}`: expected {} rows, found {}",
                node.id(),
                node.row_count(),
                rows.len()
            )));
        }
        let mut flat = Vec::with_capacity(rows.len() * node.cardinality());
        for (r, (row, target)) in rows.iter().zip(node.rows()).enumerate() {
            if row.len() != node.cardinality() {
                return Err(Error::ShapeMismatch(format!(
                    "node `{}` row {r}: expected {} entries, found {}",
                    node.id(),
                    node.cardinality(),
                    row.len()
                )));
            }
            if row.iter().any(|x| !x.is_finite() || *x < 0.0) {
                return Err(Error::InvalidInput(format!("node `{}` row {r}: bad probability", node.id())));
            }
            let sum: f64 = row.iter().sum();
            if libm::fabs(sum - 1.0) > PARSE_ROW_TOLERANCE {
                return Err(Error::InvalidInput(format!(
                    "node `{}` row {r}: sums to {sum}",
                    node.id()
                )));
            }
            if let Some(s) = (0..row.len()).find(|&s| row[s] == 0.0 && target[s] > 0.0) {
                return Err(Error::SupportViolation(format!(
                    "node `{}` row {r}: state `{}` has probability 0 but positive target mass",
                    node.id(),
                    node.states()[s]
                )));
            }
            flat.extend(row.iter().map(|x| x / sum));
        }
        out[i] = Some(flat);
    }
    Ok(TableImportance { net, tables: out })
}
