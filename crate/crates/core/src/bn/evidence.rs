use alloc::collections::BTreeMap;
use alloc::format;

use super::BayesNet;
use crate::{Error, Result};

/// Observed states, keyed by node index.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Evidence {
    assignments: BTreeMap<usize, usize>,
}

impl Evidence {
    pub fn new() -> Self {
        Evidence::default()
    }

    /// Observes node `id` in the state named `state`.
    pub fn observe(&mut self, net: &BayesNet, id: &str, state: &str) -> Result<()> {
        let node = net
            .node_index(id)
            .ok_or_else(|| Error::InvalidInput(format!("evidence names unknown node `{id}`")))?;
        let s = net.node(node).state_index(state).ok_or_else(|| {
            Error::InvalidInput(format!("node `{id}` has no state `{state}`"))
        })?;
        self.assignments.insert(node, s);
        Ok(())
    }

    /// Observes node index `node` in state index `state`.
    pub fn observe_index(&mut self, net: &BayesNet, node: usize, state: usize) -> Result<()> {
        if node >= net.len() || state >= net.node(node).cardinality() {
            return Err(Error::InvalidInput(format!(
                "evidence ({node}, {state}) is out of range"
            )));
        }
        self.assignments.insert(node, state);
        Ok(())
    }

    pub fn get(&self, node: usize) -> Option<usize> {
        self.assignments.get(&node).copied()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.assignments.contains_key(&node)
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    /// `(node, state)` pairs in ascending node order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.assignments.iter().map(|(&n, &s)| (n, s))
    }

    /// Rejects evidence built for a different network.
    pub fn check(&self, net: &BayesNet) -> Result<()> {
        for (n, s) in self.iter() {
            if n >= net.len() || s >= net.node(n).cardinality() {
                return Err(Error::InvalidInput(format!(
                    "evidence ({n}, {s}) does not fit network `{}`",
                    net.name()
                )));
            }
        }
        Ok(())
    }
}
