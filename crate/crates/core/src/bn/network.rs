use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, NetworkFault, Result};

/// Row sums further than this from 1 are rejected on input.
pub const PARSE_ROW_TOLERANCE: f64 = 1e-6;
/// Row sums are within this of 1 once a network is built.
pub const ROW_TOLERANCE: f64 = 1e-9;

/// A node as written in a network file: parents by id, CPT as nested rows.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSpec {
    pub id: String,
    pub states: Vec<String>,
    pub parents: Vec<String>,
    pub cpt: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    id: String,
    states: Vec<String>,
    parents: Vec<usize>,
    /// Row-major, one row of `states.len()` entries per parent configuration.
    cpt: Vec<f64>,
}

impl Node {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn cardinality(&self) -> usize {
        self.states.len()
    }

    /// Parent node indices, in declaration order.
    pub fn parents(&self) -> &[usize] {
        &self.parents
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    pub fn row_count(&self) -> usize {
        self.cpt.len() / self.states.len()
    }

    pub fn row(&self, config: usize) -> &[f64] {
        let k = self.states.len();
        &self.cpt[config * k..(config + 1) * k]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.cpt.chunks_exact(self.states.len())
    }
}

/// An immutable, validated network.
#[derive(Debug, Clone, PartialEq)]
pub struct BayesNet {
    name: String,
    nodes: Vec<Node>,
    order: Vec<usize>,
    index: BTreeMap<String, usize>,
}

fn fault(fault: NetworkFault, at: String, detail: String) -> Error {
    Error::Network { fault, at, detail }
}

fn node_at(i: usize, id: &str) -> String {
    format!("node #{i} `{id}`")
}

impl BayesNet {
    /// Validates and builds a network. Rows whose sums are within
    /// [`PARSE_ROW_TOLERANCE`] of 1 are renormalized; rows already within
    /// [`ROW_TOLERANCE`] are kept bit-for-bit, so rebuilding from
    /// [`to_specs`](Self::to_specs) is the identity.
    pub fn new(name: impl Into<String>, specs: Vec<NodeSpec>) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, s) in specs.iter().enumerate() {
            if index.insert(s.id.clone(), i).is_some() {
                return Err(fault(NetworkFault::DuplicateId, node_at(i, &s.id), "id already used".into()));
            }
        }

        let mut nodes = Vec::with_capacity(specs.len());
        for (i, s) in specs.iter().enumerate() {
            let at = || node_at(i, &s.id);
            if s.states.len() < 2 {
                return Err(fault(NetworkFault::BadStates, at(), "needs at least two states".into()));
            }
            let distinct: BTreeSet<&String> = s.states.iter().collect();
            if distinct.len() != s.states.len() {
                return Err(fault(NetworkFault::BadStates, at(), "state names repeat".into()));
            }
            let mut parents = Vec::with_capacity(s.parents.len());
            for p in &s.parents {
                let &pi = index.get(p).ok_or_else(|| {
                    fault(NetworkFault::UnknownParent, at(), format!("unknown parent `{p}`"))
                })?;
                if pi == i {
                    return Err(fault(NetworkFault::BadParents, at(), "node lists itself as parent".into()));
                }
                if parents.contains(&pi) {
                    return Err(fault(NetworkFault::BadParents, at(), format!("parent `{p}` repeats")));
                }
                parents.push(pi);
            }
            let rows: usize = parents.iter().map(|&p| specs[p].states.len()).product();
            if s.cpt.len() != rows {
                return Err(fault(
                    NetworkFault::RowCount,
                    at(),
                    format!("expected {rows} CPT rows, found {}", s.cpt.len()),
                ));
            }
            let k = s.states.len();
            let mut cpt = Vec::with_capacity(rows * k);
            for (r, row) in s.cpt.iter().enumerate() {
                let at_row = || format!("{}, row {r}", at());
                if row.len() != k {
                    return Err(fault(
                        NetworkFault::RowLength,
                        at_row(),
                        format!("expected {k} entries, found {}", row.len()),
                    ));
                }
                if let Some(bad) = row.iter().find(|x| !x.is_finite() || **x < 0.0) {
                    return Err(fault(NetworkFault::BadProbability, at_row(), format!("entry {bad}")));
                }
                let sum: f64 = row.iter().sum();
                if libm::fabs(sum - 1.0) > PARSE_ROW_TOLERANCE {
                    return Err(fault(NetworkFault::RowSum, at_row(), format!("row sums to {sum}")));
                }
                if libm::fabs(sum - 1.0) > ROW_TOLERANCE {
                    cpt.extend(row.iter().map(|x| x / sum));
                } else {
                    cpt.extend_from_slice(row);
                }
            }
            nodes.push(Node { id: s.id.clone(), states: s.states.clone(), parents, cpt });
        }

        let order = topological(&nodes).ok_or_else(|| {
            fault(NetworkFault::Cycle, "network".into(), "parent links form a cycle".into())
        })?;
        Ok(BayesNet { name: name.into(), nodes, order, index })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Node {
        &self.nodes[i]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Node indices with every node after its parents; ties go to the node
    /// declared first.
    pub fn topological_order(&self) -> &[usize] {
        &self.order
    }

    pub fn topological_ids(&self) -> Vec<&str> {
        self.order.iter().map(|&i| self.nodes[i].id.as_str()).collect()
    }

    /// CPT row of `node` selected by the parent states in `assignment`.
    pub fn parent_config(&self, node: usize, assignment: &[usize]) -> usize {
        let n = &self.nodes[node];
        n.parents
            .iter()
            .fold(0, |acc, &p| acc * self.nodes[p].cardinality() + assignment[p])
    }

    /// Product of the CPT entries selected by a full instantiation.
    pub fn joint_probability(&self, assignment: &[usize]) -> Result<f64> {
        if assignment.len() != self.nodes.len() {
            return Err(Error::InvalidInput(format!(
                "assignment covers {} of {} nodes",
                assignment.len(),
                self.nodes.len()
            )));
        }
        if let Some((i, &s)) = assignment
            .iter()
            .enumerate()
            .find(|&(i, &s)| s >= self.nodes[i].cardinality())
        {
            return Err(Error::InvalidInput(format!(
                "state {s} out of range for node `{}`",
                self.nodes[i].id
            )));
        }
        Ok(self.joint_unchecked(assignment))
    }

    pub(crate) fn joint_unchecked(&self, assignment: &[usize]) -> f64 {
        (0..self.nodes.len())
            .map(|i| self.nodes[i].row(self.parent_config(i, assignment))[assignment[i]])
            .product()
    }

    /// Canonical node specs: declaration order, normalized rows.
    pub fn to_specs(&self) -> Vec<NodeSpec> {
        self.nodes
            .iter()
            .map(|n| NodeSpec {
                id: n.id.clone(),
                states: n.states.clone(),
                parents: n.parents.iter().map(|&p| self.nodes[p].id.clone()).collect(),
                cpt: n.rows().map(<[f64]>::to_vec).collect(),
            })
            .collect()
    }

    /// Size of the full joint state space.
    pub fn state_space(&self) -> u128 {
        self.nodes.iter().map(|n| n.cardinality() as u128).product()
    }
}

/// Kahn's algorithm, always releasing the lowest-index ready node.
fn topological(nodes: &[Node]) -> Option<Vec<usize>> {
    let mut pending: Vec<usize> = nodes.iter().map(|n| n.parents.len()).collect();
    let mut children = alloc::vec![Vec::new(); nodes.len()];
    for (i, n) in nodes.iter().enumerate() {
        for &p in &n.parents {
            children[p].push(i);
        }
    }
    let mut ready: BTreeSet<usize> = (0..nodes.len()).filter(|&i| pending[i] == 0).collect();
    let mut order = Vec::with_capacity(nodes.len());
    while let Some(i) = ready.pop_first() {
        order.push(i);
        for &c in &children[i] {
            pending[c] -= 1;
            if pending[c] == 0 {
                ready.insert(c);
            }
        }
    }
    (order.len() == nodes.len()).then_some(order)
}
