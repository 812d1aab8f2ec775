use alloc::vec::Vec;

/// Per-node distributions, aligned with the network's node order.
#[derive(Debug, Clone, PartialEq)]
pub struct MarginalSet {
    per_node: Vec<Vec<f64>>,
    prob_evidence: Option<f64>,
}

impl MarginalSet {
    pub fn new(per_node: Vec<Vec<f64>>, prob_evidence: Option<f64>) -> Self {
        MarginalSet { per_node, prob_evidence }
    }

    pub fn node(&self, i: usize) -> &[f64] {
        &self.per_node[i]
    }

    pub fn per_node(&self) -> &[Vec<f64>] {
        &self.per_node
    }

    pub fn len(&self) -> usize {
        self.per_node.len()
    }

    pub fn is_empty(&self) -> bool {
        self.per_node.is_empty()
    }

    /// `Pr(E = e)`, when known.
    pub fn prob_evidence(&self) -> Option<f64> {
        self.prob_evidence
    }

    /// Largest absolute entry-wise difference; `None` when the shapes differ.
    pub fn max_abs_diff(&self, other: &MarginalSet) -> Option<f64> {
        if self.per_node.len() != other.per_node.len() {
            return None;
        }
        let mut worst = 0.0f64;
        for (a, b) in self.per_node.iter().zip(&other.per_node) {
            if a.len() != b.len() {
                return None;
            }
            for (x, y) in a.iter().zip(b) {
                worst = worst.max(libm::fabs(x - y));
            }
        }
        Some(worst)
    }
}
