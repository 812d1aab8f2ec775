use alloc::vec::Vec;

use super::draw::draw_state;
use super::isf::ImportanceFunction;
use crate::bn::{BayesNet, Evidence, MarginalSet};
use crate::lds::NumberStream;
use crate::{Error, Result};

/// Outcome of one estimation run.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimationResult {
    /// Self-normalized estimates; evidence nodes get indicator vectors.
    pub marginals: MarginalSet,
    /// Unnormalized mean weight, an unbiased estimate of `Pr(E = e)`.
    pub prob_evidence_estimate: f64,
    pub samples_used: u64,
    pub weight_sum: f64,
    pub weight_sq_sum: f64,
}

/// Forward-samples every node in `order`, drawing node `order[j]` with `point[j]`.
pub fn logic_sample(net: &BayesNet, order: &[usize], point: &[f64]) -> Result<Vec<usize>> {
    if point.len() != net.len() || order.len() != net.len() {
        return Err(Error::InvalidInput(alloc::format!(
            "point has dimension {}, network has {} nodes",
            point.len(),
            net.len()
        )));
    }
    let mut placed = alloc::vec![false; net.len()];
    for &i in order {
        if i >= net.len() || placed[i] || net.node(i).parents().iter().any(|&p| !placed[p]) {
            return Err(Error::InvalidInput("order is not a parent-first permutation".into()));
        }
        placed[i] = true;
    }
    if let Some(u) = point.iter().find(|u| !(0.0..1.0).contains(*u)) {
        return Err(Error::InvalidInput(alloc::format!("coordinate {u} is outside [0, 1)")));
    }
    let mut assignment = alloc::vec![0; net.len()];
    for (&i, &u) in order.iter().zip(point) {
        let row = net.node(i).row(net.parent_config(i, &assignment));
        assignment[i] = draw_state(row, u);
    }
    Ok(assignment)
}

struct Accumulator {
    sums: Vec<Vec<f64>>,
    weight_sum: f64,
    weight_sq_sum: f64,
    samples: u64,
}

impl Accumulator {
    fn new(net: &BayesNet) -> Self {
        Accumulator {
            sums: net.nodes().iter().map(|n| alloc::vec![0.0; n.cardinality()]).collect(),
            weight_sum: 0.0,
            weight_sq_sum: 0.0,
            samples: 0,
        }
    }

    fn add(&mut self, assignment: &[usize], weight: f64) {
        for (s, &x) in self.sums.iter_mut().zip(assignment) {
            s[x] += weight;
        }
        self.weight_sum += weight;
        self.weight_sq_sum += weight * weight;
        self.samples += 1;
    }

    fn snapshot(&self) -> Result<EstimationResult> {
        if self.weight_sum <= 0.0 {
            return Err(Error::DegenerateEstimate);
        }
        let per_node = self
            .sums
            .iter()
            .map(|s| s.iter().map(|x| x / self.weight_sum).collect())
            .collect();
        let mean = self.weight_sum / self.samples as f64;
        Ok(EstimationResult {
            marginals: MarginalSet::new(per_node, Some(mean)),
            prob_evidence_estimate: mean,
            samples_used: self.samples,
            weight_sum: self.weight_sum,
            weight_sq_sum: self.weight_sq_sum,
        })
    }
}

fn check_checkpoints(checkpoints: &[u64]) -> Result<()> {
    if checkpoints.is_empty() || checkpoints[0] < 1 || checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput(
            "sample counts must be at least 1 and strictly increasing".into(),
        ));
    }
    Ok(())
}

fn check_dimension<S: NumberStream + ?Sized>(stream: &S, expected: usize) -> Result<()> {
    if stream.dimension() != expected {
        return Err(Error::InvalidInput(alloc::format!(
            "stream has dimension {}, sampler needs {expected}",
            stream.dimension()
        )));
    }
    Ok(())
}

/// Probabilistic logic sampling, reporting a result after each count in
/// `checkpoints` (a larger count extends the same stream).
pub fn pls_checkpoints<S: NumberStream + ?Sized>(
    net: &BayesNet,
    stream: &mut S,
    checkpoints: &[u64],
) -> Result<Vec<EstimationResult>> {
    check_checkpoints(checkpoints)?;
    check_dimension(stream, net.len())?;
    let order = net.topological_order();
    let mut point = alloc::vec![0.0; net.len()];
    let mut assignment = alloc::vec![0; net.len()];
    let mut acc = Accumulator::new(net);
    let mut out = Vec::with_capacity(checkpoints.len());
    for &target in checkpoints {
        while acc.samples < target {
            stream.fill_next(&mut point)?;
            for (&i, &u) in order.iter().zip(&point) {
                let row = net.node(i).row(net.parent_config(i, &assignment));
                assignment[i] = draw_state(row, u);
            }
            acc.add(&assignment, 1.0);
        }
        let mut r = acc.snapshot()?;
        r.prob_evidence_estimate = 1.0;
        out.push(r);
    }
    Ok(out)
}

/// Marginals as state frequencies over `n` logic samples (no evidence).
pub fn pls_estimate<S: NumberStream + ?Sized>(net: &BayesNet, stream: &mut S, n: u64) -> Result<EstimationResult> {
    if n < 1 {
        return Err(Error::InvalidInput("need at least one sample".into()));
    }
    Ok(pls_checkpoints(net, stream, &[n])?.pop().expect("one checkpoint"))
}

/// Importance sampling with checkpoints; see [`importance_estimate`].
pub fn importance_checkpoints<F, S>(
    net: &BayesNet,
    evidence: &Evidence,
    isf: &F,
    stream: &mut S,
    checkpoints: &[u64],
) -> Result<Vec<EstimationResult>>
where
    F: ImportanceFunction + ?Sized,
    S: NumberStream + ?Sized,
{
    check_checkpoints(checkpoints)?;
    evidence.check(net)?;
    let order = net.topological_order();
    check_dimension(stream, net.len() - evidence.len())?;
    let mut point = alloc::vec![0.0; stream.dimension()];
    let mut assignment: Vec<usize> = (0..net.len()).map(|i| evidence.get(i).unwrap_or(0)).collect();
    let mut acc = Accumulator::new(net);
    let mut out = Vec::with_capacity(checkpoints.len());
    for &target in checkpoints {
        while acc.samples < target {
            stream.fill_next(&mut point)?;
            let mut weight = 1.0;
            let mut coords = point.iter();
            for &i in order {
                let row = net.node(i).row(net.parent_config(i, &assignment));
                match evidence.get(i) {
                    Some(e) => weight *= row[e],
                    None => {
                        let u = *coords.next().expect("dimension checked");
                        let q = isf.distribution(i, &assignment);
                        let s = draw_state(q, u);
                        assignment[i] = s;
                        weight *= row[s] / q[s];
                    }
                }
            }
            acc.add(&assignment, weight);
        }
        out.push(acc.snapshot()?);
    }
    Ok(out)
}

/// Importance sampling estimate of `Pr(E = e)` and of the posterior marginals.
///
/// Each sample clamps the evidence, draws the remaining nodes from `isf` and
/// is weighted by `Pr(x, e) / Pr_isf(x)`. Marginals use self-normalized weights.
pub fn importance_estimate<F, S>(
    net: &BayesNet,
    evidence: &Evidence,
    isf: &F,
    stream: &mut S,
    n: u64,
) -> Result<EstimationResult>
where
    F: ImportanceFunction + ?Sized,
    S: NumberStream + ?Sized,
{
    if n < 1 {
        return Err(Error::InvalidInput("need at least one sample".into()));
    }
    Ok(importance_checkpoints(net, evidence, isf, stream, &[n])?.pop().expect("one checkpoint"))
}
