use alloc::vec::Vec;

use super::{BayesNet, Evidence, MarginalSet};
use crate::{Error, Result};

/// Cost guard on the full joint state space.
pub const BRUTE_FORCE_MAX_CONFIGURATIONS: u128 = 1 << 24;

/// Exact posterior marginals and `Pr(E = e)` by summing the joint over every
/// instantiation consistent with the evidence.
pub fn brute_force_marginals(net: &BayesNet, evidence: &Evidence) -> Result<MarginalSet> {
    evidence.check(net)?;
    let space = net.state_space();
    if space > BRUTE_FORCE_MAX_CONFIGURATIONS {
        return Err(Error::TooLarge { configurations: space, limit: BRUTE_FORCE_MAX_CONFIGURATIONS });
    }
    let n = net.len();
    let free: Vec<usize> = (0..n).filter(|&i| !evidence.contains(i)).collect();
    let mut assignment: Vec<usize> = (0..n).map(|i| evidence.get(i).unwrap_or(0)).collect();
    let mut sums: Vec<Vec<f64>> = net.nodes().iter().map(|nd| alloc::vec![0.0; nd.cardinality()]).collect();
    let mut total = 0.0;

    loop {
        let p = net.joint_unchecked(&assignment);
        total += p;
        for (i, s) in sums.iter_mut().enumerate() {
            s[assignment[i]] += p;
        }
        // odometer over the non-evidence nodes
        let mut k = 0;
        loop {
            if k == free.len() {
                return finish(sums, total);
            }
            let i = free[k];
            assignment[i] += 1;
            if assignment[i] < net.node(i).cardinality() {
                break;
            }
            assignment[i] = 0;
            k += 1;
        }
    }
}

fn finish(sums: Vec<Vec<f64>>, total: f64) -> Result<MarginalSet> {
    if total <= 0.0 {
        return Err(Error::ImpossibleEvidence);
    }
    let per_node = sums
        .into_iter()
        .map(|v| v.into_iter().map(|x| x / total).collect())
        .collect();
    Ok(MarginalSet::new(per_node, Some(total)))
}
