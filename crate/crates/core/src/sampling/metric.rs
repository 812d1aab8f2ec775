use crate::bn::{Evidence, MarginalSet};
use crate::{Error, Result};

/// Root mean squared difference over every state of every non-evidence node:
/// `sqrt( sum_i sum_j (est_ij - exact_ij)^2 / sum_i n_i )`.
pub fn rmse_metric(estimated: &MarginalSet, exact: &MarginalSet, evidence: &Evidence) -> Result<f64> {
    if estimated.len() != exact.len() {
        return Err(Error::InvalidInput(alloc::format!(
            "marginal sets cover {} and {} nodes",
            estimated.len(),
            exact.len()
        )));
    }
    let mut squares = 0.0;
    let mut states = 0usize;
    for i in (0..exact.len()).filter(|&i| !evidence.contains(i)) {
        let (a, b) = (estimated.node(i), exact.node(i));
        if a.len() != b.len() {
            return Err(Error::InvalidInput(alloc::format!(
                "node {i} has {} estimated and {} exact states",
                a.len(),
                b.len()
            )));
        }
        squares += a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>();
        states += a.len();
    }
    if states == 0 {
        return Err(Error::InvalidInput("no non-evidence nodes to compare".into()));
    }
    Ok(libm::sqrt(squares / states as f64))
}
