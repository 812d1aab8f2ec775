use crate::{Error, Result};

/// Inverts the cumulative distribution: returns the `k` with
/// `C_{k-1} <= u < C_k`. Zero-probability states are never returned.
pub fn draw_node_state(distribution: &[f64], u: f64) -> Result<usize> {
    if !(0.0..1.0).contains(&u) {
        return Err(Error::InvalidInput(alloc::format!("u = {u} is outside [0, 1)")));
    }
    if distribution.is_empty() {
        return Err(Error::InvalidInput("empty distribution".into()));
    }
    Ok(draw_state(distribution, u))
}

pub(crate) fn draw_state(distribution: &[f64], u: f64) -> usize {
    let mut cumulative = 0.0;
    for (k, &p) in distribution.iter().enumerate() {
        cumulative += p;
        if u < cumulative {
            return k;
        }
    }
    // Rounding left the total just below u: fall back to the last state that
    // carries probability.
    distribution.iter().rposition(|&p| p > 0.0).unwrap_or(distribution.len() - 1)
}
