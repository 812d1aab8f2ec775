use alloc::vec::Vec;

use crate::{Error, Result, UnitPoint};

/// Largest point set accepted by [`star_discrepancy_exact`].
pub const STAR_DISCREPANCY_MAX_POINTS: usize = 1 << 12;

/// Exact star discrepancy of a one- or two-dimensional point set.
///
/// The supremum over anchored boxes `[0, v)` is attained (or approached) at
/// box corners whose coordinates are point coordinates or 1. At each such
/// corner the box either excludes its boundary (the volume exceeds the share
/// of points) or is approached from above so that it includes the boundary
/// (the share of points exceeds the volume); both cases are evaluated.
pub fn star_discrepancy_exact(points: &[UnitPoint]) -> Result<f64> {
    let n = points.len();
    if n == 0 {
        return Err(Error::InvalidInput("point set is empty".into()));
    }
    if n > STAR_DISCREPANCY_MAX_POINTS {
        return Err(Error::Unsupported(alloc::format!(
            "exact star discrepancy is limited to {STAR_DISCREPANCY_MAX_POINTS} points, got {n}"
        )));
    }
    let d = points[0].dim();
    if points.iter().any(|p| p.dim() != d) {
        return Err(Error::InvalidInput("points have mixed dimensions".into()));
    }
    match d {
        1 => Ok(one_dimensional(points.iter().map(|p| p[0]).collect())),
        2 => Ok(two_dimensional(points.iter().map(|p| (p[0], p[1])).collect())),
        _ => Err(Error::Unsupported(alloc::format!(
            "exact star discrepancy is only computed for d <= 2, got d = {d}"
        ))),
    }
}

fn one_dimensional(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    let worst = xs
        .iter()
        .enumerate()
        .map(|(i, &x)| libm::fabs(x - (2 * i + 1) as f64 / (2.0 * n)))
        .fold(0.0, f64::max);
    1.0 / (2.0 * n) + worst
}

fn two_dimensional(mut pts: Vec<(f64, f64)>) -> f64 {
    let n = pts.len();
    let nf = n as f64;
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut ys_grid: Vec<f64> = pts.iter().map(|p| p.1).collect();
    ys_grid.sort_by(f64::total_cmp);
    ys_grid.dedup();
    ys_grid.push(1.0);

    // y-coordinates of points with x below the current corner, kept sorted
    let mut active: Vec<f64> = Vec::with_capacity(n);
    let mut best = 0.0f64;

    let mut i = 0;
    while i <= n {
        let a = if i < n { pts[i].0 } else { 1.0 };

        // Open box [0, a) x [0, b): volume minus share.
        let mut k = 0;
        for &b in &ys_grid {
            while k < active.len() && active[k] < b {
                k += 1;
            }
            best = best.max(a * b - k as f64 / nf);
        }
        if i == n {
            break;
        }

        while i < n && pts[i].0 == a {
            let y = pts[i].1;
            let at = active.partition_point(|&v| v <= y);
            active.insert(at, y);
            i += 1;
        }

        // Closed box [0, a] x [0, b]: share minus volume.
        let mut k = 0;
        for &b in &ys_grid {
            while k < active.len() && active[k] <= b {
                k += 1;
            }
            best = best.max(k as f64 / nf - a * b);
        }
    }
    best
}
