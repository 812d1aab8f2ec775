use alloc::vec::Vec;

use crate::{Error, Result};

/// Points of the unit square, every coordinate in `[0, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet2D {
    points: Vec<(f64, f64)>,
}

impl PointSet2D {
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidInput("point set is empty".into()));
        }
        let unit = 0.0..1.0;
        if let Some((i, p)) = points
            .iter()
            .enumerate()
            .find(|(_, (x, y))| !unit.contains(x) || !unit.contains(y))
        {
            return Err(Error::InvalidInput(alloc::format!(
                "point {i} = ({}, {}) lies outside [0, 1)^2",
                p.0,
                p.1
            )));
        }
        Ok(PointSet2D { points })
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn deviation_sum(counts: &[u32], n: usize, m: usize) -> f64 {
    let ideal = n as f64 / (m * m) as f64;
    counts.iter().map(|&c| libm::fabs(f64::from(c) - ideal)).sum()
}

/// Sum over the `m x m` grid cells of `|count - N / m^2|`. A point `(x, y)`
/// falls in cell `(floor(x m), floor(y m))`.
pub fn cell_uniformity(ps: &PointSet2D, m: usize) -> Result<f64> {
    if m == 0 {
        return Err(Error::InvalidArgument("grid needs at least one division".into()));
    }
    let mut counts = alloc::vec![0u32; m * m];
    for &(x, y) in &ps.points {
        let cx = libm::floor(x * m as f64) as usize;
        let cy = libm::floor(y * m as f64) as usize;
        counts[cx * m + cy] += 1;
    }
    Ok(deviation_sum(&counts, ps.len(), m))
}

/// Same measure over raw 32-bit Sobol coordinates (`x = raw / 2^32`). `counts`
/// is scratch space of length `m * m`.
pub(crate) fn cell_uniformity_raw(xs: &[u32], ys: &[u32], m: usize, counts: &mut [u32]) -> f64 {
    counts.fill(0);
    for (&x, &y) in xs.iter().zip(ys) {
        let cx = ((u64::from(x) * m as u64) >> 32) as usize;
        let cy = ((u64::from(y) * m as u64) >> 32) as usize;
        counts[cx * m + cy] += 1;
    }
    deviation_sum(counts, xs.len(), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn one_point_per_cell() {
        let ps = PointSet2D::new(vec![(0.25, 0.25), (0.25, 0.75), (0.75, 0.25), (0.75, 0.75)])
            .unwrap();
        assert_eq!(cell_uniformity(&ps, 2).unwrap(), 0.0);
    }

    #[test]
    fn all_points_in_one_cell() {
        for n in [1usize, 4, 7, 40] {
            let ps = PointSet2D::new(vec![(0.1, 0.2); n]).unwrap();
            assert_eq!(cell_uniformity(&ps, 2).unwrap(), 1.5 * n as f64);
            assert_eq!(cell_uniformity(&ps, 1).unwrap(), 0.0);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(PointSet2D::new(vec![]).is_err());
        assert!(PointSet2D::new(vec![(1.0, 0.5)]).is_err());
        assert!(PointSet2D::new(vec![(0.5, -0.0001)]).is_err());
        let ps = PointSet2D::new(vec![(0.5, 0.5)]).unwrap();
        assert!(cell_uniformity(&ps, 0).is_err());
    }

    #[test]
    fn raw_and_float_paths_agree() {
        let xs: Vec<u32> = (0..500u32).map(|i| i.wrapping_mul(2_654_435_761)).collect();
        let ys: Vec<u32> = (0..500u32).map(|i| i.wrapping_mul(40_503).rotate_left(7)).collect();
        let scale = 1.0 / 4_294_967_296.0;
        let ps = PointSet2D::new(
            xs.iter().zip(&ys).map(|(&x, &y)| (f64::from(x) * scale, f64::from(y) * scale)).collect(),
        )
        .unwrap();
        for m in [1usize, 2, 3, 7, 16, 32] {
            let mut counts = vec![0; m * m];
            assert_eq!(cell_uniformity_raw(&xs, &ys, m, &mut counts), cell_uniformity(&ps, m).unwrap());
        }
    }
}
