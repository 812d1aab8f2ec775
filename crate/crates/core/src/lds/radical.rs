use crate::{Error, Result};

/// Largest `f64` strictly below 1.
const BELOW_ONE: f64 = 1.0 - f64::EPSILON / 2.0;

/// Converts `num / den` (with `num < den`) to a coordinate in `[0, 1)` using a
/// single rounding step.
pub(crate) fn ratio_to_unit(num: u128, den: u128) -> f64 {
    debug_assert!(num < den);
    let x = num as f64 / den as f64;
    if x < 1.0 {
        x
    } else {
        BELOW_ONE
    }
}

/// Mirrors the base-`base` digits of `n` about the radix point.
///
/// ```
/// # use qmcbn_core::lds::radical_inverse;
/// assert_eq!(radical_inverse(5, 3).unwrap(), 7.0 / 9.0);
/// ```
pub fn radical_inverse(n: u64, base: u32) -> Result<f64> {
    if base < 2 {
        return Err(Error::InvalidArgument(alloc::format!(
            "radical inverse base must be at least 2, got {base}"
        )));
    }
    Ok(radical_inverse_unchecked(n, u64::from(base)))
}

pub(crate) fn radical_inverse_unchecked(mut n: u64, base: u64) -> f64 {
    let b = u128::from(base);
    let mut num: u128 = 0;
    let mut den: u128 = 1;
    while n > 0 {
        num = num * b + u128::from(n % base);
        den *= b;
        n /= base;
    }
    ratio_to_unit(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(radical_inverse(0, 2).unwrap(), 0.0);
        assert_eq!(radical_inverse(1, 2).unwrap(), 0.5);
        assert_eq!(radical_inverse(4, 2).unwrap(), 0.125);
        assert_eq!(radical_inverse(5, 3).unwrap(), 7.0 / 9.0);
        assert_eq!(radical_inverse(6, 2).unwrap(), 0.375);
    }

    #[test]
    fn rejects_small_base() {
        assert!(matches!(radical_inverse(3, 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(radical_inverse(3, 0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn extreme_index_stays_below_one() {
        for base in [2, 3, 5, 7, 97, 65_521] {
            let x = radical_inverse(u64::MAX, base).unwrap();
            assert!((0.0..1.0).contains(&x), "base {base}: {x}");
        }
    }

    #[test]
    fn each_elementary_interval_holds_one_point() {
        for (base, k) in [(2u64, 10u32), (3, 6), (5, 4), (7, 3), (11, 3)] {
            let n_points = base.pow(k);
            let edge = |j: u64| j as f64 / n_points as f64;
            let mut hits = alloc::vec![0u32; n_points as usize];
            for n in 0..n_points {
                let x = radical_inverse(n, base as u32).unwrap();
                let j = (0..n_points).filter(|&j| edge(j) <= x).count() - 1;
                assert!(x < edge(j as u64 + 1));
                hits[j] += 1;
            }
            assert!(hits.iter().all(|&h| h == 1), "base {base}^{k}");
        }
    }
}
