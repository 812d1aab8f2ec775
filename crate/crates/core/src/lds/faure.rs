use alloc::vec::Vec;

use super::point::check_out_len;
use super::primes::first_prime_geq;
use super::radical::ratio_to_unit;
use super::{NumberStream, UnitPoint};
use crate::{Error, Result};

/// Default capacity used to size the digit expansion.
pub const FAURE_DEFAULT_MAX_POINTS: u64 = 1 << 20;

/// Base, digit count and the Pascal matrix mod p of a Faure sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaureParams {
    prime: u64,
    digits: usize,
    /// Row-major `digits x digits`; entry `(l, j)` is `binomial(l, j) mod prime`.
    pascal: Vec<u64>,
}

impl FaureParams {
    /// Base is the smallest prime `>= d`; the digit count `m` is the smallest
    /// with `prime^m >= max_points`.
    pub fn new(d: usize, max_points: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("Faure dimension must be at least 1".into()));
        }
        let prime = first_prime_geq(d as u64);
        let mut digits = 1usize;
        let mut capacity = u128::from(prime);
        while capacity < u128::from(max_points) {
            capacity *= u128::from(prime);
            digits += 1;
        }
        if capacity > u128::from(u64::MAX) {
            return Err(Error::InvalidArgument(alloc::format!(
                "capacity {prime}^{digits} exceeds 64-bit indices"
            )));
        }
        let mut pascal = alloc::vec![0u64; digits * digits];
        for l in 0..digits {
            pascal[l * digits] = 1;
            for j in 1..=l {
                let above = pascal[(l - 1) * digits + j - 1] + pascal[(l - 1) * digits + j];
                pascal[l * digits + j] = above % prime;
            }
        }
        Ok(FaureParams { prime, digits, pascal })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    /// `binomial(l, j) mod prime` for `j <= l < digits`, zero above the diagonal.
    pub fn pascal(&self, l: usize, j: usize) -> u64 {
        self.pascal[l * self.digits + j]
    }

    /// `prime^digits`; valid indices are `0..capacity`.
    pub fn capacity(&self) -> u64 {
        self.prime.pow(self.digits as u32)
    }

    fn fill(&self, n: u64, digits: &mut [u64], out: &mut [f64]) {
        let m = self.digits;
        let mut rest = n;
        for a in digits.iter_mut() {
            *a = rest % self.prime;
            rest /= self.prime;
        }
        let den = u128::from(self.capacity());
        for (i, coord) in out.iter_mut().enumerate() {
            if i > 0 {
                // a_j <- sum_{l >= j} C(l, j) a_l; entry j only reads l >= j,
                // so updating in ascending j order is safe.
                for j in 0..m {
                    let mut acc = 0u64;
                    for l in j..m {
                        acc = (acc + self.pascal[l * m + j] * digits[l]) % self.prime;
                    }
                    digits[j] = acc;
                }
            }
            let num = digits
                .iter()
                .fold(0u128, |acc, &a| acc * u128::from(self.prime) + u128::from(a));
            *coord = ratio_to_unit(num, den);
        }
    }

    fn check(&self, n: u64, d: usize) -> Result<()> {
        if d == 0 || d as u64 > self.prime {
            return Err(Error::UnsupportedDimension { requested: d, max: self.prime as usize });
        }
        if n >= self.capacity() {
            return Err(Error::IndexOverflow { index: n, limit: self.capacity() - 1 });
        }
        Ok(())
    }
}

/// Point `n` (0-based) of the `d`-dimensional Faure sequence.
pub fn faure_point(n: u64, params: &FaureParams, d: usize) -> Result<UnitPoint> {
    params.check(n, d)?;
    let mut digits = alloc::vec![0u64; params.digits];
    let mut coords = alloc::vec![0.0; d];
    params.fill(n, &mut digits, &mut coords);
    Ok(UnitPoint::from_checked(coords))
}

/// Faure stream starting at index 1.
#[derive(Debug, Clone)]
pub struct FaureStream {
    params: FaureParams,
    dim: usize,
    next_index: u64,
    digits: Vec<u64>,
}

impl FaureStream {
    pub fn new(dim: usize, max_points: u64) -> Result<Self> {
        let params = FaureParams::new(dim, max_points.saturating_add(1))?;
        let digits = alloc::vec![0; params.digits];
        Ok(FaureStream { params, dim, next_index: 1, digits })
    }

    pub fn params(&self) -> &FaureParams {
        &self.params
    }
}

impl NumberStream for FaureStream {
    fn dimension(&self) -> usize {
        self.dim
    }

    fn fill_next(&mut self, out: &mut [f64]) -> Result<()> {
        check_out_len(out, self.dim)?;
        if self.next_index >= self.params.capacity() {
            return Err(Error::SequenceExhausted { capacity: self.params.capacity() - 1 });
        }
        self.params.fill(self.next_index, &mut self.digits, out);
        self.next_index += 1;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lds::radical_inverse;

    #[test]
    fn params_shape() {
        let p = FaureParams::new(8, FAURE_DEFAULT_MAX_POINTS).unwrap();
        assert_eq!(p.prime(), 11);
        // 11^5 = 161051 < 2^20 <= 11^6
        assert_eq!(p.digits(), 6);
        let p2 = FaureParams::new(2, 16).unwrap();
        assert_eq!((p2.prime(), p2.digits()), (2, 4));
        assert_eq!(p2.pascal(2, 1), 0);
        assert_eq!(p2.pascal(3, 1), 1);
        assert_eq!(p2.pascal(1, 2), 0);
    }

    #[test]
    fn pascal_matches_binomials() {
        let p = FaureParams::new(5, 5u64.pow(9)).unwrap();
        let mut binom = [[0u64; 12]; 12];
        for l in 0..12 {
            binom[l][0] = 1;
            for j in 1..=l {
                binom[l][j] = binom[l - 1][j - 1] + binom[l - 1][j];
            }
        }
        for l in 0..p.digits() {
            for j in 0..=l {
                assert_eq!(p.pascal(l, j), binom[l][j] % 5, "({l}, {j})");
            }
        }
    }

    #[test]
    fn second_coordinate_by_hand() {
        let p = FaureParams::new(2, 16).unwrap();
        assert_eq!(faure_point(1, &p, 2).unwrap().coords(), &[0.5, 0.5]);
        // n = 2: digits (0, 1, 0, 0); transformed a_0 = C(1,0)*1 = 1, a_1 = 1.
        assert_eq!(faure_point(2, &p, 2).unwrap().coords(), &[0.25, 0.75]);
    }

    #[test]
    fn first_coordinate_is_radical_inverse() {
        let p = FaureParams::new(1, 16).unwrap();
        for n in 0..16 {
            assert_eq!(faure_point(n, &p, 1).unwrap()[0], radical_inverse(n, 2).unwrap());
        }
    }

    #[test]
    fn rejects_out_of_range() {
        let p = FaureParams::new(2, 16).unwrap();
        assert!(matches!(faure_point(16, &p, 1), Err(Error::IndexOverflow { .. })));
        assert!(matches!(faure_point(1, &p, 3), Err(Error::UnsupportedDimension { .. })));
        assert!(FaureParams::new(0, 16).is_err());
    }

    #[test]
    fn stream_matches_points() {
        let mut s = FaureStream::new(3, 1000).unwrap();
        for n in 1..=200 {
            assert_eq!(s.next_point().unwrap(), faure_point(n, s.params(), 3).unwrap());
        }
    }
}
