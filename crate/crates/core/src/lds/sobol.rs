//! Sobol points from primitive polynomials over GF(2).
//!
//! Direction numbers are kept as `w`-bit integers `V_i = v_i * 2^w`, so the
//! recurrence and the point construction are exact integer XORs. Bit 0 of the
//! point index selects `V_1`.
//!
//! Dimension 1 is the van der Corput dimension (`V_i = 2^(w-i)`), encoded as
//! degree 0 with no initial integers. Dimension `j >= 2` uses entry `j - 1` of the
//! embedded primitive polynomial table, so the first polynomial, `x + 1`, drives
//! dimension 2.

use alloc::vec::Vec;

use super::point::check_out_len;
use super::poly_table::PRIMITIVE_POLYNOMIALS;
use super::{NumberStream, UnitPoint};
use crate::{Error, Result};

/// Bits of precision in a direction integer.
pub const SOBOL_BITS: u32 = 32;

/// Dimensions covered by the van der Corput dimension plus the polynomial table.
pub const MAX_SOBOL_DIMENSION: usize = PRIMITIVE_POLYNOMIALS.len() + 1;

const SCALE: f64 = 1.0 / 4_294_967_296.0;

/// `(degree, interior bits)` of the polynomial assigned to dimension `dim`
/// (1-based). Dimension 1 reports `(0, 0)`.
pub fn dimension_polynomial(dim: usize) -> Option<(u32, u32)> {
    match dim {
        0 => None,
        1 => Some((0, 0)),
        _ => {
            let (q, bits) = *PRIMITIVE_POLYNOMIALS.get(dim - 2)?;
            Some((u32::from(q), u32::from(bits)))
        }
    }
}

fn in_table(degree: u32, bits: u32) -> bool {
    PRIMITIVE_POLYNOMIALS
        .iter()
        .any(|&(q, a)| u32::from(q) == degree && u32::from(a) == bits)
}

/// Primitive polynomial and initial direction integers `m_1..m_q` for one dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SobolDimensionParams {
    degree: u32,
    poly_bits: u32,
    initial: Vec<u32>,
}

impl SobolDimensionParams {
    /// `poly_bits` encodes `a_1..a_{q-1}` with `a_1` in the most significant
    /// position. Each `m_i` must be odd with `m_i < 2^i`. Degree 0 (with no
    /// bits and no initial integers) is the van der Corput dimension.
    pub fn new(degree: u32, poly_bits: u32, initial: Vec<u32>) -> Result<Self> {
        if degree == 0 {
            if poly_bits != 0 || !initial.is_empty() {
                return Err(Error::InvalidParams(
                    "the degree-0 dimension takes no polynomial bits or initial integers".into(),
                ));
            }
            return Ok(Self::van_der_corput());
        }
        if degree > SOBOL_BITS {
            return Err(Error::InvalidParams(alloc::format!("degree {degree} out of range")));
        }
        if u64::from(poly_bits) >= 1u64 << (degree - 1) {
            return Err(Error::InvalidParams(alloc::format!(
                "polynomial bits {poly_bits} do not fit degree {degree}"
            )));
        }
        if !in_table(degree, poly_bits) {
            return Err(Error::InvalidParams(alloc::format!(
                "degree {degree} polynomial with bits {poly_bits} is not in the primitive polynomial table"
            )));
        }
        if initial.len() != degree as usize {
            return Err(Error::InvalidParams(alloc::format!(
                "expected {degree} initial integers, got {}",
                initial.len()
            )));
        }
        for (i, &m) in initial.iter().enumerate() {
            let bound = 1u64 << (i + 1);
            if m % 2 == 0 || u64::from(m) >= bound {
                return Err(Error::InvalidParams(alloc::format!(
                    "m_{} = {m} must be odd and below {bound}",
                    i + 1
                )));
            }
        }
        Ok(SobolDimensionParams { degree, poly_bits, initial })
    }

    pub fn van_der_corput() -> Self {
        SobolDimensionParams { degree: 0, poly_bits: 0, initial: Vec::new() }
    }

    /// Uses the polynomial assigned to dimension `dim` (1-based).
    pub fn for_dimension(dim: usize, initial: Vec<u32>) -> Result<Self> {
        let (q, bits) = dimension_polynomial(dim)
            .ok_or(Error::UnsupportedDimension { requested: dim, max: MAX_SOBOL_DIMENSION })?;
        Self::new(q, bits, initial)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly_bits(&self) -> u32 {
        self.poly_bits
    }

    pub fn initial(&self) -> &[u32] {
        &self.initial
    }

    /// Coefficient `a_k`, `1 <= k < q`.
    fn coeff(&self, k: u32) -> bool {
        (self.poly_bits >> (self.degree - 1 - k)) & 1 == 1
    }
}

/// Expands the initial integers into `w_bits` direction integers `V_i = v_i * 2^w`.
pub fn expand_direction_numbers(params: &SobolDimensionParams, w_bits: u32) -> Result<Vec<u32>> {
    let q = params.degree as usize;
    if w_bits < params.degree.max(1) || w_bits > SOBOL_BITS {
        return Err(Error::InvalidParams(alloc::format!(
            "precision {w_bits} must lie in [{q}, {SOBOL_BITS}]"
        )));
    }
    let w = w_bits as usize;
    if q == 0 {
        return Ok((1..=w).map(|i| 1u32 << (w - i)).collect());
    }
    let mut v = Vec::with_capacity(w);
    for (i, &m) in params.initial.iter().enumerate() {
        v.push(m << (w - 1 - i));
    }
    for i in q..w {
        let back = v[i - q];
        let mut vi = back ^ (back >> q);
        for k in 1..q {
            if params.coeff(k as u32) {
                vi ^= v[i - k];
            }
        }
        v.push(vi);
    }
    Ok(v)
}

/// Expanded 32-bit direction integers, one row per dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionTable {
    rows: Vec<[u32; SOBOL_BITS as usize]>,
}

impl DirectionTable {
    pub fn new(params: &[SobolDimensionParams]) -> Result<Self> {
        let rows = params
            .iter()
            .map(|p| {
                let v = expand_direction_numbers(p, SOBOL_BITS)?;
                let mut row = [0u32; SOBOL_BITS as usize];
                row.copy_from_slice(&v);
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DirectionTable { rows })
    }

    pub fn dimensions(&self) -> usize {
        self.rows.len()
    }

    pub fn w_bits(&self) -> u32 {
        SOBOL_BITS
    }

    /// Direction integers of dimension `dim` (0-based).
    pub fn row(&self, dim: usize) -> &[u32; SOBOL_BITS as usize] {
        &self.rows[dim]
    }

    fn check_dims(&self, d: usize) -> Result<()> {
        if d == 0 || d > self.rows.len() {
            return Err(Error::UnsupportedDimension { requested: d, max: self.rows.len() });
        }
        Ok(())
    }
}

/// Largest index a 32-bit table can address.
const LAST_INDEX: u64 = (1u64 << SOBOL_BITS) - 1;

/// Point `n` of the Sobol sequence by the direct XOR formula.
pub fn sobol_direct_point(n: u64, table: &DirectionTable, d: usize) -> Result<UnitPoint> {
    if n == 0 {
        return Err(Error::InvalidArgument("Sobol indices start at 1".into()));
    }
    if n > LAST_INDEX {
        return Err(Error::IndexOverflow { index: n, limit: LAST_INDEX });
    }
    table.check_dims(d)?;
    let coords = table.rows[..d]
        .iter()
        .map(|row| {
            let x = (0..SOBOL_BITS as usize)
                .filter(|&b| (n >> b) & 1 == 1)
                .fold(0u32, |acc, b| acc ^ row[b]);
            f64::from(x) * SCALE
        })
        .collect();
    Ok(UnitPoint::from_checked(coords))
}

/// Gray-code (Antonov-Saleev) Sobol stream: each step flips one direction integer.
///
/// The `n`th emitted point (n >= 1) is the direct-formula point at index
/// `n ^ (n >> 1)`, so any block of indices `1..2^k` is visited as a set.
#[derive(Debug, Clone)]
pub struct SobolStream {
    rows: Vec<[u32; SOBOL_BITS as usize]>,
    state: Vec<u32>,
    emitted: u64,
}

impl SobolStream {
    pub fn new(table: &DirectionTable, d: usize) -> Result<Self> {
        table.check_dims(d)?;
        Ok(SobolStream {
            rows: table.rows[..d].to_vec(),
            state: alloc::vec![0; d],
            emitted: 0,
        })
    }

    /// Number of points emitted so far.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    /// Advances and returns the raw integer coordinates (`x * 2^32`).
    pub fn next_raw(&mut self) -> Result<&[u32]> {
        if self.emitted >= LAST_INDEX {
            return Err(Error::SequenceExhausted { capacity: LAST_INDEX });
        }
        let bit = self.emitted.trailing_ones() as usize;
        for (s, row) in self.state.iter_mut().zip(&self.rows) {
            *s ^= row[bit];
        }
        self.emitted += 1;
        Ok(&self.state)
    }
}

impl NumberStream for SobolStream {
    fn dimension(&self) -> usize {
        self.rows.len()
    }

    fn fill_next(&mut self, out: &mut [f64]) -> Result<()> {
        check_out_len(out, self.rows.len())?;
        let raw = self.next_raw()?;
        for (o, &x) in out.iter_mut().zip(raw) {
            *o = f64::from(x) * SCALE;
        }
        Ok(())
    }
}
