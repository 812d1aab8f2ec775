//! Direction-number files and the search candidate log.
//!
//! Each non-comment line reads `dim degree polyBits m1 .. mq`. Dimensions run
//! 1, 2, 3, ... without gaps; dimension 1 is `1 0 0`.

use std::fmt::Write as _;

use qmcbn_core::discrepancy::CandidateRecord;
use qmcbn_core::lds::{dimension_polynomial, SobolDimensionParams};

use crate::error::{Error, Result};

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::Format { what: "direction numbers", at: format!("line {line}"), message: message.into() }
}

pub fn parse_direction_numbers(text: &str) -> Result<Vec<SobolDimensionParams>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields = line
            .split_whitespace()
            .map(|f| f.parse::<u32>().map_err(|e| bad(line_no, format!("`{f}`: {e}"))))
            .collect::<Result<Vec<u32>>>()?;
        if fields.len() < 3 {
            return Err(bad(line_no, "expected `dim degree polyBits m1 .. mq`"));
        }
        let (dim, degree, bits) = (fields[0] as usize, fields[1], fields[2]);
        let expected = out.len() + 1;
        if dim != expected {
            return Err(bad(line_no, format!("dimension {dim} out of sequence (expected {expected})")));
        }
        match dimension_polynomial(dim) {
            Some(p) if p == (degree, bits) => {}
            Some((d, b)) => {
                return Err(bad(line_no, format!("dimension {dim} uses polynomial ({d}, {b}), found ({degree}, {bits})")))
            }
            None => return Err(bad(line_no, format!("dimension {dim} beyond the polynomial table"))),
        }
        let params = SobolDimensionParams::new(degree, bits, fields[3..].to_vec())
            .map_err(|e| bad(line_no, e.to_string()))?;
        out.push(params);
    }
    if out.is_empty() {
        return Err(bad(0, "no dimensions"));
    }
    Ok(out)
}

pub fn format_direction_numbers(params: &[SobolDimensionParams], header: &str) -> String {
    let mut s = String::new();
    for h in header.lines() {
        let _ = writeln!(s, "# {h}");
    }
    for (i, p) in params.iter().enumerate() {
        let _ = write!(s, "{} {} {}", i + 1, p.degree(), p.poly_bits());
        for m in p.initial() {
            let _ = write!(s, " {m}");
        }
        s.push('\n');
    }
    s
}

pub fn format_candidate_log(log: &[CandidateRecord]) -> String {
    let mut s = String::from("dim,candidateIndex,m1..mq,nErrorSum\n");
    for r in log {
        let _ = write!(s, "{},{}", r.dimension, r.candidate);
        for m in &r.initial {
            let _ = write!(s, ",{m}");
        }
        let _ = writeln!(s, ",{}", r.error_sum);
    }
    s
}

pub fn parse_candidate_log(text: &str) -> Result<Vec<CandidateRecord>> {
    let bad = |line: usize, m: String| Error::Format { what: "candidate log", at: format!("line {line}"), message: m };
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == "dim,candidateIndex,m1..mq,nErrorSum" => {}
        _ => return Err(bad(1, "missing header".into())),
    }
    let mut out = Vec::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() < 3 {
            return Err(bad(i + 1, "too few fields".into()));
        }
        let int = |s: &str| s.trim().parse::<usize>().map_err(|e| bad(i + 1, format!("`{s}`: {e}")));
        let initial = f[2..f.len() - 1]
            .iter()
            .map(|s| s.trim().parse::<u32>().map_err(|e| bad(i + 1, format!("`{s}`: {e}"))))
            .collect::<Result<Vec<u32>>>()?;
        let last = f[f.len() - 1];
        out.push(CandidateRecord {
            dimension: int(f[0])?,
            candidate: int(f[1])?,
            initial,
            error_sum: last.trim().parse().map_err(|e| bad(i + 1, format!("`{last}`: {e}")))?,
        });
    }
    Ok(out)
}
