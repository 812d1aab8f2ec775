//! Point files: one point per line, coordinates separated by whitespace.

use std::fmt::Write as _;

use qmcbn_core::UnitPoint;

use crate::error::{Error, Result};

pub fn parse_points(text: &str) -> Result<Vec<UnitPoint>> {
    let mut out: Vec<UnitPoint> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |m: String| Error::Format { what: "point file", at: format!("line {}", i + 1), message: m };
        let coords = line
            .split_whitespace()
            .map(|s| s.parse::<f64>().map_err(|e| bad(format!("`{s}`: {e}"))))
            .collect::<Result<Vec<f64>>>()?;
        if let Some(first) = out.first() {
            if first.dim() != coords.len() {
                return Err(bad(format!("{} coordinates, expected {}", coords.len(), first.dim())));
            }
        }
        out.push(UnitPoint::new(coords).map_err(|e| bad(e.to_string()))?);
    }
    Ok(out)
}

/// Shortest round-tripping decimal for each coordinate.
pub fn format_points(points: &[UnitPoint]) -> String {
    let mut s = String::new();
    for p in points {
        for (j, x) in p.coords().iter().enumerate() {
            if j > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{x}");
        }
        s.push('\n');
    }
    s
}
