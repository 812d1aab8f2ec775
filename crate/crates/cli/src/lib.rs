//! File formats, the convergence benchmark and helpers behind the `qmcbn`
//! command-line tool.

pub mod bench;
pub mod bundled;
pub mod dirnums;
mod error;
pub mod formats;
pub mod points;
pub mod report;

pub use error::{Error, Result};
