//! Quasi-Monte Carlo inference for discrete Bayesian networks.
//!
//! The crate is `no_std` and only needs `alloc`. It contains:
//!
//! * [`lds`]: Halton, Sobol (direct and Gray-code) and Faure generators.
//! * [`discrepancy`]: star discrepancy for small point sets, the grid-cell
//!   uniformity measure, and the random search for Sobol initial direction numbers.
//! * [`bn`]: network representation plus brute-force and variable-elimination oracles.
//! * [`sampling`]: logic sampling and importance sampling driven by any [`NumberStream`].
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bn;
pub mod discrepancy;
mod error;
pub mod lds;
pub mod sampling;

pub use error::{Error, NetworkFault, Result};
pub use lds::{NumberStream, UnitPoint};
