//! Thermal quantum correlations of two spins: concurrence, entanglement of
//! formation, quantum discord, classical correlations and the CHSH value, for
//! a pair in the infinite transverse-field XY chain and for the two-qubit
//! Heisenberg model.
//!
//! Start with [`xy::two_site_state`] or [`heisenberg::thermal_state`] and feed
//! the result to [`measures::report()`]. The `examples/` directory has one
//! runnable program per capability.
//!
//! ```
//! use spincorr::measures::report;
//! use spincorr::xy::{two_site_state, Separation, XYParams};
//!
//! let rho = two_site_state(&XYParams::equilibrium(0.5, 0.6, 0.0, Separation::Finite(1))?)?;
//! let r = report(&rho)?;
//! assert!(r.discord > r.eof && r.eof > 0.0);
//! # Ok::<(), spincorr::Error>(())
//! ```

// `!(x >= 0.0)` is how domain checks reject NaN along with negatives
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod ed;
pub mod elliptic;
pub mod error;
pub mod heisenberg;
pub mod matrix;
pub mod measures;
pub mod optimize;
pub mod quadrature;
pub mod scan;
pub mod xy;

pub use error::{Error, Result};
