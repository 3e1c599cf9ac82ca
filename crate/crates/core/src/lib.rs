//! Cryptographic indicators of Boolean functions and the distribution of the
//! absolute indicator of random functions.
//!
//! * [`function`]: packed truth tables and their `ascii01` / `raw` / `hex` encodings.
//! * [`spectra`]: Walsh and autocorrelation spectra, nonlinearity, absolute
//!   indicator and sum-of-squares, each with a naive cross-check.
//! * [`generators`]: seeded random, two-period and disturbed functions.
//! * [`randomness`]: the nonlinearity / absolute-indicator test for short bit sequences.
//! * [`experiments`]: exhaustive and Monte Carlo checks of the concentration bounds.
//! * [`cli`]: the `absind` command line.

pub mod cli;
pub mod error;
pub mod experiments;
pub mod function;
pub mod generators;
pub mod randomness;
pub mod real;
pub mod rng;
pub mod spectra;

pub use error::{Error, Result};
pub use function::{BooleanFunction, Format, PointIndex};
pub use rng::Seed;
