use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::spectra;

/// Enumeration covers `2^(2^n)` tables, so `n = 4` (65536 functions) is the cap.
pub const EXHAUSTIVE_MAX_VARIABLES: u32 = 4;

/// Exact distribution of the indicators over every function on `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExhaustiveDistribution {
    pub n: u32,
    pub functions: u64,
    /// Absolute indicator value -> number of functions.
    pub absolute_indicator: BTreeMap<u64, u64>,
    pub nonlinearity: BTreeMap<u64, u64>,
    pub sum_of_squares: BTreeMap<u128, u64>,
    pub absolute_indicator_total: u64,
    pub absolute_indicator_square_total: u128,
    pub sum_of_squares_total: u128,
}

impl ExhaustiveDistribution {
    /// `E[Δ(f)]`.
    pub fn mean_absolute_indicator(&self) -> f64 {
        self.absolute_indicator_total as f64 / self.functions as f64
    }

    /// Population standard deviation of `Δ(f)`.
    pub fn stddev_absolute_indicator(&self) -> f64 {
        let count = self.functions as f64;
        let mean = self.mean_absolute_indicator();
        (self.absolute_indicator_square_total as f64 / count - mean * mean).max(0.0).sqrt()
    }

    /// `E[σ(f)]`.
    pub fn mean_sum_of_squares(&self) -> f64 {
        self.sum_of_squares_total as f64 / self.functions as f64
    }
}

pub fn exhaustive_oracle(n: u32) -> Result<ExhaustiveDistribution> {
    if n > EXHAUSTIVE_MAX_VARIABLES {
        return Err(Error::DimensionTooLarge { n, max: EXHAUSTIVE_MAX_VARIABLES });
    }
    let functions = 1u64 << (1u32 << n);
    let mut dist = ExhaustiveDistribution {
        n,
        functions,
        absolute_indicator: BTreeMap::new(),
        nonlinearity: BTreeMap::new(),
        sum_of_squares: BTreeMap::new(),
        absolute_indicator_total: 0,
        absolute_indicator_square_total: 0,
        sum_of_squares_total: 0,
    };
    for table in 0..functions {
        let f = BooleanFunction::from_words(n, vec![table])?;
        let s = spectra::analyze(&f);
        *dist.absolute_indicator.entry(s.absolute_indicator).or_default() += 1;
        *dist.nonlinearity.entry(s.nonlinearity).or_default() += 1;
        *dist.sum_of_squares.entry(s.sum_of_squares).or_default() += 1;
        dist.absolute_indicator_total += s.absolute_indicator;
        dist.absolute_indicator_square_total += u128::from(s.absolute_indicator).pow(2);
        dist.sum_of_squares_total += s.sum_of_squares;
    }
    Ok(dist)
}
