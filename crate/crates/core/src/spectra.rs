//! Exact integer spectra of a Boolean function and the indicators derived
//! from them.
//!
//! The fast routes run the in-place Walsh–Hadamard butterfly in `O(n 2^n)`;
//! the autocorrelation spectrum is obtained as `2^-n WHT(f̂²)`. The naive
//! routes are the direct double sums and only exist to cross-check the fast
//! ones.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::{BooleanFunction, PointIndex};
use crate::real::serialize_real;

/// Largest `n` accepted by the `O(4^n)` naive transforms.
pub const NAIVE_MAX_VARIABLES: u32 = 16;

/// Walsh spectrum `f̂(u) = Σ_x (-1)^(f(x) + x.u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: u32,
    values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn max_abs(&self) -> u64 {
        self.values.iter().map(|v| u64::from(v.unsigned_abs())).max().unwrap_or(0)
    }

    /// `2^(n-1) - max|f̂| / 2`.
    pub fn nonlinearity(&self) -> u64 {
        (1u64 << (self.n - 1)) - self.max_abs() / 2
    }

    /// `Σ_u f̂(u)²`; equals `2^(2n)` for every Boolean function.
    pub fn energy(&self) -> u128 {
        self.values.iter().map(|&v| (i128::from(v) * i128::from(v)) as u128).sum()
    }

    /// Sum-of-squares indicator through the Walsh domain, `2^-n Σ_u f̂(u)^4`.
    pub fn sum_of_fourth_powers_scaled(&self) -> u128 {
        let total: u128 = self
            .values
            .iter()
            .map(|&v| {
                let sq = (i128::from(v) * i128::from(v)) as u128;
                sq * sq
            })
            .sum();
        total >> self.n
    }
}

/// Autocorrelation spectrum `Δ_f(u) = Σ_x (-1)^(f(x) + f(x+u))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutocorrelationSpectrum {
    n: u32,
    values: Vec<i64>,
}

impl AutocorrelationSpectrum {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `max_{u != 0} |Δ_f(u)|` and the smallest `u` attaining it.
    pub fn absolute_indicator(&self) -> (u64, PointIndex) {
        let mut best = (0u64, PointIndex::new(1));
        for (u, v) in self.values.iter().enumerate().skip(1) {
            let a = v.unsigned_abs();
            if a > best.0 {
                best = (a, PointIndex::new(u));
            }
        }
        best
    }

    /// `σ(f) = Σ_u Δ_f(u)²`, `u = 0` included.
    pub fn sum_of_squares(&self) -> u128 {
        self.values.iter().map(|&v| (i128::from(v) * i128::from(v)) as u128).sum()
    }
}

/// Indicators of one function, as reported by `analyze`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndicatorSummary {
    pub n: u32,
    pub nonlinearity: u64,
    pub absolute_indicator: u64,
    pub argmax_u: PointIndex,
    pub sum_of_squares: u128,
    /// `Δ(f) / (2 sqrt(l ln l))`.
    #[serde(serialize_with = "serialize_real")]
    pub ai_ratio: f64,
}

/// In-place unnormalized Walsh–Hadamard butterfly.
fn butterfly<T>(data: &mut [T])
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    let len = data.len();
    let mut half = 1;
    while half < len {
        for block in data.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }
}

pub fn walsh_fast(f: &BooleanFunction) -> WalshSpectrum {
    let mut values: Vec<i32> = f.sign_vector();
    butterfly(&mut values);
    WalshSpectrum { n: f.n(), values }
}

/// One byte per table entry.
fn unpack(f: &BooleanFunction) -> Vec<u8> {
    let mut table = vec![0u8; f.len()];
    for (chunk, &word) in table.chunks_mut(64).zip(f.words()) {
        for (k, b) in chunk.iter_mut().enumerate() {
            *b = (word >> k) as u8 & 1;
        }
    }
    table
}

/// Direct `O(4^n)` evaluation of every Walsh coefficient.
pub fn walsh_naive(f: &BooleanFunction) -> Result<WalshSpectrum> {
    let n = f.n();
    if n > NAIVE_MAX_VARIABLES {
        return Err(Error::DimensionTooLarge { n, max: NAIVE_MAX_VARIABLES });
    }
    let len = f.len();
    let table = unpack(f);
    let mut character = vec![0u8; len];
    let values = (0..len)
        .map(|u| {
            // character[x] = x·u, filled by doubling over the coordinates
            for j in 0..n as usize {
                let (low, high) = character.split_at_mut(1 << j);
                let flip = (u >> j & 1) as u8;
                for (h, &l) in high[..1 << j].iter_mut().zip(low.iter()) {
                    *h = l ^ flip;
                }
            }
            let differing: u32 = table.iter().zip(&character).map(|(&t, &c)| u32::from(t ^ c)).sum();
            len as i32 - 2 * differing as i32
        })
        .collect();
    Ok(WalshSpectrum { n, values })
}

/// Autocorrelation spectrum from an existing Walsh spectrum.
///
/// Partial sums in the second butterfly stay within `Σ f̂² = 2^(2n)`, so `i64`
/// is exact up to the 30-variable limit.
pub fn autocorrelation_from_walsh(walsh: &WalshSpectrum) -> AutocorrelationSpectrum {
    let n = walsh.n;
    let mut values: Vec<i64> = walsh.values.iter().map(|&v| i64::from(v) * i64::from(v)).collect();
    butterfly(&mut values);
    for v in &mut values {
        debug_assert_eq!(*v % (1i64 << n), 0);
        *v >>= n;
    }
    AutocorrelationSpectrum { n, values }
}

pub fn autocorrelation_fast(f: &BooleanFunction) -> AutocorrelationSpectrum {
    autocorrelation_from_walsh(&walsh_fast(f))
}

/// `Δ_f(u)` by direct summation over all points.
pub fn autocorrelation_naive(f: &BooleanFunction, u: PointIndex) -> Result<i64> {
    let u = u.value();
    if u >= f.len() {
        return Err(Error::IndexOutOfRange { index: u, n: f.n() });
    }
    let table = unpack(f);
    // Walk aligned blocks so the partner of x sits in one block of the same size.
    let block = table.len().min(64);
    let (high, low) = (u & !(block - 1), u & (block - 1));
    let differing: u32 = table
        .chunks_exact(block)
        .enumerate()
        .map(|(b, here)| {
            let there = &table[(b * block) ^ high..][..block];
            (0..block).map(|x| u32::from(here[x] ^ there[(x ^ low) & (block - 1)])).sum::<u32>()
        })
        .sum();
    Ok(table.len() as i64 - 2 * i64::from(differing))
}

/// `x -> x ^ shift` applied to the bit positions of a word (`shift < 64`).
#[inline]
fn permute_word(mut word: u64, shift: usize) -> u64 {
    const MASKS: [u64; 6] = [
        0x5555_5555_5555_5555,
        0x3333_3333_3333_3333,
        0x0f0f_0f0f_0f0f_0f0f,
        0x00ff_00ff_00ff_00ff,
        0x0000_ffff_0000_ffff,
        0x0000_0000_ffff_ffff,
    ];
    for (k, mask) in MASKS.iter().enumerate() {
        if shift >> k & 1 == 1 {
            let s = 1 << k;
            word = ((word & mask) << s) | ((word >> s) & mask);
        }
    }
    word
}

/// `Δ_f(u)` for a single direction on the packed table, `O(2^n / 64)`.
pub fn autocorrelation_at(f: &BooleanFunction, u: PointIndex) -> Result<i64> {
    let u = u.value();
    if u >= f.len() {
        return Err(Error::IndexOutOfRange { index: u, n: f.n() });
    }
    let words = f.words();
    let (hi, lo) = (u >> 6, u & 63);
    let differing: u64 = words
        .iter()
        .enumerate()
        .map(|(w, &word)| u64::from((word ^ permute_word(words[w ^ hi], lo)).count_ones()))
        .sum();
    Ok(f.len() as i64 - 2 * differing as i64)
}

pub fn nonlinearity(f: &BooleanFunction) -> u64 {
    walsh_fast(f).nonlinearity()
}

pub fn absolute_indicator(f: &BooleanFunction) -> (u64, PointIndex) {
    autocorrelation_fast(f).absolute_indicator()
}

pub fn sum_of_squares(f: &BooleanFunction) -> u128 {
    autocorrelation_fast(f).sum_of_squares()
}

/// `2 sqrt(l ln l)` for `l = 2^n`, the typical size of the absolute indicator.
pub fn expected_absolute_indicator(n: u32) -> f64 {
    2.0 * log_scale(n)
}

/// `sqrt(l ln l)` for `l = 2^n`.
pub fn log_scale(n: u32) -> f64 {
    let l = (n as f64).exp2();
    (l * l.ln()).sqrt()
}

pub fn analyze(f: &BooleanFunction) -> IndicatorSummary {
    let walsh = walsh_fast(f);
    let auto = autocorrelation_from_walsh(&walsh);
    let (absolute_indicator, argmax_u) = auto.absolute_indicator();
    IndicatorSummary {
        n: f.n(),
        nonlinearity: walsh.nonlinearity(),
        absolute_indicator,
        argmax_u,
        sum_of_squares: auto.sum_of_squares(),
        ai_ratio: absolute_indicator as f64 / expected_absolute_indicator(f.n()),
    }
}
