//! Randomness test for a bit sequence of length `2^n`, read as the truth table
//! of a Boolean function.
//!
//! Two statistics are compared with the values typical of uniformly random
//! functions:
//!
//! * the nonlinearity against the band `[lowNL_n, highNL_n]`;
//! * the absolute indicator against the one-sided threshold
//!   `μ = (2 + ε) sqrt(l ln l)`. The union bound over the `l - 1` directions
//!   gives `P[Δ(f) > μ] < 2 l^-ε` for random `f`, so choosing
//!   `ε = ln(2/α) / ln l` makes `α` an upper bound on the false-rejection rate.
//!
//! A rejected sequence is certainly suspicious; a passing one is merely not
//! caught. When `μ >= 2^n` no function can exceed the threshold and the
//! indicator verdict is `inconclusive`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::{BooleanFunction, PointIndex};
use crate::real::serialize_real;
use crate::spectra::{self, expected_absolute_indicator};

pub const DEFAULT_ALPHA: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestConfig {
    alpha: f64,
    pub run_nl: bool,
    pub run_ai: bool,
}

impl TestConfig {
    pub fn new(alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(TestConfig { alpha, run_nl: true, run_ai: true })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

impl Default for TestConfig {
    fn default() -> Self {
        TestConfig { alpha: DEFAULT_ALPHA, run_nl: true, run_ai: true }
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidAlpha(alpha))
    }
}

/// Band expected to contain the nonlinearity of most random functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NlBand {
    pub low: f64,
    pub high: f64,
    /// The radicand of `high` was negative and clamped to zero, which puts
    /// `high` at `2^(n-1)`, an edge no function reaches.
    pub high_clamped: bool,
}

/// `lowNL_n = 2^(n-1) - sqrt(2^(n-1) (n ln 2 + 3.5 ln(n ln 2) + 0.125))` and
/// `highNL_n = 2^(n-1) - sqrt(2^(n-1) max(0, n ln 2 - 4.5 ln(n ln 2)))`.
pub fn nl_band(n: u32) -> NlBand {
    let half = ((n - 1) as f64).exp2();
    let nln2 = n as f64 * std::f64::consts::LN_2;
    let low = half - (half * (nln2 + 3.5 * nln2.ln() + 0.125)).sqrt();
    let inner = nln2 - 4.5 * nln2.ln();
    let high_clamped = inner < 0.0;
    let high = half - (half * inner.max(0.0)).sqrt();
    NlBand { low, high, high_clamped }
}

/// Evaluable links of the chain `2 lowNL_(n-1) < lowNL_n < 2 highNL_(n-1) < highNL_n`.
///
/// A comparison involving a clamped `highNL` is reported as `None`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BandChain {
    pub n: u32,
    pub doubled_low_below_low: bool,
    pub low_below_doubled_high: Option<bool>,
    pub doubled_high_below_high: Option<bool>,
}

pub fn nl_band_chain(n: u32) -> BandChain {
    assert!(n >= 3, "the chain compares n with n - 1 >= 2");
    let prev = nl_band(n - 1);
    let cur = nl_band(n);
    BandChain {
        n,
        doubled_low_below_low: 2.0 * prev.low < cur.low,
        low_below_doubled_high: (!prev.high_clamped).then(|| cur.low < 2.0 * prev.high),
        doubled_high_below_high: (!prev.high_clamped && !cur.high_clamped)
            .then(|| 2.0 * prev.high < cur.high),
    }
}

/// `(ε, μ)` with `ε = ln(2/α) / ln l` and `μ = (2 + ε) sqrt(l ln l)`.
pub fn ai_threshold(n: u32, alpha: f64) -> Result<(f64, f64)> {
    check_alpha(alpha)?;
    let ln_l = n as f64 * std::f64::consts::LN_2;
    let epsilon = (2.0 / alpha).ln() / ln_l;
    Ok((epsilon, (2.0 + epsilon) * spectra::log_scale(n)))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Thresholds {
    #[serde(serialize_with = "serialize_real")]
    pub nl_low: f64,
    #[serde(serialize_with = "serialize_real")]
    pub nl_high: f64,
    pub nl_high_clamped: bool,
    #[serde(serialize_with = "serialize_real")]
    pub ai_expected: f64,
    #[serde(serialize_with = "serialize_real")]
    pub ai_upper: f64,
    #[serde(serialize_with = "serialize_real")]
    pub ai_epsilon: f64,
}

pub fn thresholds(n: u32, alpha: f64) -> Result<Thresholds> {
    let band = nl_band(n);
    let (ai_epsilon, ai_upper) = ai_threshold(n, alpha)?;
    Ok(Thresholds {
        nl_low: band.low,
        nl_high: band.high,
        nl_high_clamped: band.high_clamped,
        ai_expected: expected_absolute_indicator(n),
        ai_upper,
        ai_epsilon,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

/// Why a statistic was rejected.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Rejection {
    pub statistic: &'static str,
    pub value: u64,
    #[serde(serialize_with = "serialize_real")]
    pub threshold: f64,
    /// `"below"` or `"above"` the threshold.
    pub side: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub nl: Verdict,
    pub ai: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TestReport {
    pub n: u32,
    pub nonlinearity: u64,
    pub absolute_indicator: u64,
    pub argmax_u: PointIndex,
    pub sum_of_squares: u128,
    #[serde(serialize_with = "serialize_real")]
    pub ai_ratio: f64,
    pub thresholds: Thresholds,
    pub verdicts: Verdicts,
    #[serde(serialize_with = "serialize_real")]
    pub alpha: f64,
    pub rejections: Vec<Rejection>,
}

impl TestReport {
    pub fn rejected(&self) -> bool {
        self.verdicts.nl == Verdict::Fail || self.verdicts.ai == Verdict::Fail
    }
}

pub fn run_test(f: &BooleanFunction, config: &TestConfig) -> TestReport {
    let summary = spectra::analyze(f);
    let thresholds =
        thresholds(f.n(), config.alpha).expect("alpha validated by TestConfig::new");
    let mut rejections = Vec::new();

    let nl = if !config.run_nl {
        Verdict::Skipped
    } else if (summary.nonlinearity as f64) < thresholds.nl_low {
        rejections.push(Rejection {
            statistic: "nonlinearity",
            value: summary.nonlinearity,
            threshold: thresholds.nl_low,
            side: "below",
        });
        Verdict::Fail
    } else if !thresholds.nl_high_clamped && summary.nonlinearity as f64 > thresholds.nl_high {
        rejections.push(Rejection {
            statistic: "nonlinearity",
            value: summary.nonlinearity,
            threshold: thresholds.nl_high,
            side: "above",
        });
        Verdict::Fail
    } else {
        Verdict::Pass
    };

    let ai = if !config.run_ai {
        Verdict::Skipped
    } else if thresholds.ai_upper >= f.len() as f64 {
        Verdict::Inconclusive
    } else if summary.absolute_indicator as f64 > thresholds.ai_upper {
        rejections.push(Rejection {
            statistic: "absolute_indicator",
            value: summary.absolute_indicator,
            threshold: thresholds.ai_upper,
            side: "above",
        });
        Verdict::Fail
    } else {
        Verdict::Pass
    };

    TestReport {
        n: summary.n,
        nonlinearity: summary.nonlinearity,
        absolute_indicator: summary.absolute_indicator,
        argmax_u: summary.argmax_u,
        sum_of_squares: summary.sum_of_squares,
        ai_ratio: summary.ai_ratio,
        thresholds,
        verdicts: Verdicts { nl, ai },
        alpha: config.alpha,
        rejections,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nl_band_sixteen() {
        let b = nl_band(16);
        assert!((b.low - 31965.8).abs() < 0.05, "{}", b.low);
        assert!((b.high - 32675.2).abs() < 0.05, "{}", b.high);
        assert!(!b.high_clamped);
    }

    #[test]
    fn nl_band_ten_is_clamped() {
        let b = nl_band(10);
        assert!((b.low - 427.8).abs() < 0.05, "{}", b.low);
        assert_eq!(b.high, 512.0);
        assert!(b.high_clamped);
    }

    #[test]
    fn nl_band_two_is_degenerate() {
        let b = nl_band(2);
        assert!(b.low < 2.0);
        // 2 ln 2 - 4.5 ln(2 ln 2) = 1.386 - 1.470 < 0
        assert!(b.high_clamped);
    }

    #[test]
    fn high_clamps_up_to_fifteen() {
        for n in 2..=15 {
            assert!(nl_band(n).high_clamped, "n = {n}");
        }
        assert!(!nl_band(16).high_clamped);
    }

    #[test]
    fn chain_reports_only_evaluable_links() {
        let c = nl_band_chain(10);
        assert_eq!(c.low_below_doubled_high, None);
        assert_eq!(c.doubled_high_below_high, None);
        let c = nl_band_chain(17);
        assert!(c.low_below_doubled_high.is_some());
        assert!(c.doubled_high_below_high.is_some());
    }

    #[test]
    fn ai_threshold_examples() {
        let (eps, mu) = ai_threshold(10, 0.01).unwrap();
        assert!((eps - 200f64.ln() / 1024f64.ln()).abs() < 1e-15);
        assert!((eps - 0.7644).abs() < 5e-5);
        assert!((mu - 232.9).abs() < 0.05, "{mu}");
        assert_eq!(ai_threshold(10, 2.0).unwrap_err(), Error::InvalidAlpha(2.0));
        assert!(ai_threshold(10, 0.0).is_err());
        let (_, mu4) = ai_threshold(4, 0.01).unwrap();
        // (2 + ln 200 / ln 16) sqrt(16 ln 16) = 26.0487...
        assert!((mu4 - 26.0487).abs() < 1e-3, "{mu4}");
        assert!(mu4 > 16.0);
    }

    #[test]
    fn threshold_decreases_with_alpha() {
        let alphas = [0.001, 0.01, 0.05, 0.1, 0.5, 0.9];
        for n in [4, 10, 16] {
            let mus: Vec<f64> = alphas.iter().map(|&a| ai_threshold(n, a).unwrap().1).collect();
            assert!(mus.windows(2).all(|w| w[0] > w[1]), "{mus:?}");
        }
    }

    #[test]
    fn constant_zero_fails_both() {
        let f = BooleanFunction::zero(10).unwrap();
        let r = run_test(&f, &TestConfig::default());
        assert_eq!(r.verdicts, Verdicts { nl: Verdict::Fail, ai: Verdict::Fail });
        assert_eq!(r.rejections.len(), 2);
        assert_eq!(r.rejections[1].value, 1024);
        assert!(r.rejected());
    }

    #[test]
    fn small_n_is_inconclusive_not_pass() {
        let f = BooleanFunction::zero(4).unwrap();
        let r = run_test(&f, &TestConfig::new(0.01).unwrap());
        assert_eq!(r.verdicts.ai, Verdict::Inconclusive);
    }

    #[test]
    fn skipped_checks() {
        let f = BooleanFunction::zero(10).unwrap();
        let config = TestConfig { run_nl: false, run_ai: false, ..TestConfig::default() };
        let r = run_test(&f, &config);
        assert_eq!(r.verdicts, Verdicts { nl: Verdict::Skipped, ai: Verdict::Skipped });
        assert!(!r.rejected());
        assert!(r.rejections.is_empty());
    }
}
