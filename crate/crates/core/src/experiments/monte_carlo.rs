use rayon::prelude::*;
use serde::Serialize;

use super::exhaustive::{exhaustive_oracle, EXHAUSTIVE_MAX_VARIABLES};
use super::{ExperimentKind, ExperimentRow};
use crate::error::{Error, Result};
use crate::function::PointIndex;
use crate::generators::{disturb, random_function, two_period_extend};
use crate::rng::Seed;
use crate::spectra::{self, autocorrelation_at, expected_absolute_indicator, log_scale};

const MIN_MEAN_TRIALS: u64 = 100;

/// Exact integer moments of a sample.
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    count: u64,
    sum: i128,
    sum_sq: i128,
}

impl Moments {
    fn from_values(values: impl IntoIterator<Item = i128>) -> Self {
        values.into_iter().fold(Moments::default(), |mut m, v| {
            m.count += 1;
            m.sum += v;
            m.sum_sq += v * v;
            m
        })
    }

    fn mean(&self) -> f64 {
        self.sum as f64 / self.count as f64
    }

    /// Sample standard deviation (divisor `count - 1`).
    fn stddev(&self) -> f64 {
        if self.count < 2 {
            return 0.0;
        }
        let c = self.count as i128;
        let numerator = c * self.sum_sq - self.sum * self.sum;
        (numerator as f64 / (c * (c - 1)) as f64).max(0.0).sqrt()
    }

    fn stderr(&self) -> f64 {
        self.stddev() / (self.count as f64).sqrt()
    }
}

fn table_len(n: u32) -> f64 {
    (n as f64).exp2()
}

fn check_trials(trials: u64, min: u64) -> Result<()> {
    if trials < min {
        return Err(Error::InvalidParameter(format!("at least {min} trials are required, got {trials}")));
    }
    Ok(())
}

/// `Δ(f)` for `trials` random functions; entry `t` uses `seed.stream(t)`.
pub fn absolute_indicator_samples(n: u32, trials: u64, seed: Seed) -> Result<Vec<u64>> {
    random_function(n, seed)?;
    Ok((0..trials)
        .into_par_iter()
        .map(|t| {
            let f = random_function(n, seed.stream(t)).expect("dimension checked");
            spectra::absolute_indicator(&f).0
        })
        .collect())
}

fn fill_ratio(row: &mut ExperimentRow, n: u32, samples: &[u64]) -> Moments {
    let m = Moments::from_values(samples.iter().map(|&d| i128::from(d)));
    let scale = log_scale(n);
    row.mean_ratio = Some(m.mean() / scale);
    row.stddev_ratio = Some(m.stddev() / scale);
    row.mean_value = Some(m.mean());
    row.stderr_value = Some(m.stderr());
    m
}

/// Mean and spread of `Δ(f) / sqrt(l ln l)` over random functions.
pub fn estimate_ratio(n: u32, trials: u64, seed: Seed) -> Result<ExperimentRow> {
    check_trials(trials, MIN_MEAN_TRIALS)?;
    let samples = absolute_indicator_samples(n, trials, seed)?;
    let mut row = ExperimentRow::new(ExperimentKind::Ratio, n, trials, Some(seed));
    let m = fill_ratio(&mut row, n, &samples);
    if n <= EXHAUSTIVE_MAX_VARIABLES {
        let exact = exhaustive_oracle(n)?.mean_absolute_indicator();
        row.exact_expectation = Some(exact);
        let agrees = (m.mean() - exact).abs() <= 3.0 * m.stderr();
        row.add_note(if agrees {
            "sample mean within 3 standard errors of the exact expectation"
        } else {
            "sample mean NOT within 3 standard errors of the exact expectation"
        });
    }
    Ok(row)
}

fn binomial_stderr(p: f64, trials: u64) -> f64 {
    (p * (1.0 - p) / trials as f64).sqrt()
}

/// Frequency of `Δ(f) > (2 + ε) sqrt(l ln l)` against the union bound `2 l^-ε`.
pub fn tail_check(n: u32, trials: u64, epsilon: f64, seed: Seed) -> Result<ExperimentRow> {
    check_trials(trials, 1)?;
    if !(epsilon > 0.0) {
        return Err(Error::InvalidParameter(format!("epsilon must be positive, got {epsilon}")));
    }
    let samples = absolute_indicator_samples(n, trials, seed)?;
    let threshold = (2.0 + epsilon) * log_scale(n);
    let exceed = samples.iter().filter(|&&d| d as f64 > threshold).count() as u64;
    let p = exceed as f64 / trials as f64;
    let bound = 2.0 * table_len(n).powf(-epsilon);

    let mut row = ExperimentRow::new(ExperimentKind::Tail, n, trials, Some(seed));
    row.epsilon = Some(epsilon);
    fill_ratio(&mut row, n, &samples);
    row.empirical_tail = Some(p);
    row.bound_value = Some(bound);
    row.bound_satisfied = Some(p <= bound);
    if threshold >= table_len(n) {
        row.add_note("threshold exceeds 2^n so no function can exceed it");
    }
    if (bound - p).abs() <= 3.0 * binomial_stderr(p, trials) {
        row.add_note("bound within 3 standard errors of the estimate");
    }
    Ok(row)
}

#[derive(Debug, Default, Clone, Copy)]
struct SingleDirection {
    exceed: u64,
    sum_sq: u128,
    sum_fourth: u128,
}

/// Tail of one autocorrelation coefficient, simulated as `Δ_f(u) = 2 S` with
/// `S` a sum of `l/2` independent fair `±1` variables.
///
/// The pairs `{x, x+u}` partition the points into `l/2` classes, and on a
/// uniform random function the derivative values on distinct classes are
/// independent fair bits, so drawing those bits directly has the same law as
/// materializing whole functions.
pub fn single_u_tail(n: u32, trials: u64, seed: Seed) -> Result<ExperimentRow> {
    check_trials(trials, 1)?;
    if !(2..=crate::function::MAX_VARIABLES).contains(&n) {
        return Err(Error::InvalidDimension { n, min: 2, max: crate::function::MAX_VARIABLES });
    }
    let half = 1u64 << (n - 1);
    let words = ((half + 63) / 64) as usize;
    let last_mask = if half >= 64 { u64::MAX } else { (1u64 << half) - 1 };
    let lambda = expected_absolute_indicator(n);

    let acc = (0..trials)
        .into_par_iter()
        .fold(SingleDirection::default, |mut acc, t| {
            let mut rng = seed.stream(t).rng();
            let mut ones = 0u64;
            for w in 0..words {
                let mut word = rng.next_u64();
                if w + 1 == words {
                    word &= last_mask;
                }
                ones += u64::from(word.count_ones());
            }
            let delta = 2 * (half as i64 - 2 * ones as i64);
            if delta.unsigned_abs() as f64 >= lambda {
                acc.exceed += 1;
            }
            let sq = u128::from(delta.unsigned_abs()).pow(2);
            acc.sum_sq += sq;
            acc.sum_fourth += sq * sq;
            acc
        })
        .reduce(SingleDirection::default, |a, b| SingleDirection {
            exceed: a.exceed + b.exceed,
            sum_sq: a.sum_sq + b.sum_sq,
            sum_fourth: a.sum_fourth + b.sum_fourth,
        });

    let l = table_len(n);
    let p = acc.exceed as f64 / trials as f64;
    let bound = 1.0 / (2.0 * l * l.ln().sqrt());
    let moments = Moments {
        count: trials,
        sum: acc.sum_sq as i128,
        sum_sq: acc.sum_fourth as i128,
    };

    let mut row = ExperimentRow::new(ExperimentKind::SingleUTail, n, trials, Some(seed));
    row.empirical_tail = Some(p);
    row.bound_value = Some(bound);
    row.bound_satisfied = Some(p >= bound);
    row.mean_value = Some(moments.mean());
    row.stderr_value = Some(moments.stderr());
    row.add_note(&format!(
        "lower bound; mean_value is E[Delta_f(u)^2] with reference 2l = {}",
        2 * (1u64 << n)
    ));
    row.add_note("bound is asymptotic and only guaranteed for n sufficiently large");
    if n < 8 {
        row.add_note("small-n: comparison against an asymptotic bound");
    }
    Ok(row)
}

#[derive(Debug, Default, Clone, Copy)]
struct PairCounts {
    joint: u64,
    first: u64,
    second: u64,
}

/// Joint exceedance of two fixed directions `u = 1`, `v = 2` against `4 l^-2`.
///
/// This is a non-violation audit: at desk-scale trial counts the joint event
/// is usually never observed.
pub fn pair_tail(n: u32, trials: u64, seed: Seed) -> Result<ExperimentRow> {
    check_trials(trials, 1)?;
    random_function(n, seed)?;
    let (u, v) = (PointIndex::new(1), PointIndex::new(2));
    let lambda = expected_absolute_indicator(n);
    let counts = (0..trials)
        .into_par_iter()
        .fold(PairCounts::default, |mut acc, t| {
            let f = random_function(n, seed.stream(t)).expect("dimension checked");
            let hit_u = autocorrelation_at(&f, u).expect("u < 2^n").unsigned_abs() as f64 >= lambda;
            let hit_v = autocorrelation_at(&f, v).expect("v < 2^n").unsigned_abs() as f64 >= lambda;
            acc.first += u64::from(hit_u);
            acc.second += u64::from(hit_v);
            acc.joint += u64::from(hit_u && hit_v);
            acc
        })
        .reduce(PairCounts::default, |a, b| PairCounts {
            joint: a.joint + b.joint,
            first: a.first + b.first,
            second: a.second + b.second,
        });

    let l = table_len(n);
    let p = counts.joint as f64 / trials as f64;
    let bound = 4.0 / (l * l);
    let mut row = ExperimentRow::new(ExperimentKind::PairTail, n, trials, Some(seed));
    row.empirical_tail = Some(p);
    row.bound_value = Some(bound);
    row.bound_satisfied = Some(p <= bound);
    row.add_note("non-violation audit with u = 1 and v = 2, not an estimate");
    // Expected joint count if the two directions were independent.
    let independent = counts.first as f64 * counts.second as f64 / trials as f64;
    if independent < 1.0 {
        row.add_note("a positive estimate of the joint tail is below Monte Carlo resolution at this trial count");
    }
    row.add_note(&format!(
        "single-direction exceedances: u = {}, v = {}",
        counts.first, counts.second
    ));
    if n < 7 {
        row.add_note("the joint bound is stated for n >= 7");
    }
    Ok(row)
}

/// Frequency of `|Δ(f) - mean| >= θ` against `2 exp(-θ² / 8l)`, the mean
/// being estimated from the same sample.
pub fn concentration_check(n: u32, trials: u64, theta: f64, seed: Seed) -> Result<ExperimentRow> {
    check_trials(trials, 1)?;
    if !(theta > 0.0) {
        return Err(Error::InvalidParameter(format!("theta must be positive, got {theta}")));
    }
    let samples = absolute_indicator_samples(n, trials, seed)?;
    let mut row = ExperimentRow::new(ExperimentKind::Concentration, n, trials, Some(seed));
    row.theta = Some(theta);
    let m = fill_ratio(&mut row, n, &samples);
    let mean = m.mean();
    let far = samples.iter().filter(|&&d| (d as f64 - mean).abs() >= theta).count() as u64;
    let p = far as f64 / trials as f64;
    let bound = 2.0 * (-theta * theta / (8.0 * table_len(n))).exp();
    row.empirical_tail = Some(p);
    row.bound_value = Some(bound);
    row.bound_satisfied = Some(p <= bound);
    if bound >= 1.0 {
        row.add_note("bound is at least 1 and holds trivially");
    }
    Ok(row)
}

/// Exact expectation and spread of `Δ(f)` by enumerating every function.
pub fn exhaustive_row(n: u32) -> Result<ExperimentRow> {
    let dist = exhaustive_oracle(n)?;
    let scale = log_scale(n);
    let mean = dist.mean_absolute_indicator();
    let mut row = ExperimentRow::new(ExperimentKind::Exhaustive, n, dist.functions, None);
    row.mean_ratio = Some(mean / scale);
    row.stddev_ratio = Some(dist.stddev_absolute_indicator() / scale);
    row.exact_expectation = Some(mean);
    row.mean_value = Some(mean);
    row.add_note("exact enumeration; stddev_ratio is the population standard deviation");
    row.add_note(&format!(
        "mean sum_of_squares = {}/{}",
        dist.sum_of_squares_total, dist.functions
    ));
    Ok(row)
}

/// `3 l² - 2 l`, the mean sum-of-squares indicator of a random function.
pub fn sum_of_squares_reference(n: u32) -> f64 {
    let l = table_len(n);
    3.0 * l * l - 2.0 * l
}

/// Monte Carlo mean of the sum-of-squares indicator against `3 l² - 2 l`.
pub fn sos_mean(n: u32, trials: u64, seed: Seed) -> Result<ExperimentRow> {
    check_trials(trials, MIN_MEAN_TRIALS)?;
    random_function(n, seed)?;
    let samples: Vec<u128> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let f = random_function(n, seed.stream(t)).expect("dimension checked");
            spectra::sum_of_squares(&f)
        })
        .collect();
    let m = Moments::from_values(samples.iter().map(|&s| s as i128));
    let reference = sum_of_squares_reference(n);

    let mut row = ExperimentRow::new(ExperimentKind::SosMean, n, trials, Some(seed));
    row.mean_value = Some(m.mean());
    row.stderr_value = Some(m.stderr());
    row.bound_value = Some(reference);
    row.bound_satisfied = Some((m.mean() - reference).abs() <= 3.0 * m.stderr());
    row.add_note("bound_value is the closed form 3l^2 - 2l; satisfied means within 3 standard errors");
    if n <= EXHAUSTIVE_MAX_VARIABLES {
        let exact = exhaustive_oracle(n)?.mean_sum_of_squares();
        row.exact_expectation = Some(exact);
        if exact != reference {
            row.add_note("exact enumeration disagrees with the closed form");
        }
    }
    Ok(row)
}

/// Deviation of the nonlinearity under `r` random flips of a two-period function.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NlDeviationTail {
    pub n: u32,
    pub r: usize,
    pub trials: u64,
    /// Largest `|NL(f_r) - NL(f)|` observed.
    pub max_deviation: u64,
    /// `(s, count of |NL(f_r) - NL(f)| > s, empirical frequency, 2 exp(-s²/2r))`.
    pub rows: Vec<(u64, u64, f64, f64)>,
}

/// Trial `t` extends `random_function(n - 1, seed.stream(2t))` to two periods
/// and disturbs it at `r` points drawn from `seed.stream(2t + 1)`.
pub fn nl_disturbance_tail(
    n: u32,
    r: usize,
    trials: u64,
    s_values: &[u64],
    seed: Seed,
) -> Result<NlDeviationTail> {
    check_trials(trials, 1)?;
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    random_function(n.saturating_sub(1), seed)?;
    let deviations: Vec<u64> = (0..trials)
        .into_par_iter()
        .map(|t| -> Result<u64> {
            let g = random_function(n - 1, seed.stream(2 * t))?;
            let f = two_period_extend(&g)?;
            let fr = disturb(&f, r, seed.stream(2 * t + 1))?;
            Ok(spectra::nonlinearity(&fr).abs_diff(spectra::nonlinearity(&f)))
        })
        .collect::<Result<_>>()?;
    let rows = s_values
        .iter()
        .map(|&s| {
            let count = deviations.iter().filter(|&&d| d > s).count() as u64;
            let bound = 2.0 * (-((s * s) as f64) / (2.0 * r as f64)).exp();
            (s, count, count as f64 / trials as f64, bound)
        })
        .collect();
    Ok(NlDeviationTail {
        n,
        r,
        trials,
        max_deviation: deviations.iter().copied().max().unwrap_or(0),
        rows,
    })
}
