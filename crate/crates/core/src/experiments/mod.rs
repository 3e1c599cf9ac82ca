//! Empirical checks of the distribution of the absolute indicator.
//!
//! Every experiment produces one [`ExperimentRow`] per `n`. Trials are
//! independent: trial `t` draws from `seed.stream(t)`, and all statistics are
//! accumulated in exact integers before the final division, so a row depends
//! only on its configuration and never on the number of worker threads.

mod exhaustive;
mod monte_carlo;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use exhaustive::{exhaustive_oracle, ExhaustiveDistribution, EXHAUSTIVE_MAX_VARIABLES};
pub use monte_carlo::{
    absolute_indicator_samples, concentration_check, estimate_ratio, exhaustive_row,
    nl_disturbance_tail, pair_tail, single_u_tail, sos_mean, tail_check, NlDeviationTail,
};

use crate::error::{Error, Result};
use crate::real::{format_real, serialize_opt_real};
use crate::rng::Seed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    Ratio,
    Tail,
    SingleUTail,
    PairTail,
    Concentration,
    Exhaustive,
    SosMean,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 7] = [
        ExperimentKind::Ratio,
        ExperimentKind::Tail,
        ExperimentKind::SingleUTail,
        ExperimentKind::PairTail,
        ExperimentKind::Concentration,
        ExperimentKind::Exhaustive,
        ExperimentKind::SosMean,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::Ratio => "ratio",
            ExperimentKind::Tail => "tail",
            ExperimentKind::SingleUTail => "single-u-tail",
            ExperimentKind::PairTail => "pair-tail",
            ExperimentKind::Concentration => "concentration",
            ExperimentKind::Exhaustive => "exhaustive",
            ExperimentKind::SosMean => "sos-mean",
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s || k.name().replace('-', "_") == s)
            .ok_or_else(|| format!("unknown experiment '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub kind: ExperimentKind,
    pub n_values: Vec<u32>,
    pub trials: u64,
    pub seed: Seed,
    pub epsilon: Option<f64>,
    pub theta: Option<f64>,
}

impl ExperimentConfig {
    pub fn new(kind: ExperimentKind, n_values: Vec<u32>, trials: u64, seed: Seed) -> Self {
        ExperimentConfig { kind, n_values, trials, seed, epsilon: None, theta: None }
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = Some(epsilon);
        self
    }

    pub fn with_theta(mut self, theta: f64) -> Self {
        self.theta = Some(theta);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() {
            return Err(Error::InvalidParameter("no values of n given".into()));
        }
        if self.trials == 0 && self.kind != ExperimentKind::Exhaustive {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        Ok(())
    }
}

/// One line of an experiment report.
///
/// Columns after `exact_expectation` extend the fixed set: `mean_value` and
/// `stderr_value` describe the raw statistic of the row (Δ, Δ_f(u)² or σ)
/// and `note` carries caveats such as asymptotic-only bounds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentRow {
    pub kind: ExperimentKind,
    pub n: u32,
    pub trials: u64,
    pub seed: Option<u64>,
    #[serde(serialize_with = "serialize_opt_real")]
    pub epsilon: Option<f64>,
    #[serde(serialize_with = "serialize_opt_real")]
    pub theta: Option<f64>,
    #[serde(serialize_with = "serialize_opt_real")]
    pub mean_ratio: Option<f64>,
    #[serde(serialize_with = "serialize_opt_real")]
    pub stddev_ratio: Option<f64>,
    #[serde(serialize_with = "serialize_opt_real")]
    pub empirical_tail: Option<f64>,
    #[serde(serialize_with = "serialize_opt_real")]
    pub bound_value: Option<f64>,
    pub bound_satisfied: Option<bool>,
    #[serde(serialize_with = "serialize_opt_real")]
    pub exact_expectation: Option<f64>,
    #[serde(serialize_with = "serialize_opt_real")]
    pub mean_value: Option<f64>,
    #[serde(serialize_with = "serialize_opt_real")]
    pub stderr_value: Option<f64>,
    pub note: String,
}

impl ExperimentRow {
    pub(crate) fn new(kind: ExperimentKind, n: u32, trials: u64, seed: Option<Seed>) -> Self {
        ExperimentRow {
            kind,
            n,
            trials,
            seed: seed.map(|s| s.0),
            epsilon: None,
            theta: None,
            mean_ratio: None,
            stddev_ratio: None,
            empirical_tail: None,
            bound_value: None,
            bound_satisfied: None,
            exact_expectation: None,
            mean_value: None,
            stderr_value: None,
            note: String::new(),
        }
    }

    pub(crate) fn add_note(&mut self, note: &str) {
        if !self.note.is_empty() {
            self.note.push_str("; ");
        }
        self.note.push_str(note);
    }
}

pub const CSV_COLUMNS: [&str; 15] = [
    "kind",
    "n",
    "trials",
    "seed",
    "epsilon",
    "theta",
    "mean_ratio",
    "stddev_ratio",
    "empirical_tail",
    "bound_value",
    "bound_satisfied",
    "exact_expectation",
    "mean_value",
    "stderr_value",
    "note",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct ExperimentResult {
    pub rows: Vec<ExperimentRow>,
}

impl ExperimentResult {
    pub fn to_csv(&self) -> Vec<u8> {
        let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        writer.write_record(CSV_COLUMNS).expect("in-memory write");
        let real = |x: Option<f64>| x.and_then(format_real).unwrap_or_default();
        for row in &self.rows {
            writer
                .write_record([
                    row.kind.name().to_string(),
                    row.n.to_string(),
                    row.trials.to_string(),
                    row.seed.map(|s| s.to_string()).unwrap_or_default(),
                    real(row.epsilon),
                    real(row.theta),
                    real(row.mean_ratio),
                    real(row.stddev_ratio),
                    real(row.empirical_tail),
                    real(row.bound_value),
                    row.bound_satisfied.map(|b| b.to_string()).unwrap_or_default(),
                    real(row.exact_expectation),
                    real(row.mean_value),
                    real(row.stderr_value),
                    row.note.clone(),
                ])
                .expect("in-memory write");
        }
        writer.into_inner().expect("in-memory flush")
    }

    pub fn to_json(&self) -> Vec<u8> {
        let mut out = serde_json::to_vec_pretty(self).expect("rows serialize");
        out.push(b'\n');
        out
    }
}

/// Runs `config` on a dedicated pool of `threads` workers (all cores when `None`).
pub fn run_experiment(config: &ExperimentConfig, threads: Option<usize>) -> Result<ExperimentResult> {
    config.validate()?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))?;
    pool.install(|| {
        let rows = config
            .n_values
            .iter()
            .map(|&n| run_one(config, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExperimentResult { rows })
    })
}

fn require(value: Option<f64>, name: &str) -> Result<f64> {
    value.ok_or_else(|| Error::InvalidParameter(format!("{name} is required for this experiment")))
}

fn run_one(config: &ExperimentConfig, n: u32) -> Result<ExperimentRow> {
    let (trials, seed) = (config.trials, config.seed);
    match config.kind {
        ExperimentKind::Ratio => estimate_ratio(n, trials, seed),
        ExperimentKind::Tail => tail_check(n, trials, require(config.epsilon, "epsilon")?, seed),
        ExperimentKind::SingleUTail => single_u_tail(n, trials, seed),
        ExperimentKind::PairTail => pair_tail(n, trials, seed),
        ExperimentKind::Concentration => {
            concentration_check(n, trials, require(config.theta, "theta")?, seed)
        }
        ExperimentKind::Exhaustive => exhaustive_row(n),
        ExperimentKind::SosMean => sos_mean(n, trials, seed),
    }
}
