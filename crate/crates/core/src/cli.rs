//! Command-line front end.
//!
//! `dispatch` maps an argument list to an exit code plus the bytes destined
//! for standard output and standard error, so the binary is a thin wrapper and
//! every command can be driven from tests.
//!
//! Exit codes: `0` success, `1` the `test` command rejected the sequence,
//! `2` usage, input or I/O errors.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::experiments::{exhaustive_oracle, run_experiment, ExperimentConfig, ExperimentKind};
use crate::function::{BooleanFunction, Format};
use crate::generators::{disturb, random_affine, random_function, two_period_extend};
use crate::randomness::{run_test, TestConfig, TestReport, DEFAULT_ALPHA};
use crate::rng::Seed;
use crate::spectra::{analyze, IndicatorSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

impl Outcome {
    fn ok(stdout: Vec<u8>) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: Vec::new() }
    }

    fn error(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_ERROR,
            stdout: Vec::new(),
            stderr: format!("absind: {message}\n").into_bytes(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "absind", version, about = "Absolute indicator, nonlinearity and randomness test for Boolean functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the indicators of a function as JSON.
    Analyze(InputArgs),
    /// Run the randomness test; exits with 1 when the sequence is rejected.
    Test {
        #[command(flatten)]
        input: InputArgs,
        /// Significance level of the absolute-indicator test.
        #[arg(long, default_value_t = DEFAULT_ALPHA)]
        alpha: f64,
    },
    /// Write a generated function.
    Gen(GenArgs),
    /// Run a Monte Carlo or exhaustive experiment; CSV on stdout.
    Experiment(ExperimentArgs),
    /// Exact histograms over every function on n <= 4 variables; CSV on stdout.
    Oracle {
        #[arg(long = "n")]
        n: u32,
        /// Also write the distribution as JSON to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_parser = parse_format)]
    format: Format,
    #[arg(long = "n")]
    n: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Random,
    TwoPeriod,
    Disturbed,
    Constant,
    Affine,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: GenKind,
    #[arg(long = "n")]
    n: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path; the table goes to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Encoding of the output and of `--inner-in`.
    #[arg(long, value_parser = parse_format, default_value = "raw")]
    format: Format,
    /// Function on n - 1 variables to extend (two-period, disturbed).
    #[arg(long = "inner-in")]
    inner_in: Option<PathBuf>,
    /// Seed of a random function on n - 1 variables to extend.
    #[arg(long = "inner-seed")]
    inner_seed: Option<u64>,
    /// Number of flipped points (disturbed).
    #[arg(long = "r")]
    r: Option<usize>,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    #[arg(long, value_parser = parse_experiment)]
    experiment: ExperimentKind,
    #[arg(long = "n-list", value_delimiter = ',', required = true)]
    n_list: Vec<u32>,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long)]
    theta: Option<f64>,
    /// Worker threads; output does not depend on it.
    #[arg(long)]
    threads: Option<usize>,
    /// Also write the rows as a JSON array to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_experiment(s: &str) -> Result<ExperimentKind, String> {
    s.parse()
}

/// Runs one invocation. `args` excludes the program name.
pub fn dispatch<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("absind"))
        .chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string().into_bytes()),
                _ => {
                    let text = e.to_string();
                    let line = text.lines().next().unwrap_or("invalid arguments");
                    Outcome::error(line.trim_start_matches("error: "))
                }
            };
        }
    };
    match run(cli.command) {
        Ok(outcome) => outcome,
        Err(message) => Outcome::error(message),
    }
}

fn read_function(path: &Path, format: Format, n: u32) -> Result<BooleanFunction, String> {
    let bytes = fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    BooleanFunction::parse(&bytes, format, n).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), String> {
    fs::write(path, bytes).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn to_json<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("report serializes");
    out.push(b'\n');
    out
}

#[derive(Serialize)]
struct AnalyzeOutput<'a> {
    #[serde(flatten)]
    summary: &'a IndicatorSummary,
    table_sha256: String,
}

#[derive(Serialize)]
struct TestOutput<'a> {
    #[serde(flatten)]
    report: &'a TestReport,
    table_sha256: String,
}

#[derive(Serialize)]
struct GenOutput {
    kind: String,
    n: u32,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    inner_seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    format: Format,
    table_sha256: String,
}

fn err(e: Error) -> String {
    e.to_string()
}

fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Analyze(input) => {
            let f = read_function(&input.input, input.format, input.n)?;
            let summary = analyze(&f);
            Ok(Outcome::ok(to_json(&AnalyzeOutput { summary: &summary, table_sha256: f.table_hash() })))
        }
        Command::Test { input, alpha } => {
            let config = TestConfig::new(alpha).map_err(err)?;
            let f = read_function(&input.input, input.format, input.n)?;
            let report = run_test(&f, &config);
            let stdout = to_json(&TestOutput { report: &report, table_sha256: f.table_hash() });
            let code = if report.rejected() { EXIT_REJECTED } else { EXIT_OK };
            Ok(Outcome { code, stdout, stderr: Vec::new() })
        }
        Command::Gen(args) => generate(args),
        Command::Experiment(args) => {
            let mut config =
                ExperimentConfig::new(args.experiment, args.n_list, args.trials, Seed(args.seed));
            config.epsilon = args.epsilon;
            config.theta = args.theta;
            let result = run_experiment(&config, args.threads).map_err(err)?;
            if let Some(path) = &args.out {
                write_file(path, &result.to_json())?;
            }
            Ok(Outcome::ok(result.to_csv()))
        }
        Command::Oracle { n, out } => {
            let dist = exhaustive_oracle(n).map_err(err)?;
            if let Some(path) = &out {
                write_file(path, &to_json(&dist))?;
            }
            let mut writer = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            let io = |e: csv::Error| e.to_string();
            writer.write_record(["n", "statistic", "value", "count"]).map_err(io)?;
            let histograms: [(&str, Vec<(String, u64)>); 3] = [
                ("absolute_indicator", dist.absolute_indicator.iter().map(|(k, v)| (k.to_string(), *v)).collect()),
                ("nonlinearity", dist.nonlinearity.iter().map(|(k, v)| (k.to_string(), *v)).collect()),
                ("sum_of_squares", dist.sum_of_squares.iter().map(|(k, v)| (k.to_string(), *v)).collect()),
            ];
            for (name, entries) in histograms {
                for (value, count) in entries {
                    writer
                        .write_record([n.to_string(), name.to_string(), value, count.to_string()])
                        .map_err(io)?;
                }
            }
            Ok(Outcome::ok(writer.into_inner().map_err(|e| e.to_string())?))
        }
    }
}

fn inner_function(args: &GenArgs) -> Result<(BooleanFunction, Option<u64>), String> {
    let m = args.n.checked_sub(1).ok_or("--n must be at least 3 for two-period kinds")?;
    match (&args.inner_in, args.inner_seed) {
        (Some(path), None) => Ok((read_function(path, args.format, m)?, None)),
        (None, Some(seed)) => Ok((random_function(m, Seed(seed)).map_err(err)?, Some(seed))),
        (Some(_), Some(_)) => Err("--inner-in and --inner-seed are mutually exclusive".into()),
        (None, None) => Err("two-period kinds need --inner-in or --inner-seed".into()),
    }
}

fn generate(args: GenArgs) -> Result<Outcome, String> {
    let seed = Seed(args.seed);
    let needs_inner = matches!(args.kind, GenKind::TwoPeriod | GenKind::Disturbed);
    if !needs_inner && (args.inner_in.is_some() || args.inner_seed.is_some()) {
        return Err("--inner-in/--inner-seed only apply to two-period and disturbed".into());
    }
    if args.kind != GenKind::Disturbed && args.r.is_some() {
        return Err("--r only applies to --kind disturbed".into());
    }
    let mut inner_seed = None;
    let f = match args.kind {
        GenKind::Random => random_function(args.n, seed).map_err(err)?,
        GenKind::Constant => BooleanFunction::zero(args.n).map_err(err)?,
        GenKind::Affine => random_affine(args.n, seed).map_err(err)?,
        GenKind::TwoPeriod | GenKind::Disturbed => {
            let (g, s) = inner_function(&args)?;
            inner_seed = s;
            let f = two_period_extend(&g).map_err(err)?;
            if args.kind == GenKind::Disturbed {
                let r = args.r.ok_or("--kind disturbed needs --r")?;
                disturb(&f, r, seed).map_err(err)?
            } else {
                f
            }
        }
    };
    let table = f.serialize(args.format);
    let kind = args.kind.to_possible_value().expect("no skipped variants").get_name().to_string();
    let echo = GenOutput {
        kind,
        n: f.n(),
        seed: args.seed,
        inner_seed,
        r: args.r,
        format: args.format,
        table_sha256: f.table_hash(),
    };
    match &args.out {
        Some(path) => {
            write_file(path, &table)?;
            Ok(Outcome::ok(to_json(&echo)))
        }
        None => Ok(Outcome::ok(table)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_flag_is_usage_error() {
        let out = dispatch(["analyze", "--bogus", "1"]);
        assert_eq!(out.code, EXIT_ERROR);
        assert!(out.stdout.is_empty());
        let msg = String::from_utf8(out.stderr).unwrap();
        assert_eq!(msg.lines().count(), 1, "{msg}");
    }

    #[test]
    fn missing_command_is_usage_error() {
        assert_eq!(dispatch(Vec::<String>::new()).code, EXIT_ERROR);
    }

    #[test]
    fn bad_alpha_is_error() {
        let out = dispatch(["test", "--in", "/nonexistent", "--format", "raw", "--n", "4", "--alpha", "2"]);
        assert_eq!(out.code, EXIT_ERROR);
        assert!(String::from_utf8(out.stderr).unwrap().contains("(0, 1)"));
    }

    #[test]
    fn gen_to_stdout() {
        let out = dispatch(["gen", "--kind", "constant", "--n", "3", "--format", "ascii01"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, b"00000000");
    }

    #[test]
    fn gen_flag_combinations() {
        assert_eq!(dispatch(["gen", "--kind", "two-period", "--n", "4"]).code, EXIT_ERROR);
        assert_eq!(dispatch(["gen", "--kind", "disturbed", "--n", "4", "--inner-seed", "1"]).code, EXIT_ERROR);
        assert_eq!(dispatch(["gen", "--kind", "random", "--n", "4", "--r", "1"]).code, EXIT_ERROR);
        let out = dispatch(["gen", "--kind", "two-period", "--n", "4", "--inner-seed", "5", "--format", "hex"]);
        assert_eq!(out.code, 0);
        let f = BooleanFunction::parse(&out.stdout, Format::Hex, 4).unwrap();
        assert_eq!(crate::spectra::absolute_indicator(&f).0, 16);
    }
}
