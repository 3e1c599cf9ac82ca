//! Empirical tails against their bounds, written as CSV to stdout.

use std::io::Write;

use absind::experiments::{run_experiment, ExperimentConfig, ExperimentKind, ExperimentResult};
use absind::Seed;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let configs = [
        ExperimentConfig::new(ExperimentKind::Tail, vec![8, 10, 12], 10_000, Seed(2)).with_epsilon(0.5),
        ExperimentConfig::new(ExperimentKind::SingleUTail, vec![8, 10], 1_000_000, Seed(3)),
        ExperimentConfig::new(ExperimentKind::PairTail, vec![7, 10], 100_000, Seed(4)),
        ExperimentConfig::new(ExperimentKind::Concentration, vec![8, 10], 10_000, Seed(5)).with_theta(150.0),
    ];
    let mut rows = Vec::new();
    for config in &configs {
        rows.extend(run_experiment(config, None)?.rows);
    }
    std::io::stdout().write_all(&ExperimentResult { rows }.to_csv())?;
    Ok(())
}
