//! Mean of Δ(f) / sqrt(l ln l) over random functions for growing n.
//!
//! ```text
//! cargo run --release --example monte_carlo_ratio -- 2000
//! ```

use absind::experiments::{run_experiment, ExperimentConfig, ExperimentKind};
use absind::Seed;

fn main() -> absind::Result<()> {
    let trials = std::env::args().nth(1).and_then(|t| t.parse().ok()).unwrap_or(500);
    let config = ExperimentConfig::new(ExperimentKind::Ratio, vec![6, 8, 10, 12, 14], trials, Seed(1));
    let result = run_experiment(&config, None)?;
    println!(" n  trials  mean ratio  stddev");
    for row in &result.rows {
        println!(
            "{:2} {:7} {:11.4} {:7.4}",
            row.n,
            row.trials,
            row.mean_ratio.unwrap_or(f64::NAN),
            row.stddev_ratio.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
