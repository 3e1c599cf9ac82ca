//! A two-period function keeps twice the nonlinearity of its half but has
//! the worst possible absolute indicator. Random flips do not hide it.

use absind::generators::{disturb, random_function, two_period_extend};
use absind::randomness::{ai_threshold, run_test, TestConfig};
use absind::spectra::{analyze, nonlinearity};
use absind::Seed;

fn main() -> absind::Result<()> {
    let n = 12;
    let g = random_function(n - 1, Seed(7))?;
    let f = two_period_extend(&g)?;
    let s = analyze(&f);
    println!("NL(g) = {}, NL(f) = {}", nonlinearity(&g), s.nonlinearity);
    println!("Δ(f) = {} at u = {}", s.absolute_indicator, s.argmax_u);

    let (_, mu) = ai_threshold(n, 0.01)?;
    let budget = (((1u64 << n) as f64 - mu) / 4.0).floor() as usize;
    println!("AI threshold {mu:.1}; up to {budget} flips keep Δ above it");
    let config = TestConfig::default();
    for r in [1, 16, 128, budget] {
        let fr = disturb(&f, r, Seed(r as u64))?;
        let report = run_test(&fr, &config);
        println!(
            "r = {r:5}: Δ = {:5} (>= {:5}), NL moved by {:3}, AI verdict {:?}",
            report.absolute_indicator,
            (1i64 << n) - 4 * r as i64,
            report.nonlinearity.abs_diff(s.nonlinearity),
            report.verdicts.ai
        );
    }
    Ok(())
}
