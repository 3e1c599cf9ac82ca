use absind::generators::{disturb, random_function, two_period_extend};
use absind::randomness::{ai_threshold, run_test, TestConfig, Verdict};
use absind::{BooleanFunction, Seed};

fn ai_rejections(n: u32, alpha: f64, trials: u64, seed: Seed) -> u64 {
    let config = TestConfig::new(alpha).unwrap();
    (0..trials)
        .filter(|&t| {
            let f = random_function(n, seed.stream(t)).unwrap();
            run_test(&f, &config).verdicts.ai == Verdict::Fail
        })
        .count() as u64
}

#[test]
fn two_period_ten_is_rejected() {
    let f = two_period_extend(&random_function(9, Seed(21)).unwrap()).unwrap();
    let report = run_test(&f, &TestConfig::default());
    assert_eq!(report.absolute_indicator, 1024);
    assert_eq!(report.verdicts.ai, Verdict::Fail);
    let rejection = report.rejections.iter().find(|r| r.statistic == "absolute_indicator").unwrap();
    assert!((rejection.threshold - 232.9).abs() < 0.05);
}

#[test]
fn random_functions_pass_at_ten() {
    let trials = 10_000;
    let rejected = ai_rejections(10, 0.01, trials, Seed(8));
    assert!(1.0 - rejected as f64 / trials as f64 >= 0.99, "{rejected} rejections");
}

#[test]
fn false_rejection_rate_is_at_most_alpha() {
    for n in 8..=14 {
        for alpha in [0.05, 0.01] {
            let trials = 10_000;
            let rate = ai_rejections(n, alpha, trials, Seed(u64::from(n))) as f64 / trials as f64;
            assert!(rate <= alpha, "n={n} alpha={alpha}: {rate}");
        }
    }
}

#[test]
fn mu_decreases_in_alpha() {
    for n in 2..=20 {
        let mut last = f64::INFINITY;
        for alpha in [0.001, 0.01, 0.05, 0.1, 0.5, 0.9] {
            let (_, mu) = ai_threshold(n, alpha).unwrap();
            assert!(mu < last);
            last = mu;
        }
    }
}

#[test]
fn two_period_functions_always_fail() {
    let config = TestConfig::default();
    for n in 8..=16 {
        for s in 0..20 {
            let f = two_period_extend(&random_function(n - 1, Seed(s)).unwrap()).unwrap();
            let report = run_test(&f, &config);
            assert_eq!(report.verdicts.ai, Verdict::Fail, "n={n} seed={s}");
            assert!(!report.rejections.is_empty());
        }
    }
}

#[test]
fn disturbed_functions_fail_below_the_flip_budget() {
    let config = TestConfig::default();
    for n in 10..=14 {
        let (_, mu) = ai_threshold(n, 0.01).unwrap();
        let budget = (((1u64 << n) as f64 - mu) / 4.0).floor() as usize;
        for (i, r) in [1, budget / 2, budget].into_iter().enumerate() {
            let g = random_function(n - 1, Seed(i as u64)).unwrap();
            let f = disturb(&two_period_extend(&g).unwrap(), r, Seed(100 + i as u64)).unwrap();
            assert_eq!(run_test(&f, &config).verdicts.ai, Verdict::Fail, "n={n} r={r}");
        }
    }
}

#[test]
fn constant_zero_fails_both() {
    let report = run_test(&BooleanFunction::zero(10).unwrap(), &TestConfig::default());
    assert_eq!(report.verdicts.nl, Verdict::Fail);
    assert_eq!(report.verdicts.ai, Verdict::Fail);
    assert_eq!(report.rejections.len(), 2);
}

#[test]
fn small_n_is_inconclusive() {
    let f = random_function(4, Seed(1)).unwrap();
    assert_eq!(run_test(&f, &TestConfig::default()).verdicts.ai, Verdict::Inconclusive);
}
