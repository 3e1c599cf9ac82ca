//! Fast transforms against the naive double sums, plus the exact identities
//! every spectrum satisfies.

use absind::generators::random_function;
use absind::spectra::{
    absolute_indicator, analyze, autocorrelation_fast, autocorrelation_naive, nonlinearity,
    sum_of_squares, walsh_fast, walsh_naive,
};
use absind::{BooleanFunction, PointIndex, Seed};
use proptest::prelude::*;

fn arb_function(max_n: u32) -> impl Strategy<Value = BooleanFunction> {
    (2u32..=max_n, any::<u64>()).prop_map(|(n, s)| random_function(n, Seed(s)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn fast_equals_naive(f in arb_function(9)) {
        prop_assert_eq!(walsh_fast(&f), walsh_naive(&f).unwrap());
        let auto = autocorrelation_fast(&f);
        for u in 0..f.len() {
            prop_assert_eq!(auto.values()[u], autocorrelation_naive(&f, PointIndex::new(u)).unwrap());
        }
    }

    #[test]
    fn parseval_and_parity(f in arb_function(12)) {
        let n = f.n();
        let w = walsh_fast(&f);
        prop_assert_eq!(w.energy(), 1u128 << (2 * n));
        prop_assert!(w.values().iter().all(|v| v % 2 == 0 && v.unsigned_abs() <= 1 << n));
    }

    #[test]
    fn autocorrelation_identities(f in arb_function(12)) {
        let n = f.n();
        let w = walsh_fast(&f);
        let a = autocorrelation_fast(&f);
        prop_assert_eq!(a.values()[0], 1i64 << n);
        prop_assert!(a.values().iter().all(|v| v % 4 == 0 && v.unsigned_abs() <= 1 << n));
        prop_assert_eq!(a.sum_of_squares(), w.sum_of_fourth_powers_scaled());
        prop_assert!(a.sum_of_squares() >= 1u128 << (2 * n));
    }

    #[test]
    fn convolution_identity(f in arb_function(7)) {
        let n = f.n();
        let w = walsh_fast(&f);
        let a = autocorrelation_fast(&f);
        for u in 0..f.len() {
            let rhs: i64 = w.values().iter().enumerate().map(|(v, &c)| {
                let sq = i64::from(c) * i64::from(c);
                if PointIndex::new(u).dot(PointIndex::new(v)) { -sq } else { sq }
            }).sum();
            prop_assert_eq!(a.values()[u] << n, rhs);
        }
    }

    #[test]
    fn summary_is_consistent(f in arb_function(12)) {
        let s = analyze(&f);
        let n = f.n();
        prop_assert_eq!(s.nonlinearity, nonlinearity(&f));
        prop_assert_eq!((s.absolute_indicator, s.argmax_u), absolute_indicator(&f));
        prop_assert_eq!(s.sum_of_squares, sum_of_squares(&f));
        prop_assert!(s.argmax_u.value() != 0);
        prop_assert!(s.absolute_indicator <= 1 << n);
        let bent_bound = (1u64 << (n - 1)) as f64 - ((n as f64) / 2.0 - 1.0).exp2();
        prop_assert!(s.nonlinearity as f64 <= bent_bound);
        // argmax is the smallest index attaining the maximum
        let a = autocorrelation_fast(&f);
        let first = (1..f.len()).find(|&u| a.values()[u].unsigned_abs() == s.absolute_indicator).unwrap();
        prop_assert_eq!(s.argmax_u.value(), first);
    }
}

#[test]
fn every_affine_function_is_linear_structure() {
    for n in 1..=6u32 {
        for mask in 0..1usize << n {
            for c in [false, true] {
                let f = BooleanFunction::affine(n, PointIndex::new(mask), c).unwrap();
                let s = analyze(&f);
                assert_eq!(s.nonlinearity, 0, "n={n} mask={mask}");
                assert_eq!(s.absolute_indicator, 1 << n);
            }
        }
    }
}

#[test]
fn analysis_is_deterministic() {
    let f = random_function(11, Seed(5)).unwrap();
    assert_eq!(analyze(&f), analyze(&f.clone()));
}
