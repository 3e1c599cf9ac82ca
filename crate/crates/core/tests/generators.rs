use absind::generators::{disturb, random_function, two_period_extend};
use absind::spectra::{absolute_indicator, autocorrelation_at, nonlinearity};
use absind::{BooleanFunction, Error, PointIndex, Seed};
use proptest::prelude::*;

#[test]
fn table_bits_are_balanced() {
    let draws = 100_000u64;
    let mut ones = [0u64; 256];
    for t in 0..draws {
        let f = random_function(8, Seed(99).stream(t)).unwrap();
        for (i, count) in ones.iter_mut().enumerate() {
            *count += u64::from(f.bit(i));
        }
    }
    for (i, &count) in ones.iter().enumerate() {
        let mean = count as f64 / draws as f64;
        assert!((mean - 0.5).abs() <= 0.01, "bit {i}: {mean}");
    }
}

#[test]
fn dimension_one_is_rejected() {
    assert!(matches!(random_function(1, Seed(3)), Err(Error::InvalidDimension { .. })));
}

#[test]
fn disturbing_a_two_period_function_at_ten() {
    let f = two_period_extend(&random_function(9, Seed(11)).unwrap()).unwrap();
    let fr = disturb(&f, 3, Seed(7)).unwrap();
    assert!(nonlinearity(&fr).abs_diff(nonlinearity(&f)) <= 3);
    assert_eq!(fr.distance(&f), 3);
}

fn arb_inner() -> impl Strategy<Value = BooleanFunction> {
    (2u32..=12, any::<u64>()).prop_map(|(m, s)| random_function(m, Seed(s)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn two_period_structure(g in arb_inner()) {
        let f = two_period_extend(&g).unwrap();
        let n = f.n();
        prop_assert_eq!(n, g.n() + 1);
        prop_assert_eq!(nonlinearity(&f), 2 * nonlinearity(&g));
        let (delta, _) = absolute_indicator(&f);
        prop_assert_eq!(delta, 1u64 << n);
        let half = PointIndex::new(1 << (n - 1));
        prop_assert_eq!(autocorrelation_at(&f, half).unwrap(), 1i64 << n);
    }

    #[test]
    fn disturbance_bounds(g in arb_inner(), r in 0usize..=16, seed in any::<u64>()) {
        let f = two_period_extend(&g).unwrap();
        let n = f.n();
        let r = r.min(f.len());
        let fr = disturb(&f, r, Seed(seed)).unwrap();
        prop_assert_eq!(fr.distance(&f), r as u64);
        let (delta, _) = absolute_indicator(&fr);
        let half = PointIndex::new(1 << (n - 1));
        prop_assert!(delta >= autocorrelation_at(&fr, half).unwrap().unsigned_abs());
        prop_assert!(delta as i64 >= (1i64 << n) - 4 * r as i64);
        prop_assert!(nonlinearity(&fr).abs_diff(nonlinearity(&f)) <= r as u64);
        prop_assert_eq!(disturb(&f, r, Seed(seed)).unwrap(), fr);
    }

    #[test]
    fn any_function_nonlinearity_moves_at_most_r(n in 2u32..=12, s in any::<u64>(), r in 0usize..=16) {
        let f = random_function(n, Seed(s)).unwrap();
        let r = r.min(f.len());
        let fr = disturb(&f, r, Seed(s).stream(1)).unwrap();
        prop_assert!(nonlinearity(&fr).abs_diff(nonlinearity(&f)) <= r as u64);
    }
}
