//! Seeded constructions: uniform random functions, two-period extensions and
//! disturbed copies.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::function::{BooleanFunction, PointIndex, MAX_VARIABLES};
use crate::rng::Seed;

/// Uniformly random function on `n` variables.
///
/// Table word `k` is the `k`-th SplitMix64 output for `seed`; for `n < 6` the
/// low `2^n` bits of the first output are used.
pub fn random_function(n: u32, seed: Seed) -> Result<BooleanFunction> {
    if !(2..=MAX_VARIABLES).contains(&n) {
        return Err(Error::InvalidDimension { n, min: 2, max: MAX_VARIABLES });
    }
    let mut rng = seed.rng();
    let words = ((1usize << n) + 63) / 64;
    BooleanFunction::from_words(n, (0..words).map(|_| rng.next_u64()).collect())
}

/// Random affine function `x -> a.x + c`, with `a` and `c` drawn from `seed`.
pub fn random_affine(n: u32, seed: Seed) -> Result<BooleanFunction> {
    let mut rng = seed.rng();
    let mask = rng.next_below(1 << n) as usize;
    let constant = rng.next_u64() & 1 == 1;
    BooleanFunction::affine(n, PointIndex::new(mask), constant)
}

/// `f(x, b) = g(x)` on one more variable; the new coordinate is the top index
/// bit, so the table of `f` is the table of `g` written twice.
pub fn two_period_extend(g: &BooleanFunction) -> Result<BooleanFunction> {
    let m = g.n();
    if !(2..MAX_VARIABLES).contains(&m) {
        return Err(Error::InvalidDimension { n: m, min: 2, max: MAX_VARIABLES - 1 });
    }
    let words = if m >= 6 {
        g.words().iter().chain(g.words()).copied().collect()
    } else {
        let w = g.words()[0];
        vec![w | (w << (1u32 << m))]
    };
    BooleanFunction::from_words(m + 1, words)
}

/// Flips the table at `r` distinct points chosen uniformly without
/// replacement (partial Fisher–Yates over the point indices).
pub fn disturb(f: &BooleanFunction, r: usize, seed: Seed) -> Result<BooleanFunction> {
    let mut out = f.clone();
    for site in disturbance_sites(f.len(), r, seed)? {
        out.flip_in_place(site.value());
    }
    Ok(out)
}

/// Points where `disturb(f, r, seed)` differs from `f`, in draw order.
pub fn disturbance_sites(len: usize, r: usize, seed: Seed) -> Result<Vec<PointIndex>> {
    if r > len {
        return Err(Error::TooManyFlips { r, len });
    }
    let mut rng = seed.rng();
    // Sparse view of the index permutation: only displaced slots are stored.
    let mut displaced: HashMap<usize, usize> = HashMap::with_capacity(2 * r);
    let mut sites = Vec::with_capacity(r);
    for i in 0..r {
        let j = i + rng.next_below((len - i) as u64) as usize;
        let at_i = displaced.get(&i).copied().unwrap_or(i);
        let at_j = displaced.get(&j).copied().unwrap_or(j);
        displaced.insert(j, at_i);
        sites.push(PointIndex::new(at_j));
    }
    Ok(sites)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::Format;
    use crate::spectra::{absolute_indicator, autocorrelation_naive, nonlinearity};

    #[test]
    fn random_function_golden_value() {
        let f = random_function(3, Seed(42)).unwrap();
        let first = Seed(42).rng().next_u64();
        assert_eq!(f.words(), &[first & 0xff]);
        assert_eq!(f.to_string(), "10101001");
    }

    #[test]
    fn random_function_rejects_small_n() {
        assert_eq!(
            random_function(1, Seed(0)).unwrap_err(),
            Error::InvalidDimension { n: 1, min: 2, max: 30 }
        );
    }

    #[test]
    fn random_function_is_deterministic() {
        let a = random_function(10, Seed(7)).unwrap();
        let b = random_function(10, Seed(7)).unwrap();
        assert_eq!(a.serialize(Format::Raw), b.serialize(Format::Raw));
        assert_ne!(a, random_function(10, Seed(8)).unwrap());
    }

    #[test]
    fn two_period_examples() {
        let g = BooleanFunction::parse(b"00000001", Format::Ascii01, 3).unwrap();
        let f = two_period_extend(&g).unwrap();
        assert_eq!(f.to_string(), "0000000100000001");
        assert_eq!(nonlinearity(&f), 2);
        assert_eq!(absolute_indicator(&f), (16, PointIndex::new(8)));

        let zero = BooleanFunction::zero(2).unwrap();
        assert_eq!(two_period_extend(&zero).unwrap(), BooleanFunction::zero(3).unwrap());

        assert!(two_period_extend(&BooleanFunction::zero(1).unwrap()).is_err());
    }

    #[test]
    fn two_period_wide_table() {
        let g = random_function(7, Seed(3)).unwrap();
        let f = two_period_extend(&g).unwrap();
        for x in 0..128 {
            assert_eq!(f.bit(x), g.bit(x));
            assert_eq!(f.bit(x + 128), g.bit(x));
        }
    }

    #[test]
    fn single_flip_of_zero() {
        for seed in 0..20 {
            let f = disturb(&BooleanFunction::zero(3).unwrap(), 1, Seed(seed)).unwrap();
            assert_eq!(f.weight(), 1);
            let (ai, _) = absolute_indicator(&f);
            assert_eq!(ai, 4);
            let worst = (1..8)
                .map(|u| autocorrelation_naive(&f, PointIndex::new(u)).unwrap().unsigned_abs())
                .max()
                .unwrap();
            assert_eq!(worst, 4);
        }
    }

    #[test]
    fn disturb_zero_flips_is_identity() {
        let f = random_function(6, Seed(1)).unwrap();
        assert_eq!(disturb(&f, 0, Seed(99)).unwrap(), f);
    }

    #[test]
    fn disturb_flips_exactly_r_points() {
        let f = random_function(5, Seed(11)).unwrap();
        for r in [1, 5, 31, 32] {
            let d = disturb(&f, r, Seed(r as u64)).unwrap();
            assert_eq!(d.distance(&f), r as u64);
            let sites = disturbance_sites(32, r, Seed(r as u64)).unwrap();
            for s in sites {
                assert_ne!(d.bit(s.value()), f.bit(s.value()));
            }
        }
        assert_eq!(disturb(&f, 33, Seed(0)).unwrap_err(), Error::TooManyFlips { r: 33, len: 32 });
    }

    #[test]
    fn disturbed_two_period_nonlinearity() {
        let g = random_function(9, Seed(1)).unwrap();
        let f = two_period_extend(&g).unwrap();
        let fr = disturb(&f, 3, Seed(7)).unwrap();
        assert!(nonlinearity(&fr).abs_diff(nonlinearity(&f)) <= 3);
    }
}
