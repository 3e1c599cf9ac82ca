//! Walsh and autocorrelation spectra of the bent function x0x1 + x2x3,
//! computed by the fast transform and by the direct sums.

use absind::spectra::{autocorrelation_fast, autocorrelation_naive, walsh_fast, walsh_naive};
use absind::{BooleanFunction, PointIndex};

fn main() -> absind::Result<()> {
    let bent = BooleanFunction::from_fn(4, |x| {
        let b = |j: u32| x.value() >> j & 1 == 1;
        (b(0) & b(1)) ^ (b(2) & b(3))
    })?;
    let walsh = walsh_fast(&bent);
    let auto = autocorrelation_fast(&bent);
    assert_eq!(walsh, walsh_naive(&bent)?);

    println!("  u  walsh  autocorrelation");
    for u in 0..bent.len() {
        let direct = autocorrelation_naive(&bent, PointIndex::new(u))?;
        assert_eq!(direct, auto.values()[u]);
        println!("{u:3} {:6} {:16}", walsh.values()[u], auto.values()[u]);
    }
    println!("energy {} = 2^(2n)", walsh.energy());
    println!("nonlinearity {}", walsh.nonlinearity());
    println!("sum of squares {}", auto.sum_of_squares());
    Ok(())
}
