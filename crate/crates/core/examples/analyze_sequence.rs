//! Parse a truth table and print its spectral indicators.
//!
//! ```text
//! cargo run --example analyze_sequence -- 0110100110010110
//! ```

use absind::spectra::analyze;
use absind::{BooleanFunction, Format};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = std::env::args().nth(1).unwrap_or_else(|| "0001011000010001".to_string());
    let n = table.len().trailing_zeros();
    let f = BooleanFunction::parse(table.as_bytes(), Format::Ascii01, n)?;
    let s = analyze(&f);
    println!("table              {f}");
    println!("hex                {}", String::from_utf8(f.serialize(Format::Hex))?);
    println!("n                  {}", s.n);
    println!("weight             {}", f.weight());
    println!("nonlinearity       {}", s.nonlinearity);
    println!("absolute indicator {} (u = {})", s.absolute_indicator, s.argmax_u);
    println!("sum of squares     {}", s.sum_of_squares);
    println!("ratio to 2 sqrt(l ln l) {:.4}", s.ai_ratio);
    Ok(())
}
