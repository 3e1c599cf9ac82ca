//! Fixed-precision text form for reals in reports.
//!
//! Every real is written in scientific notation with 17 significant digits,
//! which round-trips any `f64` exactly. Non-finite values become JSON `null`
//! and empty CSV cells.

use serde::Serializer;
use serde_json::value::RawValue;

/// `x` with 17 significant digits, e.g. `2.0000000000000000e0`.
pub fn format_real(x: f64) -> Option<String> {
    x.is_finite().then(|| format!("{x:.16e}"))
}

pub fn serialize_real<S: Serializer>(x: &f64, serializer: S) -> Result<S::Ok, S::Error> {
    match format_real(*x) {
        Some(text) => {
            let raw = RawValue::from_string(text).map_err(serde::ser::Error::custom)?;
            serializer.serialize_some(&raw)
        }
        None => serializer.serialize_none(),
    }
}

pub fn serialize_opt_real<S: Serializer>(x: &Option<f64>, serializer: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => serialize_real(v, serializer),
        None => serializer.serialize_none(),
    }
}
