//! Fixed 17-significant-digit rendering shared by JSON and TSV output.

use num::complex::Complex64;
use serde_json::Value;

/// `x` with 17 significant digits in scientific notation; non-finite values
/// render as `nan`, `inf` or `-inf`.
pub fn sig17(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{:.16e}", x)
    }
}

/// JSON number carrying exactly the [`sig17`] digits. Non-finite values become `null`.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    serde_json::from_str(&sig17(x)).expect("sig17 output is valid JSON")
}

/// Complex value as a `[re, im]` pair.
pub fn complex(z: Complex64) -> Value {
    Value::Array(vec![num(z.re), num(z.im)])
}

/// TSV rendering: a bare real number when the imaginary part is exactly zero,
/// `re+imi` otherwise.
pub fn complex_tsv(z: Complex64) -> String {
    if z.im == 0.0 {
        sig17(z.re)
    } else if z.im.is_finite() {
        format!("{}{:+.16e}i", sig17(z.re), z.im)
    } else {
        format!("{}+{}i", sig17(z.re), sig17(z.im))
    }
}
