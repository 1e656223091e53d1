//! Gamma function (Lanczos approximation, g = 671/128, 14 terms) and the
//! Pochhammer symbol over any scalar field.

use std::f64::consts::PI;

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::scalar::Scalar;

const LANCZOS_SHIFT: f64 = 5.242_187_5;
const LANCZOS_C0: f64 = 0.999_999_999_999_997_1;
const LANCZOS: [f64; 14] = [
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];
const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

fn ln_gamma_lanczos(x: Complex64) -> Complex64 {
    let t = x + LANCZOS_SHIFT;
    let head = (x + 0.5) * t.ln() - t;
    let mut ser = Complex64::new(LANCZOS_C0, 0.0);
    let mut y = x;
    for c in LANCZOS {
        y += 1.0;
        ser += c / y;
    }
    head + (SQRT_2PI * ser / x).ln()
}

/// Γ(x) for real x. Exact products for small positive integers.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if x <= 0.0 && x == x.floor() {
        return Err(Error::GammaPole(x));
    }
    if x == x.floor() && x <= 30.0 {
        return Ok((2..x as u64).fold(1.0, |acc, k| acc * k as f64));
    }
    if x < 0.5 {
        let s = (PI * x).sin();
        return Ok(PI / (s * gamma_fn(1.0 - x)?));
    }
    Ok(ln_gamma_lanczos(Complex64::new(x, 0.0)).re.exp())
}

/// Γ(z) for complex z.
pub fn gamma_complex(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 {
        return gamma_fn(z.re).map(|g| Complex64::new(g, 0.0));
    }
    if z.re < 0.5 {
        let s = (PI * z).sin();
        return Ok(PI / (s * gamma_complex(1.0 - z)?));
    }
    Ok(ln_gamma_lanczos(z).exp())
}

/// Rising factorial a(a+1)···(a+n−1); exact in the rational field.
pub fn pochhammer<S: Scalar>(a: &S, n: usize) -> S {
    let mut acc = S::one();
    for k in 0..n {
        acc = acc * (a.clone() + S::from_i64(k as i64));
    }
    acc
}
