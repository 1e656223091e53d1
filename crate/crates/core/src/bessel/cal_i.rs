//! 𝓘_ν(z) = Σ (z²/4)^n / (n! (ν+1)_n), the normalised modified Bessel function,
//! and the Dunkl kernel built from it.
//!
//! Evaluation regime is chosen from the cancellation exponent c = |z| − |Re z|
//! (terms grow like e^{|z|} while the value is of size e^{|Re z|}):
//! c ≤ 5 plain series, c ≤ 35 double-double series, otherwise the Hankel
//! asymptotic expansion of J_ν at w = ±iz.

use std::f64::consts::PI;

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::dd::{ComplexDD, DoubleDouble};
use crate::numerics::gamma::gamma_fn;

const SERIES_EPS: f64 = 1e-17;
const F64_CANCELLATION: f64 = 5.0;
const DD_CANCELLATION: f64 = 35.0;
const HANKEL_MIN: f64 = 25.0;
const MAX_TERMS: usize = 20_000;

pub(crate) fn check_order(nu: f64) -> Result<()> {
    if nu < 0.0 && nu.fract() == 0.0 {
        Err(Error::NegativeIntegerAlpha(nu.to_string()))
    } else if !nu.is_finite() {
        Err(Error::InvalidAlpha { alpha: nu.to_string(), reason: "not finite".into() })
    } else {
        Ok(())
    }
}

/// 𝓘_ν(z).
pub fn cal_i(nu: f64, z: Complex64) -> Result<Complex64> {
    check_order(nu)?;
    Ok(cal_i_unchecked(nu, z))
}

pub(crate) fn cal_i_unchecked(nu: f64, z: Complex64) -> Complex64 {
    let c = z.norm() - z.re.abs();
    if c <= F64_CANCELLATION {
        return series_f64(nu, z);
    }
    let iz = Complex64::new(-z.im, z.re);
    let w = if iz.re >= 0.0 { iz } else { -iz };
    let r = w.norm();
    let hankel_direct = r >= HANKEL_MIN.max(nu * nu / 2.0);
    if c <= DD_CANCELLATION && (r <= 40.0 || !hankel_direct) {
        return series_dd(nu, z);
    }
    let j = if hankel_direct { hankel_j(nu, w) } else { hankel_j_recurrence(nu, w) };
    let g = gamma_fn(nu + 1.0).expect("order checked");
    g * (2.0 / w).powf(nu) * j
}

/// Series stop rule: three consecutive terms below 1e−17 of the running sum.
fn series_f64(nu: f64, z: Complex64) -> Complex64 {
    let q = z * z * 0.25;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut small = 0;
    for n in 1..MAX_TERMS {
        let nf = n as f64;
        term = term * q / (nf * (nu + nf));
        sum += term;
        if term.norm() < SERIES_EPS * sum.norm() {
            small += 1;
            if small == 3 {
                break;
            }
        } else {
            small = 0;
        }
    }
    sum
}

fn series_dd(nu: f64, z: Complex64) -> Complex64 {
    let zz = ComplexDD::from_c64(z);
    let q = (zz * zz).scale(DoubleDouble::new(0.25));
    let nu = DoubleDouble::new(nu);
    let mut term = ComplexDD::ONE;
    let mut sum = term;
    let mut small = 0;
    for n in 1..MAX_TERMS {
        let nf = DoubleDouble::new(n as f64);
        term = (term * q).div_real(nf * (nu + nf));
        sum = sum + term;
        if term.norm_f64() < 1e-33 * sum.norm_f64() {
            small += 1;
            if small == 3 {
                break;
            }
        } else {
            small = 0;
        }
    }
    sum.to_c64()
}

/// Hankel's expansion J_ν(w) ≈ √(2/(πw)) (P cos χ − Q sin χ), |arg w| < π.
fn hankel_j(nu: f64, w: Complex64) -> Complex64 {
    let mu = 4.0 * nu * nu;
    let mut p = Complex64::new(1.0, 0.0);
    let mut q = Complex64::new(0.0, 0.0);
    let mut a = 1.0f64; // a_k(ν) without the sign
    let mut wk = Complex64::new(1.0, 0.0);
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        a *= (mu - odd * odd) / (k as f64 * 8.0);
        wk *= w;
        let t = a / wk;
        let mag = t.norm();
        if mag > prev {
            break;
        }
        prev = mag;
        // P collects (−1)^{k/2} a_k / w^k for even k, Q (−1)^{(k−1)/2} a_k / w^k for odd k.
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * t;
        } else {
            q += sign * t;
        }
        if mag < 1e-17 * p.norm().max(q.norm()) || mag == 0.0 {
            break;
        }
    }
    let chi = w - (nu / 2.0 + 0.25) * PI;
    (2.0 / (PI * w)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// Large orders: Hankel at the two lowest orders with the same fractional
/// part, then forward recurrence J_{m+1} = (2m/w) J_m − J_{m−1} (stable while m < |w|).
fn hankel_j_recurrence(nu: f64, w: Complex64) -> Complex64 {
    let base = nu - nu.floor();
    let mut jm1 = hankel_j(base, w);
    let mut jm = hankel_j(base + 1.0, w);
    let mut m = base + 1.0;
    if nu == base {
        return jm1;
    }
    while m + 0.5 < nu {
        let next = (2.0 * m / w) * jm - jm1;
        jm1 = jm;
        jm = next;
        m += 1.0;
    }
    jm
}

/// E_α(z) = 𝓘_α(z) + z/(2(α+1)) 𝓘_{α+1}(z).
pub fn dunkl_kernel(alpha: f64, z: Complex64) -> Result<Complex64> {
    check_order(alpha)?;
    Ok(dunkl_kernel_unchecked(alpha, z))
}

pub(crate) fn dunkl_kernel_unchecked(alpha: f64, z: Complex64) -> Complex64 {
    cal_i_unchecked(alpha, z) + z / (2.0 * (alpha + 1.0)) * cal_i_unchecked(alpha + 1.0, z)
}
