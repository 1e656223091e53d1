//! Derivatives 𝓘_α^{(k)}(z).
//!
//! Near the origin the Laurent form 𝓘_α P_k + 𝓘_{α+1} Q_k cancels badly
//! (its pieces grow like z^{−k}), so small |z| uses the termwise
//! differentiated power series instead.

use num::complex::Complex64;

use crate::bessel::cal_i::{cal_i_unchecked, check_order};
use crate::bessel::laurent::deriv_poly_ladder;
use crate::error::{Error, Result};

const POWER_SERIES_RADIUS: f64 = 4.0;

/// 𝓘_α^{(k)}(z).
pub fn cal_i_deriv(alpha: f64, k: usize, z: Complex64) -> Result<Complex64> {
    Ok(cal_i_derivs(alpha, k, z)?[k])
}

/// 𝓘_α^{(m)}(z) for m = 0..=kmax.
pub fn cal_i_derivs(alpha: f64, kmax: usize, z: Complex64) -> Result<Vec<Complex64>> {
    check_order(alpha)?;
    if kmax >= 1 && z.norm() == 0.0 {
        return Err(Error::ZeroArgumentWithPole(kmax));
    }
    if z.norm() <= POWER_SERIES_RADIUS {
        Ok((0..=kmax).map(|k| power_series_deriv(alpha, k, z)).collect())
    } else {
        laurent_derivs(alpha, kmax, z)
    }
}

/// The Laurent route on its own; exposed for cross-checks.
pub fn laurent_derivs(alpha: f64, kmax: usize, z: Complex64) -> Result<Vec<Complex64>> {
    let ladder = deriv_poly_ladder(&alpha, kmax)?;
    let i0 = cal_i_unchecked(alpha, z);
    let i1 = cal_i_unchecked(alpha + 1.0, z);
    Ok(ladder.iter().map(|(p, q)| i0 * p.eval(z) + i1 * q.eval(z)).collect())
}

/// Σ_n c_n (2n)(2n−1)···(2n−k+1) z^{2n−k} with c_n = 1/(4^n n! (α+1)_n).
pub fn power_series_deriv(alpha: f64, k: usize, z: Complex64) -> Complex64 {
    let mut c = 1.0f64;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut small = 0;
    let n0 = k.div_ceil(2);
    for n in 0..4000usize {
        if n > 0 {
            let nf = n as f64;
            c /= 4.0 * nf * (alpha + nf);
        }
        if n < n0 {
            continue;
        }
        let m = 2 * n;
        let falling: f64 = (0..k).map(|i| (m - i) as f64).product();
        let term = c * falling * z.powi((m - k) as i32);
        sum += term;
        if n > n0 + k && term.norm() < 1e-17 * sum.norm() {
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
