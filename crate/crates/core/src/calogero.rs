//! Calogero–Dunkl numbers 𝔞_{n,α,u}: Σ 𝔞_n t^n = 𝓘_α(t+u)/((t+u)𝓘_{α+1}(t+u)).

use num::complex::Complex64;
use serde_json::{json, Value};

use crate::apostol_euler::check_u;
use crate::bessel::deriv::cal_i_derivs;
use crate::bessel::laurent::deriv_poly_ladder;
use crate::bessel::zeros::{ZeroKind, ZeroTable};
use crate::error::{Error, Result};
use crate::format;

#[derive(Clone, Debug, PartialEq)]
pub struct CalogeroNumbers {
    pub alpha: f64,
    pub u: Complex64,
    pub values: Vec<Complex64>,
    pub residuals: Vec<f64>,
}

/// Solves d_n/n! = 2(1+α) Σ_{j≤n} 𝔞_j d_{n−j+1}/(n−j)! for ascending n, where
/// d_k stands for 𝓘_α^{(k)}(u) up to a common nonzero factor.
fn solve(alpha: f64, d: &[Complex64], n: usize) -> (Vec<Complex64>, Vec<f64>) {
    let c = 2.0 * (1.0 + alpha);
    let mut inv_fact = vec![1.0f64; n + 2];
    for k in 1..n + 2 {
        inv_fact[k] = inv_fact[k - 1] / k as f64;
    }
    let pivot = c * d[1];
    let mut a: Vec<Complex64> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let s: Complex64 = (0..m).map(|j| a[j] * d[m - j + 1] * inv_fact[m - j]).sum();
        a.push((d[m] * inv_fact[m] - c * s) / pivot);
    }
    let residuals = (0..=n)
        .map(|m| {
            let rhs: Complex64 = (0..=m).map(|j| c * a[j] * d[m - j + 1] * inv_fact[m - j]).sum();
            let lhs = d[m] * inv_fact[m];
            (lhs - rhs).norm() / lhs.norm().max(pivot.norm())
        })
        .collect();
    (a, residuals)
}

pub fn calogero_numbers(alpha: f64, u: Complex64, n: usize) -> Result<CalogeroNumbers> {
    check_u(alpha, u)?;
    let d = cal_i_derivs(alpha, n + 1, u)?;
    let (values, residuals) = solve(alpha, &d, n);
    Ok(CalogeroNumbers { alpha, u, values, residuals })
}

/// 𝔞_0..𝔞_N at u = i j_l, through 𝓘_α^{(k)}(i j_l) = 𝓘_{α+1}(i j_l) Q_k(i j_l).
pub fn calogero_at_izero(alpha: f64, table: &ZeroTable, l: usize, n: usize) -> Result<CalogeroNumbers> {
    if table.kind != ZeroKind::J || table.alpha != alpha {
        return Err(Error::PreconditionViolated(format!("need a j-table for alpha = {alpha}")));
    }
    let u = Complex64::new(0.0, table.signed(l as i64)?);
    let ladder = deriv_poly_ladder(&alpha, n + 1)?;
    let mut d: Vec<Complex64> = ladder.iter().map(|(_, q)| q.eval(u)).collect();
    d[0] = Complex64::new(0.0, 0.0);
    let (values, residuals) = solve(alpha, &d, n);
    Ok(CalogeroNumbers { alpha, u, values, residuals })
}

impl CalogeroNumbers {
    /// Relative leakage from "𝔞_n real for odd n, imaginary for even n".
    pub fn izero_structure_leakage(&self) -> f64 {
        let scale = self.values.iter().map(|v| v.norm()).fold(1e-300, f64::max);
        self.values
            .iter()
            .enumerate()
            .map(|(n, v)| if n % 2 == 1 { v.im.abs() } else { v.re.abs() } / scale)
            .fold(0.0, f64::max)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": "calogero",
            "alpha": format::num(self.alpha),
            "u": format::complex(self.u),
            "values": self.values.iter().map(|&v| format::complex(v)).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bessel::cal_i::cal_i;
    use crate::bessel::zeros::zeros_j;

    /// Taylor coefficients of f(u + t) by the trapezoid rule on |t| = r.
    fn cauchy_coeffs(f: impl Fn(Complex64) -> Complex64, r: f64, n: usize) -> Vec<Complex64> {
        let m = 256;
        let samples: Vec<Complex64> = (0..m)
            .map(|k| f(Complex64::from_polar(r, 2.0 * std::f64::consts::PI * k as f64 / m as f64)))
            .collect();
        (0..=n)
            .map(|p| {
                let s: Complex64 = samples
                    .iter()
                    .enumerate()
                    .map(|(k, v)| v * Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * (k * p) as f64 / m as f64))
                    .sum();
                s / (m as f64 * r.powi(p as i32))
            })
            .collect()
    }

    #[test]
    fn generic_u_against_contour_oracle() {
        for &(alpha, u) in &[(0.5, Complex64::new(0.8, 0.3)), (0.0, Complex64::new(-0.4, 1.1)), (2.0, Complex64::new(1.5, 0.0))] {
            let cn = calogero_numbers(alpha, u, 10).unwrap();
            let oracle = cauchy_coeffs(
                |t| cal_i(alpha, t + u).unwrap() / ((t + u) * cal_i(alpha + 1.0, t + u).unwrap()),
                0.3,
                10,
            );
            for n in 0..=10 {
                assert!((cn.values[n] - oracle[n]).norm() < 1e-9 * oracle[n].norm().max(1.0), "alpha={alpha} n={n}");
            }
            assert!(cn.max_residual() < 1e-10);
            let a0 = cal_i(alpha, u).unwrap() / (u * cal_i(alpha + 1.0, u).unwrap());
            assert!((cn.values[0] - a0).norm() < 1e-14 * a0.norm());
        }
    }

    #[test]
    fn printed_values_at_jzero() {
        for &alpha in &[0.0, 0.5, 1.5] {
            let t = zeros_j(alpha, 4).unwrap();
            for l in 1..=4 {
                let j = t.zeros[l - 1];
                let cn = calogero_at_izero(alpha, &t, l, 6).unwrap();
                let v = &cn.values;
                assert_eq!(v[0], Complex64::new(0.0, 0.0));
                assert!((v[1] - 1.0 / (2.0 * (1.0 + alpha))).norm() < 1e-15);
                let a2 = Complex64::new(0.0, -(2.0 * alpha + 1.0) / (4.0 * j * (alpha + 1.0)));
                assert!((v[2] - a2).norm() < 1e-15);
                let a3 = -1.0 / (6.0 * (1.0 + alpha)) + (1.0 - 4.0 * alpha * alpha) / (12.0 * (1.0 + alpha) * j * j);
                assert!((v[3] - a3).norm() < 1e-14);
                assert!(cn.izero_structure_leakage() < 1e-12);
                let generic = calogero_numbers(alpha, cn.u, 6).unwrap();
                for n in 1..=6 {
                    assert!((generic.values[n] - v[n]).norm() < 1e-10 * v[n].norm().max(1.0));
                }
            }
        }
    }

    #[test]
    fn cosine_zero_gives_vanishing_leading_value() {
        let cn = calogero_numbers(-0.5, Complex64::new(0.0, std::f64::consts::FRAC_PI_2), 4).unwrap();
        assert!(cn.values[0].norm() < 1e-15);
        assert!((cn.values[1] - 1.0).norm() < 1e-14);
    }

    #[test]
    fn invalid_u() {
        assert!(calogero_numbers(0.5, Complex64::new(0.0, 0.0), 3).is_err());
        let s = crate::bessel::zeros::zeros_s(0.5, 1).unwrap();
        assert!(calogero_numbers(0.5, Complex64::new(0.0, s.zeros[0]), 3).is_err());
    }
}
