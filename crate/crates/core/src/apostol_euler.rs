//! Apostol–Euler–Dunkl polynomials 𝔈_{n,α,u}:
//! u𝓘_{α+1}(u) E_α(xt) / ((t+u)𝓘_{α+1}(t+u)) = Σ 𝔈_n(x) t^n/γ_n.

use num::complex::Complex64;
use num::BigRational;
use serde_json::{json, Value};

use crate::appell::{appell_from_reciprocal, coeff_distance, gamma_ladder, lambda_op, DensePoly};
use crate::bernoulli::{bernoulli_family, binomial_table, ReductionEntry, ReductionReport};
use crate::bessel::cal_i::{cal_i, check_order};
use crate::bessel::deriv::cal_i_derivs;
use crate::bessel::laurent::deriv_poly_ladder;
use crate::bessel::zeros::{ZeroKind, ZeroTable};
use crate::error::{Error, Result};
use crate::format;
use crate::numerics::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct AEDFamily {
    pub alpha: f64,
    pub u: Complex64,
    pub polys: Vec<DensePoly<Complex64>>,
    /// Per-degree residual of the defining triangular recurrence.
    pub residuals: Vec<f64>,
}

fn i_c() -> Complex64 {
    Complex64::new(0.0, 1.0)
}

/// Rejects u = 0 and roots of 𝓘_{α+1} (relative threshold 1e−12 against 𝓘_α(u)).
pub(crate) fn check_u(alpha: f64, u: Complex64) -> Result<(Complex64, Complex64)> {
    check_order(alpha)?;
    if u.norm() == 0.0 {
        return Err(Error::InvalidU("u = 0".into()));
    }
    let i0 = cal_i(alpha, u)?;
    let i1 = cal_i(alpha + 1.0, u)?;
    if i1.norm() < 1e-12 * i0.norm().max(f64::MIN_POSITIVE) {
        return Err(Error::InvalidU(format!("{u} is a root of I_(alpha+1)")));
    }
    Ok((i0, i1))
}

fn family_from_coeffs(alpha: f64, u: Complex64, a: Vec<Complex64>) -> Result<AEDFamily> {
    let al = Complex64::from_f64(alpha);
    let polys = appell_from_reciprocal(&a, &al)?;
    let residuals = recurrence_residuals(alpha, &polys, &a)?;
    Ok(AEDFamily { alpha, u, polys, residuals })
}

/// |x^n − γ_n Σ_j 𝔈_j a_{n−j}/γ_j|_∞ per degree.
fn recurrence_residuals(alpha: f64, polys: &[DensePoly<Complex64>], a: &[Complex64]) -> Result<Vec<f64>> {
    let al = Complex64::from_f64(alpha);
    let ladder = gamma_ladder(&al, polys.len())?;
    Ok((0..polys.len())
        .map(|n| {
            let mut acc = DensePoly::zero();
            for j in 0..=n {
                let c = *ladder.gamma(n) * a[n - j] / *ladder.gamma(j);
                acc = acc.add(&polys[j].scale(&c));
            }
            coeff_distance(&acc, &DensePoly::<Complex64>::monomial(n))
        })
        .collect())
}

/// 𝔈_0..𝔈_N for generic u (neither 0 nor a root of 𝓘_{α+1}).
pub fn aed_family(alpha: f64, u: Complex64, n: usize) -> Result<AEDFamily> {
    let (_, i1) = check_u(alpha, u)?;
    let d = cal_i_derivs(alpha, n + 1, u)?;
    let scale = 2.0 * (alpha + 1.0) / (u * i1);
    let mut fact = 1.0;
    let a: Vec<Complex64> = (0..=n)
        .map(|m| {
            if m > 0 {
                fact *= m as f64;
            }
            if m == 0 {
                Complex64::new(1.0, 0.0)
            } else {
                scale * d[m + 1] / fact
            }
        })
        .collect();
    family_from_coeffs(alpha, u, a)
}

/// 𝔈_0..𝔈_N at u = i j_l. There 𝓘_α^{(k)}(u) = 𝓘_{α+1}(u) Q_k(u), so the
/// coefficients a_m = 2(α+1) Q_{m+1}(u)/(m! u) need no Bessel evaluation.
pub fn aed_at_izero(alpha: f64, table: &ZeroTable, l: usize, n: usize) -> Result<AEDFamily> {
    if table.kind != ZeroKind::J || table.alpha != alpha {
        return Err(Error::PreconditionViolated(format!("need a j-table for alpha = {alpha}")));
    }
    let jl = table.signed(l as i64)?;
    let u = i_c() * jl;
    let ladder = deriv_poly_ladder(&alpha, n + 1)?;
    let mut fact = 1.0;
    let a: Vec<Complex64> = (0..=n)
        .map(|m| {
            if m > 0 {
                fact *= m as f64;
            }
            if m == 0 {
                return Complex64::new(1.0, 0.0);
            }
            2.0 * (alpha + 1.0) * ladder[m + 1].1.eval(u) / (fact * u)
        })
        .collect();
    let fam = family_from_coeffs(alpha, u, a)?;
    let leak = fam.izero_structure_leakage();
    if leak > 1e-12 {
        return Err(Error::PreconditionViolated(format!("i-structure leakage {leak:e} at u = i j_{l}")));
    }
    Ok(fam)
}

impl AEDFamily {
    /// Worst relative leakage from the expected i-structure at u = i j_l: the
    /// coefficient of x^k in 𝔈_n is real when n − k is even and purely
    /// imaginary when it is odd.
    pub fn izero_structure_leakage(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (n, p) in self.polys.iter().enumerate() {
            let scale = p.max_abs().max(1.0);
            for (k, c) in p.coeffs().iter().enumerate() {
                let stray = if (n - k) % 2 == 0 { c.im } else { c.re };
                worst = worst.max(stray.abs() / scale);
            }
        }
        worst
    }

    /// max_n ‖Λ_α𝔈_n − k_n𝔈_{n−1}‖_∞ / ‖𝔈_n‖_∞.
    pub fn appell_defect(&self) -> f64 {
        let al = Complex64::from_f64(self.alpha);
        let Ok(ladder) = gamma_ladder(&al, self.polys.len()) else { return f64::INFINITY };
        (1..self.polys.len())
            .map(|n| {
                let lhs = lambda_op(&self.polys[n], &al);
                let rhs = self.polys[n - 1].scale(ladder.k(n));
                coeff_distance(&lhs, &rhs) / self.polys[n].max_abs().max(1e-300)
            })
            .fold(0.0, f64::max)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": "aed",
            "alpha": format::num(self.alpha),
            "u": format::complex(self.u),
            "polys": self.polys.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
            "residuals": self.residuals.iter().map(|&r| format::num(r)).collect::<Vec<_>>(),
        })
    }
}

/// Taylor coefficients of 2e^{xt}/(λe^t + 1) in the form ℰ_n(x;λ), n ≤ N,
/// by truncated series division.
pub fn apostol_euler_classical(lambda: f64, n_max: usize) -> Vec<DensePoly<f64>> {
    // D(t) = λ e^t + 1, d_m = λ/m! for m ≥ 1
    let mut fact = vec![1.0f64; n_max + 1];
    for m in 1..=n_max {
        fact[m] = fact[m - 1] * m as f64;
    }
    let d: Vec<f64> = (0..=n_max).map(|m| if m == 0 { lambda + 1.0 } else { lambda / fact[m] }).collect();
    let mut c = vec![0.0f64; n_max + 1];
    for m in 0..=n_max {
        let s: f64 = (1..=m).map(|i| d[i] * c[m - i]).sum();
        c[m] = ((if m == 0 { 2.0 } else { 0.0 }) - s) / d[0];
    }
    (0..=n_max)
        .map(|n| {
            let coeffs = (0..=n).map(|k| fact[n] * c[n - k] / fact[k]).collect();
            DensePoly::new(coeffs)
        })
        .collect()
}

/// Classical Euler polynomials from E_n(x) = x^n − ½ Σ_{k<n} C(n,k) E_k(x).
pub fn classical_euler(n_max: usize) -> Vec<DensePoly<BigRational>> {
    let binom = binomial_table(n_max);
    let half = BigRational::from_ratio(1, 2);
    let mut out: Vec<DensePoly<BigRational>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut p = DensePoly::monomial(n);
        for (k, ek) in out.iter().enumerate() {
            p = p.sub(&ek.scale(&(binom[n][k].clone() * half.clone())));
        }
        out.push(p);
    }
    out
}

/// 𝔈_{n,−1/2,log(−λ)/2}(2x−1) / (2^{n−1}(λ+1)) against ℰ_n(x;λ), n ≤ N.
pub fn apostol_reduction_check(lambda: f64, n_max: usize, tol: f64) -> Result<ReductionReport> {
    if lambda == 0.0 || lambda == -1.0 || !lambda.is_finite() {
        return Err(Error::InvalidLambda(lambda));
    }
    let u = Complex64::new(-lambda, 0.0).ln() / 2.0;
    let fam = aed_family(-0.5, u, n_max)?;
    let oracle = apostol_euler_classical(lambda, n_max);
    let two = Complex64::new(2.0, 0.0);
    let entries = (0..=n_max)
        .map(|n| {
            let lhs = fam.polys[n].compose_affine(&two, &Complex64::new(-1.0, 0.0));
            let lhs = lhs.scale(&(1.0 / (2f64.powi(n as i32 - 1) * (lambda + 1.0))).into());
            let err = coeff_distance(&lhs, &oracle[n]);
            ReductionEntry { n, pass: err < tol, max_abs_err: err }
        })
        .collect();
    Ok(ReductionReport { name: format!("apostol_reduction_lambda_{lambda}"), entries })
}

/// 𝔈_{n,−1/2,iπ/2}(2x−1)/2^n against the classical Euler polynomials.
pub fn euler_reduction_check(n_max: usize, tol: f64) -> Result<ReductionReport> {
    let u = Complex64::new(0.0, std::f64::consts::FRAC_PI_2);
    let fam = aed_family(-0.5, u, n_max)?;
    let oracle = classical_euler(n_max);
    let two = Complex64::new(2.0, 0.0);
    let entries = (0..=n_max)
        .map(|n| {
            let lhs = fam.polys[n].compose_affine(&two, &Complex64::new(-1.0, 0.0)).scale(&(0.5f64.powi(n as i32)).into());
            let err = coeff_distance(&lhs, &oracle[n]);
            ReductionEntry { n, pass: err < tol, max_abs_err: err }
        })
        .collect();
    Ok(ReductionReport { name: "euler_reduction".into(), entries })
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitReport {
    pub alpha: f64,
    pub n: usize,
    pub u_values: Vec<Complex64>,
    /// max-coefficient error of 𝔈_n + γ_n𝔈_{n−1}/(uγ_{n−1}) against 𝔅_n.
    pub errors: Vec<f64>,
    /// errors[i]/errors[i+1].
    pub ratios: Vec<f64>,
    /// log-log slopes between consecutive u values.
    pub slopes: Vec<f64>,
}

impl LimitReport {
    pub fn to_json(&self) -> Value {
        json!({
            "check": "bernoulli_limit",
            "alpha": format::num(self.alpha),
            "n": self.n,
            "u": self.u_values.iter().map(|&u| format::complex(u)).collect::<Vec<_>>(),
            "errors": self.errors.iter().map(|&e| format::num(e)).collect::<Vec<_>>(),
            "ratios": self.ratios.iter().map(|&e| format::num(e)).collect::<Vec<_>>(),
            "slopes": self.slopes.iter().map(|&e| format::num(e)).collect::<Vec<_>>(),
        })
    }
}

/// The combination 𝔈_n + γ_n𝔈_{n−1}/(uγ_{n−1}) built from the factored
/// generating function: it equals γ_n Σ_k c_{n−k} x^k/γ_k with c the Taylor
/// coefficients of 𝓘_{α+1}(u)/𝓘_{α+1}(t+u). Forming it from the 𝔈 family
/// directly cancels terms of size |u|^{−n}.
pub fn limit_combination(alpha: f64, n: usize, u: Complex64) -> Result<DensePoly<Complex64>> {
    check_u(alpha, u)?;
    let d = cal_i_derivs(alpha + 1.0, n, u)?;
    let mut fact = 1.0;
    let g: Vec<Complex64> = (0..=n)
        .map(|m| {
            if m > 0 {
                fact *= m as f64;
            }
            d[m] / (fact * d[0])
        })
        .collect();
    let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
    c[0] = Complex64::new(1.0, 0.0);
    for m in 1..=n {
        c[m] = -(1..=m).map(|i| g[i] * c[m - i]).sum::<Complex64>();
    }
    let al = Complex64::from_f64(alpha);
    let ladder = gamma_ladder(&al, n)?;
    Ok(DensePoly::new((0..=n).map(|k| *ladder.gamma(n) * c[n - k] / *ladder.gamma(k)).collect()))
}

/// 𝔅_n = lim_{u→0} (𝔈_{n,α,u} + γ_n 𝔈_{n−1,α,u}/(u γ_{n−1})), measured at each u.
pub fn bernoulli_limit_check(alpha: f64, n: usize, u_values: &[Complex64]) -> Result<LimitReport> {
    if u_values.iter().any(|u| u.norm() == 0.0) {
        return Err(Error::InvalidU("u = 0".into()));
    }
    let target = bernoulli_family(&alpha, n)?.polys[n].to_c64();
    let mut errors = Vec::with_capacity(u_values.len());
    for &u in u_values {
        let approx = limit_combination(alpha, n, u)?;
        errors.push(coeff_distance(&approx, &target));
    }
    let ratios = errors.windows(2).map(|w| w[0] / w[1]).collect();
    let slopes = errors
        .windows(2)
        .zip(u_values.windows(2))
        .map(|(e, u)| (e[0] / e[1]).ln() / (u[0].norm() / u[1].norm()).ln())
        .collect();
    Ok(LimitReport { alpha, n, u_values: u_values.to_vec(), errors, ratios, slopes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bessel::zeros::zeros_j;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn printed_first_polys_at_jzero() {
        for &alpha in &[0.0, 0.5, 1.25] {
            let t = zeros_j(alpha, 3).unwrap();
            for l in 1..=3 {
                let j = t.zeros[l - 1];
                let f = aed_at_izero(alpha, &t, l, 3).unwrap();
                let ij = c(0.0, j);
                let e1 = DensePoly::new(vec![2.0 * (1.0 + alpha) * (1.0 + 2.0 * alpha) / ij, c(1.0, 0.0)]);
                let e2 = DensePoly::new(vec![
                    c(-2.0 * (1.0 + alpha) * (1.0 + 2.0 * alpha * (1.0 + 2.0 * alpha) / (j * j)), 0.0),
                    2.0 * (1.0 + 2.0 * alpha) / ij,
                    c(1.0, 0.0),
                ]);
                assert_eq!(f.polys[0], DensePoly::constant(c(1.0, 0.0)));
                assert!(coeff_distance(&f.polys[1], &e1) < 1e-13);
                assert!(coeff_distance(&f.polys[2], &e2) < 1e-13);
                let c3 = -8.0 * (2.0 + alpha) * (1.0 + alpha) * (1.0 + 2.0 * alpha) / (3.0 * ij)
                    * (2.0 + alpha * (-1.0 + 2.0 * alpha) / (j * j));
                assert!((f.polys[3].coeff(0) - c3).norm() < 1e-12);
                assert!(f.izero_structure_leakage() < 1e-12);
            }
        }
    }

    #[test]
    fn izero_agrees_with_generic_route() {
        let t = zeros_j(0.5, 5).unwrap();
        for l in [1, 5] {
            let a = aed_at_izero(0.5, &t, l, 8).unwrap();
            let b = aed_family(0.5, c(0.0, t.zeros[l - 1]), 8).unwrap();
            for n in 0..=8 {
                assert!(coeff_distance(&a.polys[n], &b.polys[n]) < 1e-10 * a.polys[n].max_abs().max(1.0), "l={l} n={n}");
            }
        }
    }

    #[test]
    fn degenerate_alpha_kills_corrections() {
        let t = zeros_j(-0.5, 1).unwrap();
        let f = aed_at_izero(-0.5, &t, 1, 1).unwrap();
        assert!(coeff_distance(&f.polys[1], &DensePoly::<Complex64>::monomial(1)) < 1e-15);
    }

    #[test]
    fn euler_and_apostol() {
        let r = euler_reduction_check(10, 1e-10).unwrap();
        assert!(r.pass(), "{:?}", r);
        let f = aed_family(-0.5, c(0.0, std::f64::consts::FRAC_PI_2), 1).unwrap();
        let e1 = f.polys[1].compose_affine(&c(2.0, 0.0), &c(-1.0, 0.0)).scale(&c(0.5, 0.0));
        assert!(coeff_distance(&e1, &DensePoly::new(vec![c(-0.5, 0.0), c(1.0, 0.0)])) < 1e-15);
        for &lambda in &[0.5, 3.0, 1.0, -4.0] {
            let r = apostol_reduction_check(lambda, 6, 1e-10).unwrap();
            assert!(r.pass(), "lambda={lambda} {:?}", r);
            assert!((r.entries[0].max_abs_err) < 1e-15);
        }
        assert!(apostol_reduction_check(-1.0, 3, 1e-10).is_err());
        assert!(apostol_reduction_check(0.0, 3, 1e-10).is_err());
    }

    #[test]
    fn invalid_u_is_rejected() {
        let t = crate::bessel::zeros::zeros_s(0.0, 1).unwrap();
        assert!(aed_family(0.0, c(0.0, t.zeros[0]), 3).is_err());
        assert!(aed_family(0.0, c(0.0, 0.0), 3).is_err());
    }

    #[test]
    fn limit_is_first_order() {
        let us = [c(1e-2, 0.0), c(1e-3, 0.0)];
        for n in 2..=4 {
            let r = bernoulli_limit_check(0.0, n, &us).unwrap();
            assert!(r.ratios[0] > 7.0 && r.ratios[0] < 13.0, "n={n} {:?}", r);
        }
        let r = bernoulli_limit_check(0.0, 0, &us).unwrap();
        assert!(r.errors.iter().all(|&e| e == 0.0));
        let r = bernoulli_limit_check(-0.5, 3, &us).unwrap();
        assert!(r.errors[1] < 2e-3, "{:?}", r);
    }

    #[test]
    fn limit_combination_matches_family() {
        let alpha = 0.5;
        let al = Complex64::from_f64(alpha);
        let ladder = gamma_ladder(&al, 6).unwrap();
        for &u in &[c(0.5, 0.0), c(0.3, -0.7)] {
            let f = aed_family(alpha, u, 6).unwrap();
            for n in 1..=6 {
                let naive = f.polys[n].add(&f.polys[n - 1].scale(&(*ladder.gamma(n) / (u * *ladder.gamma(n - 1)))));
                let stable = limit_combination(alpha, n, u).unwrap();
                assert!(coeff_distance(&naive, &stable) < 1e-10 * naive.max_abs().max(1.0), "n={n}");
            }
        }
    }

    #[test]
    fn generating_function() {
        let alpha = 0.5;
        let u = c(0.7, 0.4);
        let f = aed_family(alpha, u, 40).unwrap();
        let al = Complex64::from_f64(alpha);
        let ladder = gamma_ladder(&al, 40).unwrap();
        let i1u = cal_i(alpha + 1.0, u).unwrap();
        for &(x, t) in &[(0.3, c(0.2, 0.1)), (-0.8, c(-0.3, 0.0))] {
            let lhs = u * i1u * crate::bessel::dunkl_kernel(alpha, t * x).unwrap()
                / ((t + u) * cal_i(alpha + 1.0, t + u).unwrap());
            let mut rhs = c(0.0, 0.0);
            for n in 0..=40 {
                rhs += f.polys[n].eval_c64(c(x, 0.0)) * t.powi(n as i32) / ladder.gamma(n);
            }
            assert!((lhs - rhs).norm() < 1e-9, "{lhs} {rhs}");
        }
        assert!(f.appell_defect() < 1e-10);
        assert!(f.max_residual() < 1e-10);
    }
}
