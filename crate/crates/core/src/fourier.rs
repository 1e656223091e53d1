//! The Fourier–Dunkl system e_j on L²((−1,1), dμ_α) and the expansions of
//! 𝔅_n and of the kernel E_α(itx).

use std::f64::consts::PI;

use num::complex::Complex64;
use serde_json::{json, Value};

use crate::appell::{gamma_closed, lambda_op, DensePoly};
use crate::bernoulli::bernoulli_family;
use crate::bessel::cal_i::{cal_i, dunkl_kernel, dunkl_kernel_unchecked};
use crate::bessel::zeros::{cal_i_at_izero, zeros_s, ZeroKind, ZeroTable};
use crate::error::{Error, Result};
use crate::format;
use crate::numerics::gamma::gamma_fn;
use crate::numerics::quadrature::MuQuadrature;
use crate::numerics::sum::CompensatedSum;
use crate::par::Execution;
use crate::series::{truncated_sum, SeriesKind};

fn i_c() -> Complex64 {
    Complex64::new(0.0, 1.0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FourierDunklSystem {
    pub alpha: f64,
    pub table: ZeroTable,
    /// 2^{α/2}Γ(α+1)^{1/2}/|𝓘_α(is_j)| for j = 1..=len.
    pub norms: Vec<f64>,
    /// 2^{α/2}Γ(α+1)^{1/2}
    base: f64,
}

impl FourierDunklSystem {
    pub fn new(alpha: f64, table: ZeroTable) -> Result<Self> {
        Self::new_with(alpha, table, Execution::default())
    }

    pub fn new_with(alpha: f64, table: ZeroTable, exec: Execution) -> Result<Self> {
        if !(alpha > -1.0) {
            return Err(Error::InvalidAlpha { alpha: alpha.to_string(), reason: "the Fourier-Dunkl system needs alpha > -1".into() });
        }
        if table.kind != ZeroKind::S || table.alpha != alpha {
            return Err(Error::PreconditionViolated(format!("need an s-table for alpha = {alpha}")));
        }
        let base = 2f64.powf(alpha / 2.0) * gamma_fn(alpha + 1.0)?.sqrt();
        let norms = exec.try_map_range(1..table.len() + 1, |j| Ok::<_, Error>(base / cal_i_at_izero(alpha, &table, j)?.abs()))?;
        Ok(Self { alpha, table, norms, base })
    }

    /// System with the first `count` zeros.
    pub fn with_zeros(alpha: f64, count: usize) -> Result<Self> {
        Self::new(alpha, zeros_s(alpha, count)?)
    }

    pub fn len(&self) -> usize {
        self.norms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.norms.is_empty()
    }

    fn s(&self, j: i64) -> Result<f64> {
        self.table.signed(j)
    }

    /// e_j(x), j ∈ ℤ.
    pub fn e(&self, j: i64, x: f64) -> Result<Complex64> {
        if j == 0 {
            return Ok(Complex64::new(self.e0(), 0.0));
        }
        let s = self.s(j)?;
        let norm = self.norms[j.unsigned_abs() as usize - 1];
        Ok(norm * dunkl_kernel(self.alpha, Complex64::new(0.0, s * x))?)
    }

    /// e_j(x) for an index already known to be in range.
    fn e_unchecked(&self, j: i64, x: f64) -> Complex64 {
        if j == 0 {
            return Complex64::new(self.e0(), 0.0);
        }
        let idx = j.unsigned_abs() as usize - 1;
        let s = j.signum() as f64 * self.table.zeros[idx];
        self.norms[idx] * dunkl_kernel_unchecked(self.alpha, Complex64::new(0.0, s * x))
    }

    fn require_index(&self, j: i64) -> Result<()> {
        if j != 0 {
            self.s(j)?;
        }
        Ok(())
    }

    /// e_0 = 2^{(α+1)/2}Γ(α+2)^{1/2}.
    pub fn e0(&self) -> f64 {
        self.base * (2.0 * (self.alpha + 1.0)).sqrt()
    }

    /// 2^{1+α/2}(α+1)Γ(α+1)^{1/2}
    fn coeff_denominator(&self) -> f64 {
        2.0 * (self.alpha + 1.0) * self.base
    }

    /// c_j(𝔅_n) = ∫ 𝔅_n conj(e_j) dμ_α in closed form: c_0 = 0 and
    /// c_j = −i^n γ_n (−1)^j / ((−s_j)^n 2^{1+α/2}(α+1)Γ(α+1)^{1/2}).
    pub fn bd_coefficient(&self, n: usize, j: i64) -> Result<Complex64> {
        if n == 0 {
            return Err(Error::Unsupported("n = 0: B_0 is a multiple of e_0".into()));
        }
        if j == 0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let s = -self.s(j)?;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let gamma = gamma_closed(&self.alpha, n);
        Ok(-i_c().powi(n as i32) * gamma * sign / (s.powi(n as i32) * self.coeff_denominator()))
    }

    /// c_j(𝔅_n) by Gauss–Jacobi quadrature.
    pub fn bd_coefficient_quadrature(&self, n: usize, j: i64, order: usize) -> Result<Complex64> {
        let b = bernoulli_family(&self.alpha, n)?.polys[n].clone();
        let q = MuQuadrature::new(self.alpha, order)?;
        self.require_index(j)?;
        Ok(q.integrate(|x| b.eval(&x) * self.e_unchecked(j, x).conj()))
    }

    /// Σ_{|j|≤J} c_j(𝔅_n) e_j(x), accumulated in ascending |j|, +j before −j.
    pub fn bd_partial_sum(&self, n: usize, jmax: usize, x: f64) -> Result<Complex64> {
        self.table.require(jmax)?;
        let mut acc = CompensatedSum::new();
        for j in 1..=jmax as i64 {
            for jj in [j, -j] {
                acc.add(self.bd_coefficient(n, jj)? * self.e(jj, x)?);
            }
        }
        Ok(acc.value())
    }

    /// ‖𝔅_n‖² in L²(dμ_α).
    pub fn bd_norm_sq(&self, n: usize, order: usize) -> Result<f64> {
        let b = bernoulli_family(&self.alpha, n)?.polys[n].clone();
        Ok(MuQuadrature::new(self.alpha, order)?.integrate_real(|x| b.eval(&x).powi(2)))
    }

    /// Σ_{|j|≤J}|c_j|² (and the tail beyond J) against ‖𝔅_n‖². Since
    /// |c_j|² = K²/s_j^{2n}, the coefficient sum is 2K² times a σ_n partial sum.
    pub fn parseval_check(&self, n: usize, jmax: usize, order: usize, with_tail: bool) -> Result<ParsevalReport> {
        if n < 2 {
            return Err(Error::PreconditionViolated("Parseval check needs n >= 2".into()));
        }
        let k = gamma_closed(&self.alpha, n) / self.coeff_denominator();
        let (partial, tail) = truncated_sum(SeriesKind::Sigma(n), self.alpha, &self.table, jmax, with_tail)?;
        let coeff_sum = 2.0 * k * k * partial.re;
        let tail = 2.0 * k * k * tail.re;
        let norm_sq = self.bd_norm_sq(n, order)?;
        let rel_err = (coeff_sum + tail - norm_sq).abs() / norm_sq;
        Ok(ParsevalReport { alpha: self.alpha, n, jmax, coeff_sum, tail, norm_sq, rel_err })
    }

    /// ‖𝔅_n − S_J‖² = ‖𝔅_n‖² − Σ_{|j|≤J}|c_j|² for each J (orthonormality).
    pub fn bessel_inequality_errors(&self, n: usize, js: &[usize], order: usize) -> Result<Vec<f64>> {
        let norm_sq = self.bd_norm_sq(n, order)?;
        js.iter()
            .map(|&jmax| {
                let (partial, _) = truncated_sum(SeriesKind::Sigma(n), self.alpha, &self.table, jmax, false)?;
                let k = gamma_closed(&self.alpha, n) / self.coeff_denominator();
                Ok(norm_sq - 2.0 * k * k * partial.re)
            })
            .collect()
    }

    /// ‖𝔅_n − S_J‖² by direct quadrature of |𝔅_n − S_J|².
    pub fn l2_error_quadrature(&self, n: usize, jmax: usize, order: usize) -> Result<f64> {
        let b = bernoulli_family(&self.alpha, n)?.polys[n].clone();
        let q = MuQuadrature::new(self.alpha, order)?;
        self.table.require(jmax)?;
        let coeffs: Vec<(i64, Complex64)> = (1..=jmax as i64)
            .flat_map(|j| [j, -j])
            .map(|j| Ok((j, self.bd_coefficient(n, j)?)))
            .collect::<Result<_>>()?;
        Ok(q.integrate_real(|x| {
            let mut acc = CompensatedSum::new();
            for &(j, c) in &coeffs {
                acc.add(c * self.e_unchecked(j, x));
            }
            (b.eval(&x) - acc.value()).norm_sqr()
        }))
    }

    /// ⟨e_j, e_k⟩ for |j|, |k| ≤ jmax; returns max |G − I|.
    pub fn gram_deviation(&self, jmax: usize, order: usize) -> Result<f64> {
        self.table.require(jmax)?;
        let q = MuQuadrature::new(self.alpha, order)?;
        let m = jmax as i64;
        let idx: Vec<i64> = (-m..=m).collect();
        let rows = Execution::default().try_map_range(0..idx.len(), |a| -> Result<f64> {
            let mut worst: f64 = 0.0;
            for &kk in &idx {
                let j = idx[a];
                let g = q.integrate(|x| self.e_unchecked(j, x) * self.e_unchecked(kk, x).conj());
                let target = if j == kk { 1.0 } else { 0.0 };
                worst = worst.max((g - target).norm());
            }
            Ok(worst)
        })?;
        Ok(rows.into_iter().fold(0.0, f64::max))
    }

    /// c_j(E_α(itx)) in closed form.
    pub fn kernel_expansion_coeff(&self, t: Complex64, j: i64) -> Result<Complex64> {
        let it = i_c() * t;
        let i0 = cal_i(self.alpha, it)?;
        let i1 = cal_i(self.alpha + 1.0, it)?;
        if t.norm() == 0.0 || i1.norm() < 1e-12 * i0.norm().max(f64::MIN_POSITIVE) {
            return Err(Error::PoleInput(format!("t = {t}")));
        }
        if j == 0 {
            return Ok((2.0 * (self.alpha + 1.0)).sqrt() * i1 / self.coeff_denominator());
        }
        let s = self.s(j)?;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        Ok(sign * t * i1 / (self.coeff_denominator() * (t - s)))
    }

    /// ∫ E_α(itx) conj(e_j(x)) dμ_α by quadrature.
    pub fn kernel_expansion_coeff_quadrature(&self, t: Complex64, j: i64, order: usize) -> Result<Complex64> {
        self.require_index(j)?;
        let q = MuQuadrature::new(self.alpha, order)?;
        Ok(q.integrate(|x| dunkl_kernel_unchecked(self.alpha, i_c() * t * x) * self.e_unchecked(j, x).conj()))
    }

    /// Σ_{|j|≤J} c_j(E_α(it·)) e_j(x), for interior x.
    pub fn kernel_partial_sum(&self, t: Complex64, jmax: usize, x: f64) -> Result<Complex64> {
        self.table.require(jmax)?;
        let mut acc = CompensatedSum::new();
        acc.add(self.kernel_expansion_coeff(t, 0)? * self.e0());
        for j in 1..=jmax as i64 {
            for jj in [j, -j] {
                acc.add(self.kernel_expansion_coeff(t, jj)? * self.e(jj, x)?);
            }
        }
        Ok(acc.value())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParsevalReport {
    pub alpha: f64,
    pub n: usize,
    pub jmax: usize,
    pub coeff_sum: f64,
    pub tail: f64,
    pub norm_sq: f64,
    pub rel_err: f64,
}

impl ParsevalReport {
    pub fn to_json(&self) -> Value {
        json!({
            "check": "parseval",
            "alpha": format::num(self.alpha),
            "n": self.n,
            "J": self.jmax,
            "coeff_sum": format::num(self.coeff_sum),
            "tail": format::num(self.tail),
            "norm_sq": format::num(self.norm_sq),
            "rel_err": format::num(self.rel_err),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub name: &'static str,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_err: f64,
    pub rel_err: f64,
}

impl IdentityReport {
    fn new(name: &'static str, lhs: Complex64, rhs: Complex64) -> Self {
        let abs_err = (lhs - rhs).norm();
        IdentityReport { name, lhs, rhs, abs_err, rel_err: abs_err / lhs.norm().max(rhs.norm()).max(1e-300) }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.name,
            "lhs": format::complex(self.lhs),
            "rhs": format::complex(self.rhs),
            "abs_err": format::num(self.abs_err),
            "rel_err": format::num(self.rel_err),
        })
    }
}

/// ∫E_α(ixr)E_α(−iyr)dμ_α(r) = (E_α(ix)E_α(−iy) − E_α(−ix)E_α(iy))/(2^{α+1}Γ(α+1) i(x−y)).
pub fn bcv_check(alpha: f64, x: Complex64, y: Complex64, order: usize) -> Result<IdentityReport> {
    if x == y {
        return Err(Error::CoincidentArguments);
    }
    let q = MuQuadrature::new(alpha, order)?;
    let e = |z: Complex64| dunkl_kernel(alpha, z);
    let lhs = q.integrate(|r| dunkl_kernel_unchecked(alpha, i_c() * x * r) * dunkl_kernel_unchecked(alpha, -i_c() * y * r));
    let c = 2f64.powf(alpha + 1.0) * gamma_fn(alpha + 1.0)?;
    let rhs = (e(i_c() * x)? * e(-i_c() * y)? - e(-i_c() * x)? * e(i_c() * y)?) / (c * i_c() * (x - y));
    Ok(IdentityReport::new("bcv", lhs, rhs))
}

/// ∫Λf·g dμ_α = (f(1)g(1) − f(−1)g(−1))/(2^{α+1}Γ(α+1)) − ∫f·Λg dμ_α; lhs − rhs reported.
pub fn adjoint_check(alpha: f64, f: &DensePoly<f64>, g: &DensePoly<f64>, order: usize) -> Result<IdentityReport> {
    let q = MuQuadrature::new(alpha, order)?;
    let lf = lambda_op(f, &alpha);
    let lg = lambda_op(g, &alpha);
    let lhs = q.integrate_real(|x| lf.eval(&x) * g.eval(&x));
    let c = 2f64.powf(alpha + 1.0) * gamma_fn(alpha + 1.0)?;
    let boundary = (f.eval(&1.0) * g.eval(&1.0) - f.eval(&-1.0) * g.eval(&-1.0)) / c;
    let rhs = boundary - q.integrate_real(|x| f.eval(&x) * lg.eval(&x));
    Ok(IdentityReport::new("adjoint", lhs.into(), rhs.into()))
}

/// At α = −1/2 the coefficients of 𝔅_n against the classical Hurwitz series
/// B_n(x) = −n!/(2πi)^n Σ_{k≠0} e^{2πikx}/k^n, mapped through 𝔅_n(y) = 2^n B_n((y+1)/2).
/// Returns max over 1 ≤ |j| ≤ jmax of |closed − classical|.
pub fn hurwitz_check(n: usize, jmax: usize) -> Result<f64> {
    let sys = FourierDunklSystem::with_zeros(-0.5, jmax)?;
    let norm = 2f64.powf(-0.25) * PI.powf(0.25);
    let fact: f64 = (1..=n).map(|i| i as f64).product();
    let mut worst: f64 = 0.0;
    for j in 1..=jmax as i64 {
        for jj in [j, -j] {
            let sign = if jj % 2 == 0 { 1.0 } else { -1.0 };
            let classical = -fact * sign / ((PI * i_c()).powi(n as i32) * (jj as f64).powi(n as i32) * norm);
            worst = worst.max((sys.bd_coefficient(n, jj)? - classical).norm());
        }
    }
    Ok(worst)
}
