//! Positive zeros s_j of x ↦ 𝓘_{α+1}(ix) (equivalently of J_{α+1}) and
//! j_l of J_α, with their achieved residuals.

use std::f64::consts::PI;

use num::complex::Complex64;
use serde_json::{json, Value};

use crate::bessel::cal_i::cal_i_unchecked;
use crate::error::{Error, Result};
use crate::format;
use crate::par::Execution;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroKind {
    /// Zeros of J_{α+1}.
    S,
    /// Zeros of J_α.
    J,
}

impl ZeroKind {
    pub fn tag(self) -> &'static str {
        match self {
            ZeroKind::S => "s",
            ZeroKind::J => "j",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTable {
    pub alpha: f64,
    pub kind: ZeroKind,
    pub zeros: Vec<f64>,
    pub residuals: Vec<f64>,
}

impl ZeroTable {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// 1-based access, with ±j resolved by sign.
    pub fn signed(&self, j: i64) -> Result<f64> {
        let idx = j.unsigned_abs() as usize;
        if j == 0 || idx > self.zeros.len() {
            return Err(Error::IndexOutOfRange { index: j, len: self.zeros.len() });
        }
        Ok(j.signum() as f64 * self.zeros[idx - 1])
    }

    /// Order ν of the Bessel function whose zeros are stored.
    pub fn order(&self) -> f64 {
        match self.kind {
            ZeroKind::S => self.alpha + 1.0,
            ZeroKind::J => self.alpha,
        }
    }

    pub fn require(&self, n: usize) -> Result<()> {
        if self.zeros.len() < n {
            Err(Error::TableTooShort { need: n, have: self.zeros.len() })
        } else {
            Ok(())
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "alpha": format::num(self.alpha),
            "kind": self.kind.tag(),
            "zeros": self.zeros.iter().map(|&x| format::num(x)).collect::<Vec<_>>(),
            "residuals": self.residuals.iter().map(|&x| format::num(x)).collect::<Vec<_>>(),
        })
    }
}

/// McMahon's expansion for the j-th positive zero of J_ν.
pub fn mcmahon(nu: f64, j: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let b = (j + nu / 2.0 - 0.25) * PI;
    let e = 8.0 * b;
    b - (mu - 1.0) / e
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e.powi(3))
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * e.powi(5))
}

struct Target {
    nu: f64,
}

impl Target {
    fn f(&self, x: f64) -> f64 {
        cal_i_unchecked(self.nu, Complex64::new(0.0, x)).re
    }

    /// d/dx 𝓘_ν(ix) = (2ν/x)(𝓘_{ν−1}(ix) − 𝓘_ν(ix)); at ν = 0 the equivalent
    /// −(x/2)𝓘_1(ix) avoids the undefined order −1.
    fn df(&self, x: f64, fx: f64) -> f64 {
        if self.nu == 0.0 {
            return -0.5 * x * cal_i_unchecked(1.0, Complex64::new(0.0, x)).re;
        }
        let lower = cal_i_unchecked(self.nu - 1.0, Complex64::new(0.0, x)).re;
        2.0 * self.nu / x * (lower - fx)
    }

    /// Safeguarded Newton inside a sign-change bracket.
    fn refine(&self, mut a: f64, mut b: f64, guess: f64, index: usize) -> Result<(f64, f64)> {
        let mut fa = self.f(a);
        if fa == 0.0 {
            return Ok((a, 0.0));
        }
        let mut x = if guess > a && guess < b { guess } else { 0.5 * (a + b) };
        for _ in 0..200 {
            let fx = self.f(x);
            if fx == 0.0 {
                return Ok((x, 0.0));
            }
            if (fx > 0.0) == (fa > 0.0) {
                a = x;
                fa = fx;
            } else {
                b = x;
            }
            let d = self.df(x, fx);
            let mut next = x - fx / d;
            if !(next > a && next < b) || !next.is_finite() {
                next = 0.5 * (a + b);
            }
            let done = (next - x).abs() <= 2.0 * f64::EPSILON * x || b - a <= 2.0 * f64::EPSILON * x;
            x = next;
            if done {
                let r = self.f(x);
                return Ok((x, r.abs()));
            }
        }
        Err(Error::NewtonDivergence(index))
    }
}

/// First `count` positive zeros of x ↦ 𝓘_{α+1}(ix), α > −2.
pub fn zeros_s(alpha: f64, count: usize) -> Result<ZeroTable> {
    zeros_s_with(alpha, count, Execution::default())
}

pub fn zeros_s_with(alpha: f64, count: usize, exec: Execution) -> Result<ZeroTable> {
    if !(alpha > -2.0) || !alpha.is_finite() {
        return Err(Error::InvalidAlpha { alpha: alpha.to_string(), reason: "zero tables need alpha > -2".into() });
    }
    let nu = alpha + 1.0;
    let t = Target { nu };
    let mut zeros = Vec::with_capacity(count);
    let mut residuals = Vec::with_capacity(count);

    // Low zeros: scan for sign changes (zeros are ≥ 2 apart), then refine.
    let scan_limit = 15.0 + 3.0 * nu * nu;
    let h = 0.25;
    let mut x0 = 0.0;
    let mut f0 = 1.0;
    while zeros.len() < count && x0 < scan_limit {
        let x1 = x0 + h;
        let f1 = t.f(x1);
        if f1 == 0.0 || (f1 > 0.0) != (f0 > 0.0) {
            let (z, r) = t.refine(x0, x1, 0.5 * (x0 + x1), zeros.len() + 1)?;
            zeros.push(z);
            residuals.push(r);
        }
        x0 = x1;
        f0 = f1;
    }

    // High zeros: McMahon guess per index, independent and parallel.
    let first = zeros.len();
    if first < count {
        let found = exec.try_map_range(first..count, |i| {
            let j = (i + 1) as f64;
            let g = mcmahon(nu, j);
            let (mut a, mut b) = (g - 0.5, g + 0.5);
            let mut tries = 0;
            while (t.f(a) > 0.0) == (t.f(b) > 0.0) {
                a -= 0.25;
                b += 0.25;
                tries += 1;
                if tries > 4 {
                    return Err(Error::NewtonDivergence(i + 1));
                }
            }
            t.refine(a, b, g, i + 1)
        })?;
        for (z, r) in found {
            zeros.push(z);
            residuals.push(r);
        }
    }

    for (i, w) in zeros.windows(2).enumerate() {
        let gap = w[1] - w[0];
        if !(gap > 1.0 && gap < 2.0 * PI) {
            return Err(Error::NewtonDivergence(i + 2));
        }
    }
    for (i, (&z, &r)) in zeros.iter().zip(&residuals).enumerate() {
        // a correctly rounded zero leaves |f′| ε z; for ν < 0 the amplitude grows with z
        let d = t.df(z, 0.0).abs();
        if r >= (1e-12 + 8.0 * f64::EPSILON * z) * d.max(1.0) {
            return Err(Error::NewtonDivergence(i + 1));
        }
    }
    Ok(ZeroTable { alpha, kind: ZeroKind::S, zeros, residuals })
}

/// First `count` positive zeros of J_α, α > −1 (j_l = s_{l, α−1}).
pub fn zeros_j(alpha: f64, count: usize) -> Result<ZeroTable> {
    zeros_j_with(alpha, count, Execution::default())
}

pub fn zeros_j_with(alpha: f64, count: usize, exec: Execution) -> Result<ZeroTable> {
    if !(alpha > -1.0) {
        return Err(Error::InvalidAlpha { alpha: alpha.to_string(), reason: "zeros of J_alpha need alpha > -1".into() });
    }
    let mut t = zeros_s_with(alpha - 1.0, count, exec)?;
    t.alpha = alpha;
    t.kind = ZeroKind::J;
    Ok(t)
}

/// 𝓘_α(i s_j), real; its sign is (−1)^j, flipped when Γ(α+1) < 0.
pub fn cal_i_at_izero(alpha: f64, table: &ZeroTable, j: usize) -> Result<f64> {
    if table.kind != ZeroKind::S || table.alpha != alpha {
        return Err(Error::PreconditionViolated(format!("need an s-table for alpha = {alpha}")));
    }
    let s = table.signed(j as i64)?;
    Ok(cal_i_unchecked(alpha, Complex64::new(0.0, s)).re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiples_of_pi() {
        let t = zeros_s(-0.5, 3).unwrap();
        for (j, &z) in t.zeros.iter().enumerate() {
            assert!((z - (j + 1) as f64 * PI).abs() < 1e-14 * z);
        }
    }

    #[test]
    fn tan_equation_oracle() {
        // zeros of J_{3/2}: tan x = x; bisection oracle
        let (mut a, mut b) = (4.0f64, 4.7f64);
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if (m.tan() - m) > 0.0 {
                b = m;
            } else {
                a = m;
            }
        }
        let t = zeros_s(0.5, 1).unwrap();
        assert!((t.zeros[0] - a).abs() < 1e-14);
        assert!((a - 4.493_409_457_909_064).abs() < 1e-14);
    }

    #[test]
    fn first_zero_of_j0() {
        let t = zeros_j(0.0, 1).unwrap();
        assert!((t.zeros[0] - 2.404_825_557_695_773).abs() < 1e-14);
        assert!(zeros_j(0.0, 0).unwrap().is_empty());
        assert!(zeros_s(-3.0, 1).is_err());
    }

    #[test]
    fn sign_alternation_at_zeros() {
        let t = zeros_s(0.0, 20).unwrap();
        for j in 1..=20 {
            let v = cal_i_at_izero(0.0, &t, j).unwrap();
            assert_eq!(v > 0.0, j % 2 == 0, "j={j}");
        }
        let t = zeros_s(-0.5, 3).unwrap();
        assert!((cal_i_at_izero(-0.5, &t, 3).unwrap() + 1.0).abs() < 1e-14);
    }

    #[test]
    fn parallel_and_sequential_tables_identical() {
        let a = zeros_s_with(2.0, 300, Execution::Sequential).unwrap();
        let b = zeros_s_with(2.0, 300, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn extreme_orders() {
        for &alpha in &[-1.95, -1.0, -0.99, 20.0] {
            let t = zeros_s(alpha, 50).unwrap();
            assert_eq!(t.len(), 50, "alpha={alpha}");
        }
    }
}
