//! Gauss–Jacobi rules for the weight s^α on (0,1) and integration against
//! dμ_α(x) = |x|^{2α+1} dx / (2^{α+1} Γ(α+1)) on (−1,1).

use nalgebra::{DMatrix, SymmetricEigen};
use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::dd::DoubleDouble;
use crate::numerics::gamma::gamma_fn;

pub const DEFAULT_ORDER: usize = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    pub alpha: f64,
    pub order: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// Monic recurrence coefficients (a_k, b_k) for s^α on (0,1), k < n, in
/// double-double. b_0 is the total mass 1/(α+1).
fn recurrence(alpha: f64, n: usize) -> (Vec<DoubleDouble>, Vec<DoubleDouble>) {
    let b = DoubleDouble::new(alpha);
    let one = DoubleDouble::ONE;
    let two = DoubleDouble::new(2.0);
    let half = DoubleDouble::new(0.5);
    let mut diag = Vec::with_capacity(n);
    let mut off = Vec::with_capacity(n);
    for k in 0..n {
        let kf = DoubleDouble::new(k as f64);
        let s = two * kf + b;
        let ak = if k == 0 { b / (b + two) } else { b * b / (s * (s + two)) };
        diag.push((ak + one) * half);
        let bk = if k == 0 {
            one / (b + one)
        } else {
            let kb = kf + b;
            kf * kf * kb * kb / (s * s * (s + one) * (s - one))
        };
        off.push(bk);
    }
    (diag, off)
}

fn dd_sqrt(x: DoubleDouble) -> DoubleDouble {
    if x.hi <= 0.0 {
        return DoubleDouble::ZERO;
    }
    let s = DoubleDouble::new(x.hi.sqrt());
    s + (x - s * s) / (DoubleDouble::new(2.0) * s)
}

/// Orthonormal polynomial values p_0..p_n at x and p_n′(x). The final
/// normalisation is arbitrary; only the zeros of p_n matter.
fn orthonormal_eval(x: DoubleDouble, diag: &[DoubleDouble], sq: &[DoubleDouble]) -> (Vec<DoubleDouble>, DoubleDouble) {
    let n = diag.len();
    let mut p = vec![DoubleDouble::ZERO; n + 1];
    let mut dp = vec![DoubleDouble::ZERO; n + 1];
    p[0] = DoubleDouble::ONE / sq[0];
    for k in 0..n {
        let (prev, dprev, sb_k) = if k == 0 {
            (DoubleDouble::ZERO, DoubleDouble::ZERO, DoubleDouble::ZERO)
        } else {
            (p[k - 1], dp[k - 1], sq[k])
        };
        let sb_next = if k + 1 < n { sq[k + 1] } else { sq[n - 1] };
        let xa = x - diag[k];
        p[k + 1] = (xa * p[k] - sb_k * prev) / sb_next;
        dp[k + 1] = (p[k] + xa * dp[k] - sb_k * dprev) / sb_next;
    }
    (p, dp[n])
}

/// Gauss rule of the given order for weight s^α on (0,1).
pub fn gauss_jacobi_01(alpha: f64, order: usize) -> Result<QuadratureRule> {
    if !(alpha > -1.0) {
        return Err(Error::InvalidAlpha { alpha: alpha.to_string(), reason: "quadrature needs alpha > -1".into() });
    }
    if order == 0 {
        return Err(Error::PreconditionViolated("quadrature order must be positive".into()));
    }
    let (diag, off) = recurrence(alpha, order);
    let sq: Vec<DoubleDouble> = off.iter().map(|&b| dd_sqrt(b)).collect();
    let mut jm = DMatrix::<f64>::zeros(order, order);
    for k in 0..order {
        jm[(k, k)] = diag[k].to_f64();
        if k + 1 < order {
            let s = sq[k + 1].to_f64();
            jm[(k, k + 1)] = s;
            jm[(k + 1, k)] = s;
        }
    }
    let eig = SymmetricEigen::new(jm);
    let mut nodes: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    nodes.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let mut weights = Vec::with_capacity(order);
    for node in nodes.iter_mut() {
        let mut x = DoubleDouble::new(*node);
        for _ in 0..3 {
            let (p, dpn) = orthonormal_eval(x, &diag, &sq);
            if dpn.hi == 0.0 {
                break;
            }
            let step = p[order] / dpn;
            let cand = x - step;
            if cand.hi > 0.0 && cand.hi < 1.0 && step.hi.abs() < 1e-6 {
                x = cand;
            }
        }
        let (p, _) = orthonormal_eval(x, &diag, &sq);
        let s = p[..order].iter().fold(DoubleDouble::ZERO, |acc, &v| acc + v * v);
        *node = x.to_f64();
        weights.push((DoubleDouble::ONE / s).to_f64());
    }
    Ok(QuadratureRule { alpha, order, nodes, weights })
}

/// Precomputed rule for ∫_{−1}^{1} f dμ_α.
#[derive(Clone, Debug)]
pub struct MuQuadrature {
    pub alpha: f64,
    rule: QuadratureRule,
    norm: f64,
}

impl MuQuadrature {
    pub fn new(alpha: f64, order: usize) -> Result<Self> {
        let rule = gauss_jacobi_01(alpha, order)?;
        let norm = 1.0 / (2f64.powf(alpha + 1.0) * gamma_fn(alpha + 1.0)?);
        Ok(Self { alpha, rule, norm })
    }

    /// Only the even part of f contributes; it is sampled at x = ±√s.
    pub fn integrate<F: Fn(f64) -> Complex64>(&self, f: F) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&s, &w) in self.rule.nodes.iter().zip(&self.rule.weights) {
            let x = s.sqrt();
            acc += w * (f(x) + f(-x)) * 0.5;
        }
        acc * self.norm
    }

    pub fn integrate_real<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.integrate(|x| Complex64::new(f(x), 0.0)).re
    }

    pub fn order(&self) -> usize {
        self.rule.order
    }
}

/// One-shot ∫_{−1}^{1} f dμ_α.
pub fn integrate_mu<F: Fn(f64) -> Complex64>(f: F, alpha: f64, order: usize) -> Result<Complex64> {
    Ok(MuQuadrature::new(alpha, order)?.integrate(f))
}
