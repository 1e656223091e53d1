use num::complex::Complex64;
use serde_json::{json, Value};

use crate::numerics::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    None,
}

impl Parity {
    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::None => "none",
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
            Parity::None => Parity::None,
        }
    }
}

/// c_0 + c_1 x + … + c_n x^n. Trailing zeros are trimmed, so the degree is
/// the index of the last nonzero coefficient. The parity tag is read off the
/// coefficients (exact zeros only).
#[derive(Clone, Debug, PartialEq)]
pub struct DensePoly<S> {
    coeffs: Vec<S>,
    parity: Parity,
}

impl<S: Scalar> DensePoly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let parity = infer_parity(&coeffs);
        Self { coeffs, parity }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(n: usize) -> Self {
        let mut c = vec![S::zero(); n + 1];
        c[n] = S::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs.iter().rev().fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_c64(&self, x: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c.to_c64())
    }

    /// p(a·x + b).
    pub fn compose_affine(&self, a: &S, b: &S) -> Self {
        let lin = Self::new(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn map<T: Scalar, F: Fn(&S) -> T>(&self, f: F) -> DensePoly<T> {
        DensePoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn to_c64(&self) -> DensePoly<Complex64> {
        self.map(|c| c.to_c64())
    }

    /// max_i |c_i|.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": S::KIND.name(),
            "coeffs": self.coeffs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "parity": self.parity.name(),
        })
    }
}

fn infer_parity<S: Scalar>(c: &[S]) -> Parity {
    if c.iter().skip(1).step_by(2).all(|x| x.is_zero()) {
        Parity::Even
    } else if c.iter().step_by(2).all(|x| x.is_zero()) {
        Parity::Odd
    } else {
        Parity::None
    }
}

/// max_i |a_i − b_i|.
pub fn coeff_distance<S: Scalar, T: Scalar>(a: &DensePoly<S>, b: &DensePoly<T>) -> f64 {
    let n = a.coeffs().len().max(b.coeffs().len());
    (0..n).map(|i| (a.coeff(i).to_c64() - b.coeff(i).to_c64()).norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn degree_and_parity() {
        let p = DensePoly::new(vec![q(1, 2), q(0, 1), q(3, 1), q(0, 1)]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.parity(), Parity::Even);
        assert_eq!(DensePoly::new(vec![q(0, 1), q(1, 1)]).parity(), Parity::Odd);
        assert_eq!(DensePoly::<f64>::zero().degree(), None);
    }

    #[test]
    fn affine_composition() {
        // x³ − x at 2x − 1 = 8x³ − 12x² + 4x
        let p = DensePoly::new(vec![q(0, 1), q(-1, 1), q(0, 1), q(1, 1)]);
        let r = p.compose_affine(&q(2, 1), &q(-1, 1));
        assert_eq!(r, DensePoly::new(vec![q(0, 1), q(4, 1), q(-12, 1), q(8, 1)]));
    }
}
