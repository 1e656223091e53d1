//! Finite Laurent series and the pair (P_k, Q_k) with
//! 𝓘_α^{(k)}(z) = 𝓘_α(z) P_k(z) + 𝓘_{α+1}(z) Q_k(z).

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::scalar::Scalar;

/// Σ_i coeffs[i] z^{low+i}.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<S> {
    pub low: i32,
    pub coeffs: Vec<S>,
}

impl<S: Scalar> LaurentPoly<S> {
    pub fn zero() -> Self {
        Self { low: 0, coeffs: Vec::new() }
    }

    pub fn monomial(c: S, power: i32) -> Self {
        Self { low: power, coeffs: vec![c] }.trimmed()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    /// Coefficient of z^p.
    pub fn coeff(&self, p: i32) -> S {
        let i = p - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            S::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            return Self::zero();
        }
        self.coeffs.drain(..lead);
        self.low += lead as i32;
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let coeffs = (low..=high).map(|p| self.coeff(p) + other.coeff(p)).collect();
        Self { low, coeffs }.trimmed()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self { low: self.low, coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }.trimmed()
    }

    /// Multiply by z^k.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.clone() * S::from_i64((self.low + i as i32) as i64))
            .collect();
        Self { low: self.low - 1, coeffs }.trimmed()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_c64();
        }
        acc * z.powi(self.low)
    }
}

fn two_alpha_plus_one<S: Scalar>(alpha: &S) -> Result<S> {
    let a = alpha.to_c64();
    if a.im == 0.0 && a.re < 0.0 && a.re.fract() == 0.0 {
        return Err(Error::NegativeIntegerAlpha(format!("{}", a.re)));
    }
    Ok(S::from_i64(2) * (alpha.clone() + S::one()))
}

/// (P_m, Q_m) for m = 0..=k.
pub fn deriv_poly_ladder<S: Scalar>(alpha: &S, k: usize) -> Result<Vec<(LaurentPoly<S>, LaurentPoly<S>)>> {
    let c = two_alpha_plus_one(alpha)?;
    let inv_c = S::one() / c.clone();
    let mut out = Vec::with_capacity(k + 1);
    let mut p = LaurentPoly::monomial(S::one(), 0);
    let mut q = LaurentPoly::zero();
    out.push((p.clone(), q.clone()));
    for _ in 0..k {
        let q_over_z = q.shift(-1).scale(&c);
        let np = p.derivative().add(&q_over_z);
        let nq = q.derivative().add(&p.shift(1).scale(&inv_c)).add(&q_over_z.scale(&-S::one()));
        p = np;
        q = nq;
        out.push((p.clone(), q.clone()));
    }
    Ok(out)
}

pub fn deriv_polys<S: Scalar>(alpha: &S, k: usize) -> Result<(LaurentPoly<S>, LaurentPoly<S>)> {
    Ok(deriv_poly_ladder(alpha, k)?.pop().expect("ladder is non-empty"))
}
