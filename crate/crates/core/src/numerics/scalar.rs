use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::complex::Complex64;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::format;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rational,
    Real64,
    Complex128,
}

impl FieldKind {
    pub fn name(self) -> &'static str {
        match self {
            FieldKind::Rational => "rational",
            FieldKind::Real64 => "real64",
            FieldKind::Complex128 => "complex128",
        }
    }
}

/// A coefficient field. Rational arithmetic is exact; the floating fields
/// follow binary64 semantics.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const KIND: FieldKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rational(q: &BigRational) -> Self;
    /// Exact conversion for every finite `x` (binary fractions are rational).
    fn from_f64(x: f64) -> Self;
    fn is_zero(&self) -> bool;
    fn to_c64(&self) -> Complex64;
    fn to_json(&self) -> Value;

    fn magnitude(&self) -> f64 {
        self.to_c64().norm()
    }

    fn powi(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_i64(p) / Self::from_i64(q)
    }
}

impl Scalar for BigRational {
    const KIND: FieldKind = FieldKind::Rational;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
    fn from_f64(x: f64) -> Self {
        BigRational::from_float(x).expect("finite f64")
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(self), 0.0)
    }
    fn to_json(&self) -> Value {
        Value::String(rational_string(self))
    }
    fn magnitude(&self) -> f64 {
        rational_to_f64(&self.abs())
    }
}

impl Scalar for f64 {
    const KIND: FieldKind = FieldKind::Real64;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_rational(q: &BigRational) -> Self {
        rational_to_f64(q)
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(*self, 0.0)
    }
    fn to_json(&self) -> Value {
        format::num(*self)
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Scalar for Complex64 {
    const KIND: FieldKind = FieldKind::Complex128;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn from_rational(q: &BigRational) -> Self {
        Complex64::new(rational_to_f64(q), 0.0)
    }
    fn from_f64(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn to_json(&self) -> Value {
        format::complex(*self)
    }
}

/// Nearest-ish f64 of a rational, robust to numerators and denominators
/// beyond the f64 range.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && n.abs() < 9.0e15 && d < 9.0e15 {
            return n / d;
        }
    }
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    // Scale to ~64 significant bits of quotient, then undo the shift.
    let shift = 64 - (nb - db);
    let scaled = if shift >= 0 {
        (q.numer() << (shift as usize)) / q.denom()
    } else {
        q.numer() / (q.denom() << ((-shift) as usize))
    };
    let m = scaled.to_f64().unwrap_or(f64::NAN);
    m * 2f64.powi(-(shift as i32))
}

/// `p/q` text, or just `p` for integers.
pub fn rational_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip_is_exact() {
        let a = BigRational::from_ratio(3, 7);
        let b = BigRational::from_ratio(-5, 11);
        assert_eq!((a.clone() + b.clone()) - b, a);
    }

    #[test]
    fn huge_rational_to_f64() {
        let big = BigRational::from_integer(BigInt::from(10).pow(400u32));
        let q = (big.clone() + <BigRational as Scalar>::one()) / (big * BigRational::from_i64(3));
        assert!((rational_to_f64(&q) - 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn powi_matches_repeated_product() {
        let x = BigRational::from_ratio(-2, 3);
        assert_eq!(x.powi(5), BigRational::from_ratio(-32, 243));
        assert_eq!(Complex64::new(0.0, 1.0).powi(2), Complex64::new(-1.0, 0.0));
    }
}
