//! The order α, kept exact when given as a fraction.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, Zero};

use crate::error::{Error, Result};
use crate::numerics::scalar::{rational_string, rational_to_f64};

#[derive(Clone, Debug, PartialEq)]
pub enum DunklParam {
    Rational(BigRational),
    Real(f64),
}

impl DunklParam {
    pub fn rational(p: i64, q: i64) -> Self {
        DunklParam::Rational(BigRational::new(p.into(), q.into()))
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            DunklParam::Rational(q) => rational_to_f64(q),
            DunklParam::Real(x) => *x,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            DunklParam::Rational(q) => Some(q),
            DunklParam::Real(_) => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, DunklParam::Rational(_))
    }

    pub fn is_negative_integer(&self) -> bool {
        match self {
            DunklParam::Rational(q) => q.is_integer() && q.is_negative(),
            DunklParam::Real(x) => *x < 0.0 && x.fract() == 0.0,
        }
    }

    /// Zero tables need real α > −2.
    pub fn zero_admissible(&self) -> bool {
        self.as_f64() > -2.0
    }

    /// Which arithmetic path the value selects.
    pub fn arithmetic(&self) -> &'static str {
        match self {
            DunklParam::Rational(_) => "rational",
            DunklParam::Real(_) => "real64",
        }
    }

    pub fn require_admissible(&self) -> Result<()> {
        if self.is_negative_integer() {
            Err(Error::NegativeIntegerAlpha(self.to_string()))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for DunklParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DunklParam::Rational(q) => write!(f, "{}", rational_string(q)),
            DunklParam::Real(x) => write!(f, "{x}"),
        }
    }
}

/// `"p/q"` and plain integers parse as exact rationals; anything else as a decimal.
impl FromStr for DunklParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some((p, q)) = t.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| Error::Parse(s.into()))?;
            let q: BigInt = q.trim().parse().map_err(|_| Error::Parse(s.into()))?;
            if q.is_zero() {
                return Err(Error::Parse(s.into()));
            }
            return Ok(DunklParam::Rational(BigRational::new(p, q)));
        }
        if let Ok(n) = t.parse::<BigInt>() {
            return Ok(DunklParam::Rational(BigRational::from_integer(n)));
        }
        let x: f64 = t.parse().map_err(|_| Error::Parse(s.into()))?;
        if !x.is_finite() {
            return Err(Error::Parse(s.into()));
        }
        Ok(DunklParam::Real(x))
    }
}
