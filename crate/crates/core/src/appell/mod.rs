//! γ_{n,α}, Dunkl binomials, the Dunkl operator Λ_α and translation τ_y on
//! polynomials, and the generic Appell–Dunkl triangular solver.

pub mod poly;

use num::complex::Complex64;

pub use poly::{coeff_distance, DensePoly, Parity};

use crate::error::{Error, Result};
use crate::numerics::gamma::pochhammer;
use crate::numerics::scalar::Scalar;

pub(crate) fn require_admissible<S: Scalar>(alpha: &S) -> Result<()> {
    let a = alpha.to_c64();
    if a.im == 0.0 && a.re < 0.0 && a.re.fract() == 0.0 {
        Err(Error::NegativeIntegerAlpha(format!("{}", a.re)))
    } else {
        Ok(())
    }
}

/// γ_0..γ_N together with k_n = γ_n/γ_{n−1}.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaLadder<S> {
    pub alpha: S,
    gammas: Vec<S>,
    ratios: Vec<S>,
}

/// k_n = n + (α + 1/2)(1 − (−1)^n).
pub fn k_ratio<S: Scalar>(alpha: &S, n: usize) -> S {
    if n % 2 == 0 {
        S::from_i64(n as i64)
    } else {
        S::from_i64(n as i64 + 1) + S::from_i64(2) * alpha.clone()
    }
}

/// γ_{2k} = 2^{2k} k! (α+1)_k, γ_{2k+1} = 2^{2k+1} k! (α+1)_{k+1}.
pub fn gamma_closed<S: Scalar>(alpha: &S, n: usize) -> S {
    let k = n / 2;
    let fact = (1..=k as i64).fold(S::one(), |acc, i| acc * S::from_i64(i));
    let two_pow = S::from_i64(2).powi(n as u32);
    let rising = pochhammer(&(alpha.clone() + S::one()), k + n % 2);
    two_pow * fact * rising
}

pub fn gamma_ladder<S: Scalar>(alpha: &S, n: usize) -> Result<GammaLadder<S>> {
    require_admissible(alpha)?;
    let gammas: Vec<S> = (0..=n).map(|m| gamma_closed(alpha, m)).collect();
    let ratios: Vec<S> = (1..=n).map(|m| k_ratio(alpha, m)).collect();
    Ok(GammaLadder { alpha: alpha.clone(), gammas, ratios })
}

impl<S: Scalar> GammaLadder<S> {
    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    pub fn gamma(&self, n: usize) -> &S {
        &self.gammas[n]
    }

    /// k_n, n ≥ 1.
    pub fn k(&self, n: usize) -> &S {
        &self.ratios[n - 1]
    }

    /// Whether γ_n = k_n γ_{n−1} holds for every n (exactly in the rational field).
    pub fn ratio_recursion_holds(&self) -> bool {
        (1..self.gammas.len()).all(|n| {
            let lhs = self.k(n).clone() * self.gammas[n - 1].clone();
            match S::KIND {
                crate::numerics::FieldKind::Rational => lhs == self.gammas[n],
                _ => (lhs - self.gammas[n].clone()).magnitude() <= 1e-14 * self.gammas[n].magnitude(),
            }
        })
    }

    /// γ_n / (γ_j γ_{n−j}).
    pub fn binom(&self, n: usize, j: usize) -> Result<S> {
        if j > n || n >= self.gammas.len() {
            return Err(Error::IndexOutOfRange { index: j as i64, len: n + 1 });
        }
        Ok(self.gammas[n].clone() / (self.gammas[j].clone() * self.gammas[n - j].clone()))
    }
}

pub fn dunkl_binom<S: Scalar>(alpha: &S, n: usize, j: usize) -> Result<S> {
    gamma_ladder(alpha, n)?.binom(n, j)
}

/// Λ_α on polynomials: x^n ↦ k_n x^{n−1}.
pub fn lambda_op<S: Scalar>(p: &DensePoly<S>, alpha: &S) -> DensePoly<S> {
    let c = p.coeffs();
    DensePoly::new((1..c.len()).map(|n| c[n].clone() * k_ratio(alpha, n)).collect())
}

/// Coefficients of y^n in τ_y p, i.e. Λ^n p / γ_n, for n = 0..=deg p.
pub fn translate_bivariate<S: Scalar>(p: &DensePoly<S>, alpha: &S) -> Result<Vec<DensePoly<S>>> {
    let d = p.degree().unwrap_or(0);
    let ladder = gamma_ladder(alpha, d)?;
    let mut out = Vec::with_capacity(d + 1);
    let mut cur = p.clone();
    for n in 0..=d {
        out.push(cur.scale(&(S::one() / ladder.gamma(n).clone())));
        cur = lambda_op(&cur, alpha);
    }
    Ok(out)
}

/// τ_y p = Σ_n y^n/γ_n Λ^n p.
pub fn dunkl_translate<S: Scalar>(p: &DensePoly<S>, y: &S, alpha: &S) -> Result<DensePoly<S>> {
    let parts = translate_bivariate(p, alpha)?;
    let mut acc = DensePoly::zero();
    let mut yn = S::one();
    for part in parts {
        acc = acc.add(&part.scale(&yn));
        yn = yn * y.clone();
    }
    Ok(acc)
}

/// Solves x^n = γ_n Σ_{j≤n} A_j a_{n−j}/γ_j for A_0..A_N, N = a.len() − 1.
/// The a_m are the Taylor coefficients of 1/A(t), so that
/// A(t)E_α(xt) = Σ A_n(x) t^n/γ_n.
pub fn appell_from_reciprocal<S: Scalar>(a: &[S], alpha: &S) -> Result<Vec<DensePoly<S>>> {
    if a.is_empty() || a[0].is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let n_max = a.len() - 1;
    let ladder = gamma_ladder(alpha, n_max)?;
    let inv_a0 = S::one() / a[0].clone();
    let mut out: Vec<DensePoly<S>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = DensePoly::monomial(n);
        for (j, aj) in out.iter().enumerate() {
            let w = &a[n - j];
            if w.is_zero() {
                continue;
            }
            let c = ladder.gamma(n).clone() * w.clone() / ladder.gamma(j).clone();
            acc = acc.sub(&aj.scale(&c));
        }
        out.push(acc.scale(&inv_a0));
    }
    Ok(out)
}

/// Σ_{n≤N} z^n/γ_{n,α} in binary64; `None` applies the series stop rule.
pub fn kernel_taylor(alpha: f64, z: Complex64, terms: Option<usize>) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut small = 0;
    let cap = terms.unwrap_or(10_000);
    for n in 1..=cap {
        term = term * z / k_ratio(&alpha, n);
        sum += term;
        if terms.is_none() {
            if term.norm() < 1e-17 * sum.norm() {
                small += 1;
                if small == 3 {
                    break;
                }
            } else {
                small = 0;
            }
        }
    }
    sum
}
