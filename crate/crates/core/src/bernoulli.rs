//! Bernoulli–Dunkl polynomials: E_α(xt)/𝓘_{α+1}(t) = Σ 𝔅_n(x) t^n/γ_n.

use num::{BigInt, BigRational};
use serde_json::{json, Value};

use crate::appell::{appell_from_reciprocal, dunkl_binom, gamma_closed, gamma_ladder, lambda_op, translate_bivariate, DensePoly, Parity};
use crate::error::{Error, Result};
use crate::numerics::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct BernoulliDunklFamily<S> {
    pub alpha: S,
    pub polys: Vec<DensePoly<S>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    Zero,
    One,
}

/// Taylor coefficients of 𝓘_{α+1}: a_{2k} = 1/γ_{2k,α+1}, odd ones vanish.
pub fn reciprocal_coeffs<S: Scalar>(alpha: &S, n: usize) -> Vec<S> {
    let a1 = alpha.clone() + S::one();
    (0..=n)
        .map(|m| if m % 2 == 0 { S::one() / gamma_closed(&a1, m) } else { S::zero() })
        .collect()
}

pub fn bernoulli_family<S: Scalar>(alpha: &S, n: usize) -> Result<BernoulliDunklFamily<S>> {
    let polys = appell_from_reciprocal(&reciprocal_coeffs(alpha, n), alpha)?;
    Ok(BernoulliDunklFamily { alpha: alpha.clone(), polys })
}

impl<S: Scalar> BernoulliDunklFamily<S> {
    pub fn get(&self, n: usize) -> Result<&DensePoly<S>> {
        self.polys.get(n).ok_or(Error::IndexOutOfRange { index: n as i64, len: self.polys.len() })
    }

    /// 𝔅_n(0) or 𝔅_n(1).
    pub fn value(&self, n: usize, at: Endpoint) -> Result<S> {
        let p = self.get(n)?;
        Ok(match at {
            Endpoint::Zero => p.coeff(0),
            Endpoint::One => p.eval(&S::one()),
        })
    }

    /// Λ_α 𝔅_n = k_n 𝔅_{n−1} for every stored n (exact comparison).
    pub fn appell_property_holds(&self) -> bool {
        let ladder = match gamma_ladder(&self.alpha, self.polys.len()) {
            Ok(l) => l,
            Err(_) => return false,
        };
        (1..self.polys.len()).all(|n| lambda_op(&self.polys[n], &self.alpha) == self.polys[n - 1].scale(ladder.k(n)))
    }

    /// Even/odd tags and 𝔅_{2n+1}(±1) = 0 for n ≥ 1.
    pub fn parity_holds(&self) -> bool {
        self.polys.iter().enumerate().all(|(n, p)| {
            let tag = if n % 2 == 0 { Parity::Even } else { Parity::Odd };
            let vanish = n % 2 == 0 || n == 1 || (p.eval(&S::one()).is_zero() && p.eval(&-S::one()).is_zero());
            p.parity() == tag && vanish
        })
    }

    /// Rebuilds x^n from the split recurrences
    /// x^{2n} = 𝔅_{2n} + (α+1) Σ_{j<n} C_α(2n,2j) 𝔅_{2j}/(α + d(n−j))
    /// (and the odd analogue), `d` giving the denominator offset. One flag per degree.
    fn split_reconstruction(&self, denom: impl Fn(usize) -> S) -> Vec<bool> {
        let a1 = self.alpha.clone() + S::one();
        (0..self.polys.len())
            .map(|deg| {
                let half = deg / 2;
                let odd = deg % 2;
                let mut acc = self.polys[deg].clone();
                for j in 0..half {
                    let low = 2 * j + odd;
                    let b = match dunkl_binom(&self.alpha, deg, low) {
                        Ok(b) => b,
                        Err(_) => return false,
                    };
                    let c = a1.clone() * b / (self.alpha.clone() + denom(half - j));
                    acc = acc.add(&self.polys[low].scale(&c));
                }
                acc == DensePoly::monomial(deg)
            })
            .collect()
    }

    /// τ_y𝔅_k = Σ_j C_α(k,j) 𝔅_j y^{k−j}, compared exactly power by power in y.
    /// One flag per k.
    pub fn translation_holds(&self) -> Vec<bool> {
        self.polys
            .iter()
            .enumerate()
            .map(|(k, p)| {
                let Ok(parts) = translate_bivariate(p, &self.alpha) else { return false };
                parts.len() == k + 1
                    && parts.iter().enumerate().all(|(m, part)| match dunkl_binom(&self.alpha, k, k - m) {
                        Ok(b) => *part == self.polys[k - m].scale(&b),
                        Err(_) => false,
                    })
            })
            .collect()
    }

    /// Per-degree success of the split recurrence with denominator α + m + 1.
    pub fn split_recurrence_check(&self) -> Vec<bool> {
        self.split_reconstruction(|m| S::from_i64(m as i64 + 1))
    }

    /// Same with the denominator α + 2m + 1 as it appears in print.
    pub fn split_recurrence_check_printed(&self) -> Vec<bool> {
        self.split_reconstruction(|m| S::from_i64(2 * m as i64 + 1))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": "bernoulli",
            "polys": self.polys.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Classical B_0..B_N from Σ_{j<n} C(n,j) B_j = 0 (n ≥ 2), B_0 = 1, and
/// B_n(x) = Σ_k C(n,k) B_k x^{n−k}.
pub fn classical_bernoulli(n_max: usize) -> Vec<DensePoly<BigRational>> {
    let binom = binomial_table(n_max + 1);
    let mut nums: Vec<BigRational> = vec![BigRational::from_i64(1)];
    for n in 2..=n_max + 1 {
        let s = (0..n - 1).fold(BigRational::from_i64(0), |acc, j| acc + binom[n][j].clone() * nums[j].clone());
        nums.push(-s / binom[n][n - 1].clone());
    }
    (0..=n_max)
        .map(|n| {
            let mut c = vec![BigRational::from_i64(0); n + 1];
            for (k, bk) in nums.iter().enumerate().take(n + 1) {
                c[n - k] = binom[n][k].clone() * bk.clone();
            }
            DensePoly::new(c)
        })
        .collect()
}

pub(crate) fn binomial_table(n: usize) -> Vec<Vec<BigRational>> {
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigRational::from_i64(1); i + 1];
        for k in 1..i {
            row[k] = t[i - 1][k - 1].clone() + t[i - 1][k].clone();
        }
        t.push(row);
    }
    t
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionEntry {
    pub n: usize,
    pub pass: bool,
    pub max_abs_err: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionReport {
    pub name: String,
    pub entries: Vec<ReductionEntry>,
}

impl ReductionReport {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn max_abs_err(&self) -> f64 {
        self.entries.iter().map(|e| e.max_abs_err).fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.name,
            "pass": self.pass(),
            "max_abs_err": crate::format::num(self.max_abs_err()),
            "entries": self.entries.iter().map(|e| json!({
                "n": e.n, "pass": e.pass, "max_abs_err": crate::format::num(e.max_abs_err)
            })).collect::<Vec<_>>(),
        })
    }
}

/// 𝔅_{n,−1/2}(2x−1) = 2^n B_n(x), exactly, for n ≤ N.
pub fn classical_reduction_check(n_max: usize) -> Result<ReductionReport> {
    let alpha = BigRational::new(BigInt::from(-1), BigInt::from(2));
    let fam = bernoulli_family(&alpha, n_max)?;
    let classical = classical_bernoulli(n_max);
    let two = BigRational::from_i64(2);
    let entries = (0..=n_max)
        .map(|n| {
            let lhs = fam.polys[n].compose_affine(&two, &BigRational::from_i64(-1));
            let rhs = classical[n].scale(&two.powi(n as u32));
            let err = crate::appell::coeff_distance(&lhs, &rhs);
            ReductionEntry { n, pass: lhs == rhs, max_abs_err: err }
        })
        .collect();
    Ok(ReductionReport { name: "bernoulli_classical_reduction".into(), entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn printed_table() {
        let a = q(2, 7);
        let f = bernoulli_family(&a, 5).unwrap();
        let one = q(1, 1);
        assert_eq!(f.polys[0], DensePoly::constant(one.clone()));
        assert_eq!(f.polys[1], DensePoly::monomial(1));
        let b2 = DensePoly::new(vec![-(a.clone() + one.clone()) / (a.clone() + q(2, 1)), q(0, 1), one.clone()]);
        assert_eq!(f.polys[2], b2);
        assert_eq!(f.polys[3], DensePoly::new(vec![q(0, 1), q(-1, 1), q(0, 1), one.clone()]));
        let b5 = DensePoly::new(vec![
            q(0, 1),
            (a.clone() + q(4, 1)) / (a.clone() + q(2, 1)),
            q(0, 1),
            q(-2, 1) * (a.clone() + q(3, 1)) / (a.clone() + q(2, 1)),
            q(0, 1),
            one.clone(),
        ]);
        assert_eq!(f.polys[5], b5);
        // 𝔅_4 constant is +(α+4)(α+1)/((α+3)(α+2))
        let c4 = (a.clone() + q(4, 1)) * (a.clone() + one.clone()) / ((a.clone() + q(3, 1)) * (a.clone() + q(2, 1)));
        assert_eq!(f.polys[4], DensePoly::new(vec![c4, q(0, 1), q(-2, 1), q(0, 1), one]));
    }

    #[test]
    fn endpoint_values() {
        let a = q(1, 2);
        let f = bernoulli_family(&a, 4).unwrap();
        assert_eq!(f.value(2, Endpoint::One).unwrap(), q(1, 1) / (a.clone() + q(2, 1)));
        assert_eq!(f.value(3, Endpoint::One).unwrap(), q(0, 1));
        assert_eq!(f.value(2, Endpoint::Zero).unwrap(), -(a.clone() + q(1, 1)) / (a + q(2, 1)));
        assert!(f.value(9, Endpoint::One).is_err());
    }

    #[test]
    fn classical_reduction_small() {
        let r = classical_reduction_check(6).unwrap();
        assert!(r.pass());
        let b = classical_bernoulli(3);
        assert_eq!(b[3], DensePoly::new(vec![q(0, 1), q(1, 2), q(-3, 2), q(1, 1)]));
    }

    #[test]
    fn split_recurrence_corrected_vs_printed() {
        let f = bernoulli_family(&q(0, 1), 6).unwrap();
        assert!(f.split_recurrence_check().iter().all(|&b| b));
        let printed = f.split_recurrence_check_printed();
        assert!(printed[0] && printed[1] && !printed[2]);
    }

    #[test]
    fn translation_theorem() {
        let f = bernoulli_family(&q(1, 2), 8).unwrap();
        assert!(f.translation_holds().iter().all(|&b| b));
        // classical case: τ_y is the shift x ↦ x + y
        let c = bernoulli_family(&q(-1, 2), 4).unwrap();
        let shifted = dunkl_translate_check(&c.polys[3]);
        assert!(shifted);
    }

    fn dunkl_translate_check(p: &DensePoly<BigRational>) -> bool {
        let y = q(3, 1);
        let lhs = crate::appell::dunkl_translate(p, &y, &q(-1, 2)).unwrap();
        lhs == p.compose_affine(&q(1, 1), &y)
    }

    #[test]
    fn complex_alpha_family() {
        use num::complex::Complex64;
        let a = Complex64::new(0.3, 0.4);
        let f = bernoulli_family(&a, 2).unwrap();
        let c = -(a + 1.0) / (a + 2.0);
        assert!((f.polys[2].coeff(0) - c).norm() < 1e-15);
    }
}
