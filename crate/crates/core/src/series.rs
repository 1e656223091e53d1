//! Principal-value sums over the zeros s_j of 𝓘_{α+1}(ix): truncation with
//! ±j pairing, a fitted tail, and closed forms.

use std::f64::consts::PI;
use std::fmt;

use nalgebra::{Matrix3, Vector3};
use num::complex::Complex64;
use serde_json::{json, Value};

use crate::apostol_euler::aed_family;
use crate::appell::gamma_closed;
use crate::bernoulli::{bernoulli_family, Endpoint};
use crate::bessel::cal_i::cal_i;
use crate::bessel::deriv::cal_i_derivs;
use crate::bessel::laurent::deriv_poly_ladder;
use crate::bessel::zeros::{cal_i_at_izero, ZeroKind, ZeroTable};
use crate::calogero::calogero_numbers;
use crate::error::{Error, Result};
use crate::format;
use crate::numerics::gamma::pochhammer;
use crate::numerics::scalar::Scalar;
use crate::numerics::sum::CompensatedSum;
use crate::par::Execution;

/// Minimum number of indices the tail fit looks at.
const FIT_SPAN: usize = 20;
const FIT_POINTS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SeriesKind {
    /// σ_k = Σ_{j≥1} s_j^{−2k}
    Sigma(usize),
    /// ρ_k = Σ_{j≥1} 1/(𝓘_α(is_j) s_j^{2k})
    Rho(usize),
    /// η_{k,u} = Σ_{j≠0} (s_j − u)^{−(k+1)}
    EtaU(usize, Complex64),
    /// η_k^{l} = Σ_{j∉{0,l}} (s_j − s_l)^{−(k+1)}
    EtaL(usize, usize),
    /// ω_{k,u} = Σ_{j≠0} 1/(𝓘_α(is_j)(s_j − u)^{k+1})
    OmegaU(usize, Complex64),
    /// ω_k^{l} = Σ_{j∉{0,l}} 1/(𝓘_α(is_j)(s_j − s_l)^{k+1})
    OmegaL(usize, usize),
}

impl SeriesKind {
    pub fn k(&self) -> usize {
        match *self {
            SeriesKind::Sigma(k) | SeriesKind::Rho(k) => k,
            SeriesKind::EtaU(k, _) | SeriesKind::EtaL(k, _) => k,
            SeriesKind::OmegaU(k, _) | SeriesKind::OmegaL(k, _) => k,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            SeriesKind::Sigma(_) => "sigma",
            SeriesKind::Rho(_) => "rho",
            SeriesKind::EtaU(..) => "eta_u",
            SeriesKind::EtaL(..) => "eta_l",
            SeriesKind::OmegaU(..) => "omega_u",
            SeriesKind::OmegaL(..) => "omega_l",
        }
    }

    /// `u` or `l` as printed in reports; empty for σ/ρ.
    pub fn u_or_l(&self) -> String {
        match *self {
            SeriesKind::EtaU(_, u) | SeriesKind::OmegaU(_, u) => format::complex_tsv(u),
            SeriesKind::EtaL(_, l) | SeriesKind::OmegaL(_, l) => l.to_string(),
            _ => String::new(),
        }
    }

    fn weighted(&self) -> bool {
        matches!(self, SeriesKind::Rho(_) | SeriesKind::OmegaU(..) | SeriesKind::OmegaL(..))
    }

    fn excluded(&self) -> Option<usize> {
        match *self {
            SeriesKind::EtaL(_, l) | SeriesKind::OmegaL(_, l) => Some(l),
            _ => None,
        }
    }

    /// Decay exponent of the ±j-paired terms without the 1/𝓘_α(is_j) weight.
    fn pair_exponent(&self) -> f64 {
        let k = self.k();
        match self {
            SeriesKind::Sigma(_) | SeriesKind::Rho(_) => (2 * k) as f64,
            _ => paired_power(k) as f64,
        }
    }

    /// Decay exponent p of the summed terms, |t_j| ~ s_j^{−p}.
    fn decay(&self, alpha: f64) -> f64 {
        if self.weighted() {
            self.pair_exponent() - alpha - 0.5
        } else {
            self.pair_exponent()
        }
    }

    /// Convergence preconditions.
    pub fn check(&self, alpha: f64) -> Result<()> {
        if !(alpha > -2.0) || alpha == -1.0 || !alpha.is_finite() {
            return Err(Error::InvalidAlpha { alpha: alpha.to_string(), reason: "zero sums need real alpha > -2, alpha != -1".into() });
        }
        let k = self.k();
        match *self {
            SeriesKind::Sigma(_) | SeriesKind::Rho(_) if k == 0 => {
                return Err(Error::PreconditionViolated(format!("{} needs k >= 1", self.tag())));
            }
            SeriesKind::Rho(_) if alpha > 2.0 * k as f64 - 1.5 => {
                return Err(Error::PreconditionViolated(format!("Re alpha <= 2k - 3/2 fails (alpha = {alpha}, k = {k})")));
            }
            SeriesKind::OmegaU(..) | SeriesKind::OmegaL(..) if alpha >= paired_power(k) as f64 - 0.5 => {
                return Err(Error::PreconditionViolated(format!(
                    "Re alpha < {} - 1/2 fails (alpha = {alpha}, k = {k})",
                    paired_power(k)
                )));
            }
            SeriesKind::EtaU(_, u) | SeriesKind::OmegaU(_, u) if u.norm() == 0.0 => {
                return Err(Error::InvalidU("u = 0".into()));
            }
            SeriesKind::EtaL(_, 0) | SeriesKind::OmegaL(_, 0) => {
                return Err(Error::IndexOutOfRange { index: 0, len: 0 });
            }
            _ => {}
        }
        Ok(())
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesKind::Sigma(_) | SeriesKind::Rho(_) => write!(f, "{}({})", self.tag(), self.k()),
            _ => write!(f, "{}({}, {})", self.tag(), self.k(), self.u_or_l()),
        }
    }
}

/// Decay power of (s−u)^{−n} + (−s−u)^{−n}, n = k+1: k+2 for even k, k+1 for odd k.
fn paired_power(k: usize) -> usize {
    if k % 2 == 0 {
        k + 2
    } else {
        k + 1
    }
}

/// (s−u)^{−n} + (−s−u)^{−n} without cancellation.
fn paired(s: f64, u: Complex64, n: usize) -> Complex64 {
    let a = 1.0 / (s - u);
    let c = 1.0 / (s + u);
    if n % 2 == 0 {
        a.powi(n as i32) + c.powi(n as i32)
    } else {
        let mut geo = Complex64::new(0.0, 0.0);
        for i in 0..n {
            geo += a.powi((n - 1 - i) as i32) * c.powi(i as i32);
        }
        2.0 * u * a * c * geo
    }
}

struct Terms<'a> {
    kind: SeriesKind,
    alpha: f64,
    table: &'a ZeroTable,
    u: Complex64,
    weight_l: f64,
}

impl<'a> Terms<'a> {
    fn new(kind: SeriesKind, alpha: f64, table: &'a ZeroTable) -> Result<Self> {
        kind.check(alpha)?;
        if table.kind != ZeroKind::S || table.alpha != alpha {
            return Err(Error::PreconditionViolated(format!("need an s-table for alpha = {alpha}")));
        }
        let (u, weight_l) = match kind {
            SeriesKind::EtaU(_, u) | SeriesKind::OmegaU(_, u) => (u, 1.0),
            SeriesKind::EtaL(_, l) => (Complex64::new(table.signed(l as i64)?, 0.0), 1.0),
            SeriesKind::OmegaL(_, l) => (Complex64::new(table.signed(l as i64)?, 0.0), 1.0 / cal_i_at_izero(alpha, table, l)?),
            _ => (Complex64::new(0.0, 0.0), 1.0),
        };
        Ok(Terms { kind, alpha, table, u, weight_l })
    }

    /// 1/𝓘_α(is_j), with its sign (−1)^j sign Γ(α+1) checked.
    fn weight(&self, j: usize) -> Result<f64> {
        let v = cal_i_at_izero(self.alpha, self.table, j)?;
        let flip = if self.alpha < -1.0 { -1.0 } else { 1.0 };
        let expected = if j % 2 == 0 { flip } else { -flip };
        if v * expected <= 0.0 {
            return Err(Error::PreconditionViolated(format!("sign of I_alpha(i s_{j}) does not alternate")));
        }
        Ok(1.0 / v)
    }

    /// Combined j and −j contribution.
    fn term(&self, j: usize) -> Result<Complex64> {
        let s = self.table.signed(j as i64)?;
        let k = self.kind.k();
        Ok(match self.kind {
            SeriesKind::Sigma(_) => Complex64::new(s.powi(-2 * k as i32), 0.0),
            SeriesKind::Rho(_) => Complex64::new(self.weight(j)? * s.powi(-2 * k as i32), 0.0),
            SeriesKind::EtaU(..) => paired(s, self.u, k + 1),
            SeriesKind::OmegaU(..) => self.weight(j)? * paired(s, self.u, k + 1),
            SeriesKind::EtaL(_, l) | SeriesKind::OmegaL(_, l) if l == j => {
                // only −l survives
                self.weight_l * (-2.0 * self.u).powi(-(k as i32 + 1))
            }
            SeriesKind::EtaL(..) => paired(s, self.u, k + 1),
            SeriesKind::OmegaL(..) => self.weight(j)? * paired(s, self.u, k + 1),
        })
    }

    fn sign(&self, j: usize) -> f64 {
        if self.kind.weighted() && j % 2 == 1 {
            -1.0
        } else {
            1.0
        }
    }
}

/// Leading McMahon position of s_x (zeros of J_{α+1}).
fn mcmahon_leading(alpha: f64, x: f64) -> f64 {
    PI * (x + (alpha + 1.0) / 2.0 - 0.25)
}

/// Tail model t_j ≈ sign_j s_j^{−p} (c_0 + c_1 v + c_2 v²), v = s_ref/s_j.
struct TailModel {
    p: f64,
    s_ref: f64,
    c: [Complex64; 3],
    alternating: bool,
    alpha: f64,
}

impl TailModel {
    fn fit(terms: &Terms, samples: &[(usize, Complex64)]) -> Result<TailModel> {
        let p = terms.kind.decay(terms.alpha);
        let s_ref = samples.iter().map(|&(j, _)| terms.table.zeros[j - 1]).fold(0.0, f64::max);
        let mut ata = Matrix3::<f64>::zeros();
        let mut atb_re = Vector3::<f64>::zeros();
        let mut atb_im = Vector3::<f64>::zeros();
        for &(j, t) in samples {
            let s = terms.table.zeros[j - 1];
            let v = s_ref / s;
            let row = Vector3::new(1.0, v, v * v);
            let g = t * terms.sign(j) * s.powf(p);
            ata += row * row.transpose();
            atb_re += row * g.re;
            atb_im += row * g.im;
        }
        let lu = ata.lu();
        let (Some(re), Some(im)) = (lu.solve(&atb_re), lu.solve(&atb_im)) else {
            return Err(Error::PreconditionViolated("singular tail fit".into()));
        };
        let c = [0, 1, 2].map(|i| Complex64::new(re[i], im[i]));
        Ok(TailModel { p, s_ref, c, alternating: terms.kind.weighted(), alpha: terms.alpha })
    }

    fn at(&self, j: usize) -> Complex64 {
        let s = mcmahon_leading(self.alpha, j as f64);
        let v = self.s_ref / s;
        let sign = if self.alternating && j % 2 == 1 { -1.0 } else { 1.0 };
        sign * s.powf(-self.p) * (self.c[0] + self.c[1] * v + self.c[2] * v * v)
    }

    /// Σ_{j>n} of the model, n ≥ 1.
    fn tail_after(&self, n: usize) -> Complex64 {
        let delta = (self.alpha + 1.0) / 2.0 - 0.25;
        // r-th derivative of x ↦ (π(x+δ))^{−q} at x
        let deriv = |q: f64, r: usize, x: f64| -> f64 {
            let mut f = (PI * (x + delta)).powf(-q);
            for i in 0..r {
                f *= -(q + i as f64) * PI / (PI * (x + delta));
            }
            f
        };
        let mut total = Complex64::new(0.0, 0.0);
        for (i, &c) in self.c.iter().enumerate() {
            let q = self.p + i as f64;
            let scale = c * self.s_ref.powi(i as i32);
            let piece = if self.alternating {
                // Boole: Σ_{m≥0} (−1)^m f(a+m) = f/2 − f′/4 + f‴/48 − f⁽⁵⁾/480 + 17f⁽⁷⁾/80640
                let a = (n + 1) as f64;
                let b = deriv(q, 0, a) / 2.0 - deriv(q, 1, a) / 4.0 + deriv(q, 3, a) / 48.0 - deriv(q, 5, a) / 480.0
                    + 17.0 * deriv(q, 7, a) / 80640.0;
                if (n + 1) % 2 == 1 {
                    -b
                } else {
                    b
                }
            } else {
                // Euler–Maclaurin from x = n, endpoint excluded
                let x = n as f64;
                let integral = (PI * (x + delta)).powf(1.0 - q) / (PI * (q - 1.0));
                integral - deriv(q, 0, x) / 2.0 - deriv(q, 1, x) / 12.0 + deriv(q, 3, x) / 720.0
                    - deriv(q, 5, x) / 30240.0
            };
            total += scale * piece;
        }
        total
    }
}

/// `count` distinct indices spread over [lo, hi], skipping `skip`.
fn sample_indices(lo: usize, hi: usize, count: usize, skip: Option<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(count);
    let push = |j: usize, out: &mut Vec<usize>| {
        if Some(j) != skip && !out.contains(&j) {
            out.push(j);
        }
    };
    for i in 0..count {
        let j = lo + ((hi - lo) as f64 * i as f64 / (count - 1) as f64).round() as usize;
        push(j, &mut out);
    }
    let mut extra = hi;
    while out.len() < count && extra > lo {
        extra -= 1;
        push(extra, &mut out);
    }
    out.sort_unstable();
    out
}

/// Partial sum over |j| ≤ N (paired, ascending, compensated) and the tail estimate.
pub fn truncated_sum(kind: SeriesKind, alpha: f64, table: &ZeroTable, n: usize, with_tail: bool) -> Result<(Complex64, Complex64)> {
    truncated_sum_with(kind, alpha, table, n, with_tail, Execution::default())
}

pub fn truncated_sum_with(
    kind: SeriesKind,
    alpha: f64,
    table: &ZeroTable,
    n: usize,
    with_tail: bool,
    exec: Execution,
) -> Result<(Complex64, Complex64)> {
    let terms = Terms::new(kind, alpha, table)?;
    table.require(if with_tail { n.max(FIT_SPAN) } else { n })?;
    if let SeriesKind::EtaU(_, u) | SeriesKind::OmegaU(_, u) = kind {
        if u.im == 0.0 && table.zeros.iter().take(n.max(1)).any(|&s| (s - u.re.abs()).abs() <= 1e-12 * s) {
            return Err(Error::PoleInput(format!("u = {u} is a zero s_j")));
        }
    }
    let values = exec.try_map_range(1..n + 1, |j| terms.term(j))?;
    let mut acc = CompensatedSum::new();
    for &v in &values {
        acc.add(v);
    }
    let partial = acc.value();
    if !with_tail {
        return Ok((partial, Complex64::new(0.0, 0.0)));
    }
    let (lo, hi) = if n >= FIT_SPAN { (n / 2, n) } else { (FIT_SPAN / 2 + 1, FIT_SPAN) };
    let samples = sample_indices(lo, hi, FIT_POINTS, kind.excluded())
        .into_iter()
        .map(|j| Ok((j, if j <= n { values[j - 1] } else { terms.term(j)? })))
        .collect::<Result<Vec<_>>>()?;
    let model = TailModel::fit(&terms, &samples)?;
    let start = n.max(FIT_SPAN);
    let mut tail = model.tail_after(start);
    for j in n + 1..=start {
        tail += model.at(j);
    }
    Ok((partial, tail))
}

/// (−1)^{k+1} 𝔅_{2k}(x) / (2^{2k} k! (α+2)_{k−1}).
fn rayleigh_closed<S: Scalar>(alpha: &S, k: usize, at: Endpoint) -> Result<S> {
    if k == 0 {
        return Err(Error::PreconditionViolated("k >= 1 required".into()));
    }
    let fam = bernoulli_family(alpha, 2 * k)?;
    let b = fam.value(2 * k, at)?;
    let mut denom = S::from_i64(1i64 << (2 * k)) * pochhammer(&(alpha.clone() + S::from_i64(2)), k - 1);
    for i in 2..=k {
        denom = denom * S::from_i64(i as i64);
    }
    let v = b / denom;
    Ok(if k % 2 == 1 { v } else { -v })
}

/// σ_k in closed form; exact over the rationals.
pub fn sigma_closed<S: Scalar>(alpha: &S, k: usize) -> Result<S> {
    rayleigh_closed(alpha, k, Endpoint::One)
}

/// ρ_k in closed form, gated by Re α ≤ 2k − 3/2.
pub fn rho_closed<S: Scalar>(alpha: &S, k: usize) -> Result<S> {
    let re = alpha.to_c64().re;
    if k >= 1 && re > 2.0 * k as f64 - 1.5 {
        return Err(Error::PreconditionViolated(format!("Re alpha <= 2k - 3/2 fails (alpha = {re}, k = {k})")));
    }
    rayleigh_closed(alpha, k, Endpoint::Zero)
}

fn ipow(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// η_{k,u} = 2(1+α)((−1)^k/u^{k+1} − i^{k+1} 𝔞_{k,α,iu}).
pub fn eta_u_closed(alpha: f64, k: usize, u: Complex64) -> Result<Complex64> {
    SeriesKind::EtaU(k, u).check(alpha)?;
    let a = calogero_numbers(alpha, Complex64::new(0.0, 1.0) * u, k)?;
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    Ok(2.0 * (1.0 + alpha) * (sign / u.powi(k as i32 + 1) - ipow(k as i64 + 1) * a.values[k]))
}

/// ω_{k,u} = 2(1+α)((−1)^k/u^{k+1} − i^k 𝔈_{k,α,iu}(0)/(u 𝓘_{α+1}(iu) γ_k)).
pub fn omega_u_closed(alpha: f64, k: usize, u: Complex64) -> Result<Complex64> {
    SeriesKind::OmegaU(k, u).check(alpha)?;
    let iu = Complex64::new(0.0, 1.0) * u;
    let fam = aed_family(alpha, iu, k)?;
    let gamma_k = gamma_closed(&alpha, k);
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let e0 = fam.polys[k].coeff(0);
    Ok(2.0 * (1.0 + alpha) * (sign / u.powi(k as i32 + 1) - ipow(k as i64) * e0 / (u * cal_i(alpha + 1.0, iu)? * gamma_k)))
}

/// η_0^{l}..η_K^{l} (`weight` = None) or ω_0^{l}..ω_K^{l} (`weight` = Some(𝓘_α(is_l))),
/// from the recurrence divided through by 𝓘_α(is_l): there 𝓘_α^{(m)}(is_l)
/// reduces to P_m(is_l) with P_1 = 0, P_2 = 1, so level k+1 fixes the k-th value.
fn lattice_values(alpha: f64, s_l: f64, kmax: usize, weight: Option<f64>) -> Result<Vec<Complex64>> {
    let z = Complex64::new(0.0, s_l);
    let ladder = deriv_poly_ladder(&alpha, kmax + 3)?;
    let p: Vec<Complex64> = ladder.iter().map(|(p, _)| p.eval(z)).collect();
    let c = 2.0 * (1.0 + alpha);
    let base = |j: usize| (if j % 2 == 0 { c } else { -c }) / s_l.powi(j as i32 + 1);
    let mut d: Vec<Complex64> = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let level = k + 1;
        let rhs = match weight {
            None => p[level + 2] / factorial(level + 1) - p[level] / factorial(level),
            Some(w) => p[level + 2] / (factorial(level + 1) * w),
        };
        let mut known = Complex64::new(0.0, 0.0);
        for (j, dj) in d.iter().enumerate() {
            known += p[level - j + 1] / (ipow(j as i64 + 1) * factorial(level - j)) * dj;
        }
        let pivot = p[2] / ipow(k as i64 + 1);
        if pivot.norm() < 1e-300 {
            return Err(Error::PreconditionViolated(format!("recurrence not solvable at level {level}")));
        }
        d.push((rhs - known) / pivot);
    }
    Ok(d.iter().enumerate().map(|(j, &dj)| dj + base(j)).collect())
}

pub fn eta_l_closed_all(alpha: f64, table: &ZeroTable, l: usize, kmax: usize) -> Result<Vec<Complex64>> {
    SeriesKind::EtaL(kmax, l).check(alpha)?;
    lattice_values(alpha, table.signed(l as i64)?, kmax, None)
}

pub fn omega_l_closed_all(alpha: f64, table: &ZeroTable, l: usize, kmax: usize) -> Result<Vec<Complex64>> {
    for k in 0..=kmax {
        SeriesKind::OmegaL(k, l).check(alpha)?;
    }
    let w = cal_i_at_izero(alpha, table, l)?;
    lattice_values(alpha, table.signed(l as i64)?, kmax, Some(w))
}

/// Closed form of any kind; `table` (an s-table) is needed for the l-indexed kinds.
pub fn closed_form(kind: SeriesKind, alpha: f64, table: Option<&ZeroTable>) -> Result<Complex64> {
    kind.check(alpha)?;
    let need_table = || table.ok_or_else(|| Error::PreconditionViolated("zero table required".into()));
    match kind {
        SeriesKind::Sigma(k) => Ok(sigma_closed(&alpha, k)?.into()),
        SeriesKind::Rho(k) => Ok(rho_closed(&alpha, k)?.into()),
        SeriesKind::EtaU(k, u) => eta_u_closed(alpha, k, u),
        SeriesKind::OmegaU(k, u) => omega_u_closed(alpha, k, u),
        SeriesKind::EtaL(k, l) => Ok(eta_l_closed_all(alpha, need_table()?, l, k)?[k]),
        SeriesKind::OmegaL(k, l) => Ok(omega_l_closed_all(alpha, need_table()?, l, k)?[k]),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub alpha: f64,
    pub n: usize,
    pub partial_sum: Complex64,
    pub tail_correction: Complex64,
    pub corrected: Complex64,
    pub closed_form: Complex64,
    pub abs_err: f64,
    pub rel_err: f64,
}

pub const TSV_HEADER: &str = "kind\tk\talpha\tu_or_l\tN\tpartial\ttail\tcorrected\tclosed\tabs_err\trel_err";

impl SeriesReport {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.tag(),
            "k": self.kind.k(),
            "alpha": format::num(self.alpha),
            "u_or_l": self.kind.u_or_l(),
            "N": self.n,
            "partial": format::complex(self.partial_sum),
            "tail": format::complex(self.tail_correction),
            "corrected": format::complex(self.corrected),
            "closed": format::complex(self.closed_form),
            "abs_err": format::num(self.abs_err),
            "rel_err": format::num(self.rel_err),
        })
    }

    pub fn to_tsv_row(&self) -> String {
        [
            self.kind.tag().to_string(),
            self.kind.k().to_string(),
            format::sig17(self.alpha),
            self.kind.u_or_l(),
            self.n.to_string(),
            format::complex_tsv(self.partial_sum),
            format::complex_tsv(self.tail_correction),
            format::complex_tsv(self.corrected),
            format::complex_tsv(self.closed_form),
            format::sig17(self.abs_err),
            format::sig17(self.rel_err),
        ]
        .join("\t")
    }
}

pub fn series_report(kind: SeriesKind, alpha: f64, table: &ZeroTable, n: usize, with_tail: bool) -> Result<SeriesReport> {
    series_report_with(kind, alpha, table, n, with_tail, Execution::default())
}

pub fn series_report_with(
    kind: SeriesKind,
    alpha: f64,
    table: &ZeroTable,
    n: usize,
    with_tail: bool,
    exec: Execution,
) -> Result<SeriesReport> {
    let (partial_sum, tail_correction) = truncated_sum_with(kind, alpha, table, n, with_tail, exec)?;
    let closed = closed_form(kind, alpha, Some(table))?;
    let corrected = partial_sum + tail_correction;
    let abs_err = (corrected - closed).norm();
    Ok(SeriesReport {
        kind,
        alpha,
        n,
        partial_sum,
        tail_correction,
        corrected,
        closed_form: closed,
        abs_err,
        rel_err: abs_err / closed.norm().max(1e-300),
    })
}

/// Σ_{j≥1} (−1)^j/(2j−1)^{2k+1} recovered from ω_{2k,π/2} at α = −1/2:
/// the paired sum equals (2/π)^{2k+1}(2S + 1).
pub fn euler_alternating_from_omega(omega: Complex64, k: usize) -> f64 {
    ((PI / 2.0).powi(2 * k as i32 + 1) * omega.re - 1.0) / 2.0
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorollaryEntry {
    pub n: usize,
    pub sigma_residual: f64,
    /// `None` when ρ_1 is outside its convergence gate.
    pub rho_residual: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorollaryReport {
    pub alpha: Complex64,
    pub entries: Vec<CorollaryEntry>,
}

impl CorollaryReport {
    pub fn max_residual(&self) -> f64 {
        self.entries
            .iter()
            .flat_map(|e| [Some(e.sigma_residual), e.rho_residual])
            .flatten()
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": "rayleigh_recurrences",
            "alpha": format::complex(self.alpha),
            "entries": self.entries.iter().map(|e| json!({
                "n": e.n,
                "sigma_residual": format::num(e.sigma_residual),
                "rho_residual": e.rho_residual.map(format::num),
            })).collect::<Vec<_>>(),
        })
    }
}

/// n = Σ_j (−1)^{j+1}4^j(n−j+1)_j(α+n−j+2)_j σ_j and −α−1 = the same with ρ_j,
/// checked with closed-form σ_j, ρ_j for n = 1..=n_max.
pub fn corollary_recurrences<S: Scalar>(alpha: &S, n_max: usize) -> Result<CorollaryReport> {
    let sigma: Vec<S> = (1..=n_max).map(|j| sigma_closed(alpha, j)).collect::<Result<_>>()?;
    let rho: Option<Vec<S>> = (1..=n_max).map(|j| rho_closed(alpha, j)).collect::<Result<Vec<_>>>().ok();
    let mut entries = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let weight = |j: usize| -> S {
            let w = S::from_i64(4i64.pow(j as u32))
                * pochhammer(&S::from_i64((n - j + 1) as i64), j)
                * pochhammer(&(alpha.clone() + S::from_i64((n - j + 2) as i64)), j);
            if j % 2 == 1 {
                w
            } else {
                -w
            }
        };
        let mut s_sum = S::zero();
        for j in 1..=n {
            s_sum = s_sum + weight(j) * sigma[j - 1].clone();
        }
        let sigma_residual = (S::from_i64(n as i64) - s_sum).magnitude();
        let rho_residual = rho.as_ref().map(|rho| {
            let mut r_sum = S::zero();
            for j in 1..=n {
                r_sum = r_sum + weight(j) * rho[j - 1].clone();
            }
            (-(alpha.clone()) - S::one() - r_sum).magnitude()
        });
        entries.push(CorollaryEntry { n, sigma_residual, rho_residual });
    }
    Ok(CorollaryReport { alpha: alpha.to_c64(), entries })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Pfd {
    /// 𝓘_α(it)/(t𝓘_{α+1}(it)) = 1/t + (1/(2(α+1))) Σ_{j≠0} 1/(t − s_j)
    Reciprocal,
    /// m-th derivative of 1/(t𝓘_{α+1}(it)); needs Re α − m + 1/2 < 0
    Derivative(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct PfdReport {
    pub which: Pfd,
    pub alpha: f64,
    pub t: Complex64,
    pub n: usize,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_err: f64,
    pub rel_err: f64,
}

impl PfdReport {
    pub fn to_json(&self) -> Value {
        let (name, m) = match self.which {
            Pfd::Reciprocal => ("pfd1", None),
            Pfd::Derivative(m) => ("pfd2", Some(m)),
        };
        json!({
            "check": name,
            "m": m,
            "alpha": format::num(self.alpha),
            "t": format::complex(self.t),
            "N": self.n,
            "lhs": format::complex(self.lhs),
            "rhs": format::complex(self.rhs),
            "abs_err": format::num(self.abs_err),
            "rel_err": format::num(self.rel_err),
        })
    }
}

/// m-th derivative of 1/(t 𝓘_{α+1}(it)) by the quotient rule.
pub fn reciprocal_derivative(alpha: f64, t: Complex64, m: usize) -> Result<Complex64> {
    let it = Complex64::new(0.0, 1.0) * t;
    let d = cal_i_derivs(alpha + 1.0, m, it)?;
    // h(t) = t 𝓘_{α+1}(it): h^{(r)} = t i^r 𝓘^{(r)}(it) + r i^{r−1} 𝓘^{(r−1)}(it)
    let h: Vec<Complex64> = (0..=m)
        .map(|r| {
            let mut v = t * ipow(r as i64) * d[r];
            if r > 0 {
                v += r as f64 * ipow(r as i64 - 1) * d[r - 1];
            }
            v
        })
        .collect();
    let mut q: Vec<Complex64> = vec![1.0 / h[0]];
    let mut binom = vec![1.0f64];
    for n in 1..=m {
        let mut next = vec![1.0f64; n + 1];
        for r in 1..n {
            next[r] = binom[r - 1] + binom[r];
        }
        binom = next;
        let s: Complex64 = (1..=n).map(|r| binom[r] * h[r] * q[n - r]).sum();
        q.push(-s / h[0]);
    }
    Ok(q[m])
}

pub fn partial_fraction_check(
    which: Pfd,
    alpha: f64,
    t: Complex64,
    table: &ZeroTable,
    n: usize,
    with_tail: bool,
) -> Result<PfdReport> {
    if t.norm() == 0.0 {
        return Err(Error::PoleInput("t = 0".into()));
    }
    let it = Complex64::new(0.0, 1.0) * t;
    let i0 = cal_i(alpha, it)?;
    let i1 = cal_i(alpha + 1.0, it)?;
    if i1.norm() < 1e-12 * i0.norm().max(f64::MIN_POSITIVE) {
        return Err(Error::PoleInput(format!("t = {t} is a zero s_j")));
    }
    let c = 2.0 * (alpha + 1.0);
    let (lhs, rhs) = match which {
        Pfd::Reciprocal => {
            let (p, tail) = truncated_sum(SeriesKind::EtaU(0, t), alpha, table, n, with_tail)?;
            (i0 / (t * i1), 1.0 / t - (p + tail) / c)
        }
        Pfd::Derivative(m) => {
            if !(alpha - m as f64 + 0.5 < 0.0) {
                return Err(Error::PreconditionViolated(format!("Re alpha - m + 1/2 < 0 fails (alpha = {alpha}, m = {m})")));
            }
            let (p, tail) = truncated_sum(SeriesKind::OmegaU(m, t), alpha, table, n, with_tail)?;
            let mf = factorial(m);
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            (reciprocal_derivative(alpha, t, m)?, sign * mf / t.powi(m as i32 + 1) - mf * (p + tail) / c)
        }
    };
    let abs_err = (lhs - rhs).norm();
    Ok(PfdReport { which, alpha, t, n, lhs, rhs, abs_err, rel_err: abs_err / lhs.norm().max(1e-300) })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RecurrencePoint {
    U(Complex64),
    L(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct MamReport {
    pub alpha: f64,
    pub point: RecurrencePoint,
    /// Relative residual of the η recurrence at k = 0..=K.
    pub eta_residuals: Vec<f64>,
    /// Relative residual of the ω recurrence; `None` where it does not apply
    /// (k = 0) or ω is outside its convergence gate.
    pub omega_residuals: Vec<Option<f64>>,
}

impl MamReport {
    pub fn max_residual(&self) -> f64 {
        self.eta_residuals
            .iter()
            .copied()
            .chain(self.omega_residuals.iter().flatten().copied())
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Value {
        let point = match self.point {
            RecurrencePoint::U(u) => json!({ "u": format::complex(u) }),
            RecurrencePoint::L(l) => json!({ "l": l }),
        };
        json!({
            "check": "eta_omega_recurrences",
            "alpha": format::num(self.alpha),
            "point": point,
            "eta_residuals": self.eta_residuals.iter().map(|&r| format::num(r)).collect::<Vec<_>>(),
            "omega_residuals": self.omega_residuals.iter().map(|r| r.map(format::num)).collect::<Vec<_>>(),
        })
    }
}

/// Σ_{j≤k} d_{k−j+1}/(i^{j+e}(k−j)!)(v_j − (−1)^j 2(1+α)/w^{j+1}) − rhs, relative to its largest piece.
/// `rhs_scale` bounds the size of the right-hand side pieces.
#[allow(clippy::too_many_arguments)]
fn recurrence_residual(
    alpha: f64,
    d: &[Complex64],
    values: &[Complex64],
    w: Complex64,
    k: usize,
    e: i64,
    rhs: Complex64,
    rhs_scale: f64,
) -> f64 {
    let c = 2.0 * (1.0 + alpha);
    let mut acc = CompensatedSum::new();
    let mut scale = rhs.norm().max(rhs_scale);
    for j in 0..=k {
        let base = if j % 2 == 0 { c } else { -c } / w.powi(j as i32 + 1);
        let term = d[k - j + 1] / (ipow(j as i64 + e) * factorial(k - j)) * (values[j] - base);
        scale = scale.max(term.norm());
        acc.add(term);
    }
    (acc.value() - rhs).norm() / scale.max(1e-300)
}

/// Residuals of the η/ω recurrences with closed-form values and directly
/// evaluated derivatives 𝓘_α^{(m)} at iu (or is_l).
pub fn mam_recurrence_check(alpha: f64, point: RecurrencePoint, table: &ZeroTable, kmax: usize) -> Result<MamReport> {
    let mut eta_residuals = Vec::with_capacity(kmax + 1);
    let mut omega_residuals = Vec::with_capacity(kmax + 1);
    match point {
        RecurrencePoint::U(u) => {
            let iu = Complex64::new(0.0, 1.0) * u;
            let d = cal_i_derivs(alpha, kmax + 1, iu)?;
            let eta: Vec<Complex64> = (0..=kmax).map(|k| eta_u_closed(alpha, k, u)).collect::<Result<_>>()?;
            let omega: Vec<Option<Complex64>> = (0..=kmax).map(|k| omega_u_closed(alpha, k, u).ok()).collect();
            for k in 0..=kmax {
                let rhs = -d[k] / factorial(k);
                eta_residuals.push(recurrence_residual(alpha, &d, &eta, u, k, 1, rhs, rhs.norm()));
                let vals: Option<Vec<Complex64>> = omega[..=k].iter().copied().collect();
                omega_residuals.push(match vals {
                    Some(v) if k >= 1 => Some(recurrence_residual(alpha, &d, &v, u, k, 0, Complex64::new(0.0, 0.0), 0.0)),
                    _ => None,
                });
            }
        }
        RecurrencePoint::L(l) => {
            let s = table.signed(l as i64)?;
            let z = Complex64::new(0.0, s);
            let d = cal_i_derivs(alpha, kmax + 2, z)?;
            let w = Complex64::new(s, 0.0);
            let eta = eta_l_closed_all(alpha, table, l, kmax)?;
            let omega = omega_l_closed_all(alpha, table, l, kmax).ok();
            for k in 0..=kmax {
                let (a, b) = (d[k + 2] / factorial(k + 1), d[k] / factorial(k));
                eta_residuals.push(recurrence_residual(alpha, &d, &eta, w, k, 1, a - b, a.norm().max(b.norm())));
                // like its generic-u parent, the ω recurrence starts at k = 1
                omega_residuals.push(omega.as_ref().filter(|_| k >= 1).map(|om| {
                    let rhs = d[k + 2] / (factorial(k + 1) * d[0]);
                    recurrence_residual(alpha, &d, om, w, k, 1, rhs, rhs.norm())
                }));
            }
        }
    }
    Ok(MamReport { alpha, point, eta_residuals, omega_residuals })
}
