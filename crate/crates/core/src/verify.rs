//! The verification suites: eleven numbered criteria, each a list of named
//! checks. Shared by the acceptance test and the `verify` subcommand.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use num::complex::Complex64;
use num::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::alpha::DunklParam;
use crate::apostol_euler::{apostol_reduction_check, bernoulli_limit_check, classical_euler, euler_reduction_check};
use crate::bernoulli::{bernoulli_family, classical_reduction_check, Endpoint};
use crate::bessel::deriv::cal_i_derivs;
use crate::bessel::laurent::deriv_poly_ladder;
use crate::bessel::zeros::{cal_i_at_izero, zeros_j, zeros_s, ZeroTable};
use crate::error::{Error, Result};
use crate::format;
use crate::fourier::{bcv_check, hurwitz_check, FourierDunklSystem};
use crate::numerics::scalar::Scalar;
use crate::series::{
    corollary_recurrences, euler_alternating_from_omega, eta_u_closed, mam_recurrence_check, omega_u_closed,
    partial_fraction_check, rho_closed, series_report, sigma_closed, Pfd, RecurrencePoint, SeriesKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    /// Rational-arithmetic identities.
    Exact,
    /// Zeros, series and recurrences.
    Series,
    Fourier,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::Exact, Suite::Series, Suite::Fourier];

    pub fn tag(self) -> &'static str {
        match self {
            Suite::Exact => "exact",
            Suite::Series => "series",
            Suite::Fourier => "fourier",
        }
    }

    pub fn criteria(self) -> &'static [u8] {
        match self {
            Suite::Exact => &[1, 2],
            Suite::Series => &[3, 4, 5, 6, 7, 8, 9, 11],
            Suite::Fourier => &[10],
        }
    }

    pub fn of(id: u8) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.criteria().contains(&id))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.tag() == s).ok_or_else(|| Error::Parse(s.into()))
    }
}

/// Acceptance rule for a measured value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Bound {
    Exact,
    Below(f64),
    Within(f64, f64),
}

impl Bound {
    fn to_json(self) -> Value {
        match self {
            Bound::Exact => json!("exact"),
            Bound::Below(t) => json!({ "below": format::num(t) }),
            Bound::Within(lo, hi) => json!({ "within": [format::num(lo), format::num(hi)] }),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    /// What `value` measures: `rel_err`, `abs_err`, `residual`, `ratio`, ...
    pub metric: &'static str,
    pub value: Option<f64>,
    pub bound: Bound,
    pub pass: bool,
    /// Reported but not part of the verdict.
    pub informational: bool,
    pub detail: Option<String>,
}

impl Check {
    pub fn exact(name: impl Into<String>, holds: bool) -> Self {
        Check {
            name: name.into(),
            metric: "equality",
            value: None,
            bound: Bound::Exact,
            pass: holds,
            informational: false,
            detail: None,
        }
    }

    pub fn below(name: impl Into<String>, metric: &'static str, value: f64, tol: f64) -> Self {
        Check {
            name: name.into(),
            metric,
            value: Some(value),
            bound: Bound::Below(tol),
            pass: value < tol,
            informational: false,
            detail: None,
        }
    }

    pub fn within(name: impl Into<String>, metric: &'static str, value: f64, lo: f64, hi: f64) -> Self {
        Check {
            name: name.into(),
            metric,
            value: Some(value),
            bound: Bound::Within(lo, hi),
            pass: (lo..=hi).contains(&value),
            informational: false,
            detail: None,
        }
    }

    pub fn failed(name: impl Into<String>, err: &Error) -> Self {
        Check {
            name: name.into(),
            metric: "error",
            value: None,
            bound: Bound::Exact,
            pass: false,
            informational: false,
            detail: Some(err.to_string()),
        }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "name": self.name,
            "pass": self.pass,
            "informational": self.informational,
            "metric": self.metric,
            "tolerance": self.bound.to_json(),
        });
        if let Some(x) = self.value {
            v[self.metric] = format::num(x);
        }
        if let Some(d) = &self.detail {
            v["detail"] = json!(d);
        }
        v
    }
}

/// Runs a fallible check; an error becomes a failing entry carrying its message.
fn attempt(name: impl Into<String>, f: impl FnOnce(String) -> Result<Check>) -> Check {
    let name = name.into();
    f(name.clone()).unwrap_or_else(|e| Check::failed(name, &e))
}

#[derive(Clone, Debug, PartialEq)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl CriterionResult {
    pub fn pass(&self) -> bool {
        self.checks.iter().filter(|c| !c.informational).all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.informational && !c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.failures().next()
    }

    pub fn summary_line(&self) -> String {
        let counted: Vec<&Check> = self.checks.iter().filter(|c| !c.informational).collect();
        let passed = counted.iter().filter(|c| c.pass).count();
        let mut line = format!(
            "criterion {:>2} [{:<7}] {}  {} ({}/{} checks)",
            self.id,
            self.suite.tag(),
            if self.pass() { "PASS" } else { "FAIL" },
            self.title,
            passed,
            counted.len()
        );
        if let Some(c) = self.first_failure() {
            line.push_str(&format!("; first failure: {}", c.name));
        }
        line
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "title": self.title,
            "suite": self.suite.tag(),
            "pass": self.pass(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    /// Orders used by the zero-table, Rayleigh-sum, corollary and Fourier criteria.
    pub alpha_grid: Vec<DunklParam>,
    /// Truncation N of every series (and J of the Parseval check).
    pub terms: usize,
    pub quad_order: usize,
    /// Seed of the random BCV evaluation points.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            alpha_grid: vec![
                DunklParam::rational(-1, 2),
                DunklParam::rational(0, 1),
                DunklParam::rational(1, 2),
                DunklParam::rational(2, 1),
            ],
            terms: 10_000,
            quad_order: 96,
            seed: 20_240_101,
        }
    }
}

impl VerifyConfig {
    pub fn to_json(&self) -> Value {
        json!({
            "alpha_grid": self.alpha_grid.iter().map(|a| json!({
                "value": a.to_string(),
                "arithmetic": a.arithmetic(),
            })).collect::<Vec<_>>(),
            "terms": self.terms,
            "quad_order": self.quad_order,
            "seed": self.seed,
        })
    }
}

pub const TITLES: [&str; 11] = [
    "exact polynomial suite",
    "classical reductions",
    "zero tables",
    "Rayleigh-type sums",
    "alternating-type sums",
    "Euler classics",
    "Calogero suite",
    "recurrence cross-checks",
    "partial fractions",
    "Fourier-Dunkl",
    "AED limit",
];

/// Holds zero tables shared between criteria.
pub struct Verifier {
    cfg: VerifyConfig,
    tables: RefCell<BTreeMap<u64, Rc<ZeroTable>>>,
}

impl Verifier {
    pub fn new(cfg: VerifyConfig) -> Self {
        Verifier { cfg, tables: RefCell::new(BTreeMap::new()) }
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.cfg
    }

    fn table_len(&self) -> usize {
        self.cfg.terms.max(20)
    }

    fn s_table(&self, alpha: f64) -> Result<Rc<ZeroTable>> {
        if let Some(t) = self.tables.borrow().get(&alpha.to_bits()) {
            return Ok(t.clone());
        }
        let t = Rc::new(zeros_s(alpha, self.table_len())?);
        self.tables.borrow_mut().insert(alpha.to_bits(), t.clone());
        Ok(t)
    }

    pub fn run_suites(&self, suites: &[Suite]) -> Vec<CriterionResult> {
        let mut ids: Vec<u8> = suites.iter().flat_map(|s| s.criteria().iter().copied()).collect();
        ids.sort_unstable();
        ids.dedup();
        ids.into_iter().map(|id| self.criterion(id)).collect()
    }

    pub fn run_all(&self) -> Vec<CriterionResult> {
        self.run_suites(&Suite::ALL)
    }

    /// Runs criterion `id` (1..=11).
    ///
    /// # Panics
    /// For an id outside 1..=11.
    pub fn criterion(&self, id: u8) -> CriterionResult {
        let checks = match id {
            1 => self.exact_polynomials(),
            2 => self.classical_reductions(),
            3 => self.zero_tables(),
            4 => self.rayleigh_sums(),
            5 => self.alternating_sums(),
            6 => self.euler_classics(),
            7 => self.calogero_suite(),
            8 => self.recurrences(),
            9 => self.partial_fractions(),
            10 => self.fourier_dunkl(),
            11 => self.aed_limit(),
            _ => panic!("no criterion {id}"),
        };
        CriterionResult { id, title: TITLES[id as usize - 1], suite: Suite::of(id).expect("known id"), checks }
    }

    fn exact_polynomials(&self) -> Vec<Check> {
        let mut out = Vec::new();
        for &(p, q) in &[(0i64, 1i64), (1, 2), (-1, 4), (3, 1)] {
            let a = BigRational::new(p.into(), q.into());
            let tag = DunklParam::Rational(a.clone()).to_string();
            match bernoulli_family(&a, 20) {
                Ok(fam) => {
                    out.push(Check::exact(format!("appell alpha={tag}"), fam.appell_property_holds()));
                    out.push(Check::exact(format!("parity alpha={tag}"), fam.parity_holds()));
                    let odd_at_one = (1..=9).all(|n| fam.value(2 * n + 1, Endpoint::One).is_ok_and(|v| v.is_zero()));
                    out.push(Check::exact(format!("odd_vanish_at_one alpha={tag}"), odd_at_one));
                    out.push(Check::exact(
                        format!("split_reconstruction alpha={tag}"),
                        fam.split_recurrence_check().iter().all(|&b| b),
                    ));
                    out.push(
                        Check::exact(
                            format!("split_reconstruction_printed_denominator alpha={tag}"),
                            fam.split_recurrence_check_printed().iter().all(|&b| b),
                        )
                        .informational(),
                    );
                }
                Err(e) => out.push(Check::failed(format!("family alpha={tag}"), &e)),
            }
            out.push(attempt(format!("translation alpha={tag}"), |name| {
                let fam = bernoulli_family(&a, 12)?;
                Ok(Check::exact(name, fam.translation_holds().iter().all(|&b| b)))
            }));
        }
        out
    }

    fn classical_reductions(&self) -> Vec<Check> {
        let mut out = vec![
            attempt("bernoulli_to_classical n<=16", |name| {
                Ok(Check::exact(name, classical_reduction_check(16)?.pass()))
            }),
            attempt("euler_to_classical n<=10", |name| {
                let r = euler_reduction_check(10, 1e-10)?;
                Ok(Check::below(name, "abs_err", r.max_abs_err(), 1e-10))
            }),
        ];
        for lambda in [0.5, 3.0] {
            out.push(attempt(format!("apostol_reduction lambda={lambda}"), |name| {
                let r = apostol_reduction_check(lambda, 6, 1e-10)?;
                Ok(Check::below(name, "abs_err", r.max_abs_err(), 1e-10))
            }));
        }
        out
    }

    fn zero_tables(&self) -> Vec<Check> {
        let mut out = Vec::new();
        for a in &self.cfg.alpha_grid {
            let alpha = a.as_f64();
            out.push(attempt(format!("residuals alpha={a}"), |name| {
                let t = zeros_s(alpha, 100)?;
                let worst = t.residuals.iter().copied().fold(0.0, f64::max);
                Ok(Check::below(name, "residual", worst, 1e-12))
            }));
            if alpha == -0.5 {
                out.push(attempt("multiples_of_pi alpha=-1/2", |name| {
                    let t = zeros_s(alpha, 100)?;
                    let worst = t
                        .zeros
                        .iter()
                        .enumerate()
                        .map(|(i, &z)| (z - (i + 1) as f64 * PI).abs() / ((i + 1) as f64 * PI))
                        .fold(0.0, f64::max);
                    Ok(Check::below(name, "rel_err", worst, 1e-12))
                }));
            }
            out.push(attempt(format!("interlacing alpha={a}"), |name| {
                let s = zeros_s(alpha, 100)?;
                let j = zeros_j(alpha, 101)?;
                let ok = (0..100).all(|l| j.zeros[l] < s.zeros[l] && s.zeros[l] < j.zeros[l + 1]);
                Ok(Check::exact(name, ok))
            }));
        }
        out
    }

    fn rayleigh_sums(&self) -> Vec<Check> {
        let n = self.cfg.terms;
        let mut out = Vec::new();
        for a in &self.cfg.alpha_grid {
            let alpha = a.as_f64();
            for k in 1..=4 {
                out.push(attempt(format!("sigma k={k} alpha={a}"), |name| {
                    let r = series_report(SeriesKind::Sigma(k), alpha, &*self.s_table(alpha)?, n, true)?;
                    Ok(Check::below(name, "rel_err", r.rel_err, 1e-5))
                }));
            }
            out.push(attempt(format!("sigma1_rational alpha={a}"), |name| {
                let q = exact_alpha(a);
                let expect = BigRational::from_i64(1) / (BigRational::from_i64(4) * (q.clone() + BigRational::from_i64(2)));
                Ok(Check::exact(name, sigma_closed(&q, 1)? == expect))
            }));
        }
        out
    }

    fn alternating_sums(&self) -> Vec<Check> {
        let n = self.cfg.terms;
        let mut out = Vec::new();
        for &(p, q) in &[(-1i64, 2i64), (0, 1), (1, 2)] {
            let a = DunklParam::rational(p, q);
            let qa = exact_alpha(&a);
            let alpha = a.as_f64();
            let one = BigRational::from_i64(1);
            let r1 = -(qa.clone() + one.clone()) / (BigRational::from_i64(4) * (qa.clone() + BigRational::from_i64(2)));
            let r2_printed = rho2_expression(&qa, 2);
            let r2_corrected = rho2_expression(&qa, 4);
            out.push(attempt(format!("rho1_closed_exact alpha={a}"), |name| {
                Ok(Check::exact(name, rho_closed(&qa, 1)? == r1))
            }));
            out.push(attempt(format!("rho2_printed_closed_exact alpha={a}"), |name| {
                Ok(Check::exact(name, rho_closed(&qa, 2)? == r2_printed))
            }));
            out.push(
                attempt(format!("rho2_corrected_closed_exact alpha={a}"), |name| {
                    Ok(Check::exact(name, rho_closed(&qa, 2)? == r2_corrected))
                })
                .informational(),
            );
            let targets = [
                ("rho1_truncated", 1, &r1, false),
                ("rho2_printed_truncated", 2, &r2_printed, false),
                ("rho2_corrected_truncated", 2, &r2_corrected, true),
            ];
            for (label, k, target, info) in targets {
                let c = attempt(format!("{label} alpha={a}"), |name| {
                    let r = series_report(SeriesKind::Rho(k), alpha, &*self.s_table(alpha)?, n, true)?;
                    let t = target.to_c64();
                    Ok(Check::below(name, "rel_err", rel_err(r.corrected, t), 1e-4))
                });
                out.push(if info { c.informational() } else { c });
            }
        }
        out
    }

    fn euler_classics(&self) -> Vec<Check> {
        let n = self.cfg.terms;
        let alpha = -0.5;
        let u = Complex64::new(PI / 2.0, 0.0);
        // (−1)^{k+1} π^{2k+1} E_{2k}(1/2) / (4 (2k)!) at k = 0
        let e0_half = classical_euler(0)[0].eval(&BigRational::new(1.into(), 2.into())).to_c64().re;
        let leibniz = -PI * e0_half / 4.0;
        vec![
            attempt("zeta2 alpha=-1/2", |name| {
                let r = series_report(SeriesKind::Sigma(1), alpha, &*self.s_table(alpha)?, n, true)?;
                Ok(Check::below(name, "rel_err", rel_err(r.corrected * PI * PI, Complex64::new(PI * PI / 6.0, 0.0)), 1e-8))
            }),
            attempt("leibniz_closed u=pi/2", |name| {
                let s = euler_alternating_from_omega(omega_u_closed(alpha, 0, u)?, 0);
                Ok(Check::below(name, "abs_err", (s - leibniz).abs(), 1e-10))
            }),
            attempt("leibniz_truncated u=pi/2", |name| {
                let r = series_report(SeriesKind::OmegaU(0, u), alpha, &*self.s_table(alpha)?, n, true)?;
                let s = euler_alternating_from_omega(r.corrected, 0);
                Ok(Check::below(name, "abs_err", (s - leibniz).abs(), 1e-5))
            }),
        ]
    }

    fn calogero_suite(&self) -> Vec<Check> {
        let n = self.cfg.terms;
        let mut out = Vec::new();
        for alpha in [0.0, 0.5] {
            for l in [1usize, 2, 5] {
                let printed = |t: &ZeroTable| -> Result<[f64; 4]> {
                    let s = t.signed(l as i64)?;
                    let w = cal_i_at_izero(alpha, t, l)?;
                    Ok([
                        (3.0 + 2.0 * alpha) / (2.0 * s),
                        -(3.0 + 2.0 * alpha) * (7.0 + 2.0 * alpha) / (12.0 * s * s) + 1.0 / 3.0,
                        2.0 * (1.0 + alpha) / s - (1.0 + 2.0 * alpha) / (2.0 * s * w),
                        -2.0 * (1.0 + alpha) / (s * s) - (1.0 + (1.0 + 2.0 * alpha) * (2.0 * alpha - 3.0) / (2.0 * s * s)) / (6.0 * w),
                    ])
                };
                let kinds = [
                    ("eta0", SeriesKind::EtaL(0, l)),
                    ("eta1", SeriesKind::EtaL(1, l)),
                    ("omega0", SeriesKind::OmegaL(0, l)),
                    ("omega1", SeriesKind::OmegaL(1, l)),
                ];
                for (i, (label, kind)) in kinds.into_iter().enumerate() {
                    out.push(attempt(format!("{label}_l={l} alpha={alpha}"), |name| {
                        let t = self.s_table(alpha)?;
                        let target = printed(&t)?[i];
                        let r = series_report(kind, alpha, &t, n, true)?;
                        Ok(Check::below(name, "rel_err", rel_err(r.corrected, Complex64::new(target, 0.0)), 1e-4))
                    }));
                }
                out.push(attempt(format!("eta_at_j_zero l={l} alpha={alpha}"), |name| {
                    let tj = zeros_j(alpha, l)?;
                    let j = tj.signed(l as i64)?;
                    let printed = [
                        2.0 * (1.0 + alpha) / j,
                        1.0 - 2.0 * (1.0 + alpha) / (j * j),
                        (1.0 + 2.0 * alpha) / (2.0 * j) + 2.0 * (1.0 + alpha) / j.powi(3),
                    ];
                    let mut worst: f64 = 0.0;
                    for (k, &p) in printed.iter().enumerate() {
                        let v = eta_u_closed(alpha, k, Complex64::new(j, 0.0))?;
                        worst = worst.max(rel_err(v, Complex64::new(p, 0.0)));
                    }
                    Ok(Check::below(name, "rel_err", worst, 1e-10))
                }));
            }
        }
        out
    }

    fn recurrences(&self) -> Vec<Check> {
        let mut out = Vec::new();
        for a in &self.cfg.alpha_grid {
            out.push(attempt(format!("corollary n<=4 alpha={a}"), |name| {
                Ok(Check::below(name, "residual", corollary_recurrences(&a.as_f64(), 4)?.max_residual(), 1e-10))
            }));
            if a.is_rational() {
                out.push(attempt(format!("corollary_rational n<=4 alpha={a}"), |name| {
                    Ok(Check::exact(name, corollary_recurrences(&exact_alpha(a), 4)?.max_residual() == 0.0))
                }));
            }
        }
        for alpha in [0.0, 0.5] {
            for l in [1usize, 2, 5] {
                out.push(attempt(format!("lattice_recurrences k<=4 l={l} alpha={alpha}"), |name| {
                    let t = self.s_table(alpha)?;
                    let r = mam_recurrence_check(alpha, RecurrencePoint::L(l), &t, 4)?;
                    Ok(Check::below(name, "residual", r.max_residual(), 1e-9))
                }));
                out.push(attempt(format!("derivatives_at_zero k<=6 l={l} alpha={alpha}"), |name| {
                    let t = self.s_table(alpha)?;
                    Ok(Check::below(name, "rel_err", derivative_ladder_error(alpha, &t, l, 6)?, 1e-10))
                }));
            }
            out.push(
                attempt(format!("generic_recurrences k<=4 u=0.8+0.3i alpha={alpha}"), |name| {
                    let t = self.s_table(alpha)?;
                    let r = mam_recurrence_check(alpha, RecurrencePoint::U(Complex64::new(0.8, 0.3)), &t, 4)?;
                    Ok(Check::below(name, "residual", r.max_residual(), 1e-9))
                })
                .informational(),
            );
        }
        out
    }

    fn partial_fractions(&self) -> Vec<Check> {
        let n = self.cfg.terms;
        let ts = [
            Complex64::new(0.3, 0.2),
            Complex64::new(-0.7, 0.5),
            Complex64::new(1.1, -0.3),
            Complex64::new(2.0, 1.0),
            Complex64::new(-0.4, -1.2),
        ];
        let mut out = Vec::new();
        let cases = [(Pfd::Reciprocal, 0.0), (Pfd::Reciprocal, 0.5), (Pfd::Derivative(1), -0.5)];
        for (which, alpha) in cases {
            let label = match which {
                Pfd::Reciprocal => "reciprocal".to_string(),
                Pfd::Derivative(m) => format!("derivative m={m}"),
            };
            for t in ts {
                out.push(attempt(format!("{label} t={} alpha={alpha}", format::complex_tsv(t)), |name| {
                    let r = partial_fraction_check(which, alpha, t, &*self.s_table(alpha)?, n, true)?;
                    Ok(Check::below(name, "rel_err", r.rel_err, 1e-5))
                }));
            }
        }
        let probe = Complex64::new(0.3, 0.2);
        for (m, alpha) in [(0usize, 0.0), (1, 0.5), (2, 1.6)] {
            out.push(attempt(format!("gate_rejects derivative m={m} alpha={alpha}"), |name| {
                let t = zeros_s(alpha, 20)?;
                let r = partial_fraction_check(Pfd::Derivative(m), alpha, probe, &t, 20, false);
                Ok(Check::exact(name, matches!(r, Err(Error::PreconditionViolated(_)))))
            }));
        }
        out.push(attempt("gate_accepts derivative m=2 alpha=1", |name| {
            let t = zeros_s(1.0, 20)?;
            Ok(Check::exact(name, partial_fraction_check(Pfd::Derivative(2), 1.0, probe, &t, 20, false).is_ok()))
        }));
        let series_gates = [(SeriesKind::Rho(1), 0.6), (SeriesKind::OmegaU(0, Complex64::new(0.5, 0.0)), 1.5)];
        for (kind, alpha) in series_gates {
            out.push(Check::exact(
                format!("gate_rejects {} k={} alpha={alpha}", kind.tag(), kind.k()),
                matches!(kind.check(alpha), Err(Error::PreconditionViolated(_))),
            ));
        }
        out
    }

    fn fourier_dunkl(&self) -> Vec<Check> {
        let order = self.cfg.quad_order;
        let mut rng = StdRng::seed_from_u64(self.cfg.seed);
        let mut out = Vec::new();
        for a in &self.cfg.alpha_grid {
            let alpha = a.as_f64();
            if alpha <= -1.0 {
                out.push(Check::exact(format!("fourier alpha={a}"), true).informational().with_detail("needs alpha > -1"));
                continue;
            }
            let sys = match self.s_table(alpha).and_then(|t| FourierDunklSystem::new(alpha, (*t).clone())) {
                Ok(s) => s,
                Err(e) => {
                    out.push(Check::failed(format!("system alpha={a}"), &e));
                    continue;
                }
            };
            out.push(attempt(format!("gram |j|<=12 alpha={a}"), |name| {
                Ok(Check::below(name, "abs_err", sys.gram_deviation(12, order)?, 1e-9))
            }));
            out.push(attempt(format!("coefficients n<=6 |j|<=12 alpha={a}"), |name| {
                let mut worst: f64 = 0.0;
                for n in 1..=6 {
                    for j in -12i64..=12 {
                        let d = sys.bd_coefficient(n, j)? - sys.bd_coefficient_quadrature(n, j, order)?;
                        worst = worst.max(d.norm());
                    }
                }
                Ok(Check::below(name, "abs_err", worst, 1e-9))
            }));
            for n in 2..=4 {
                out.push(attempt(format!("parseval n={n} alpha={a}"), |name| {
                    let r = sys.parseval_check(n, self.cfg.terms, order, true)?;
                    Ok(Check::below(name, "rel_err", r.rel_err, 1e-8))
                }));
            }
            let points: Vec<(f64, f64)> = (0..10).map(|_| (rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0))).collect();
            out.push(attempt(format!("bcv 10 points alpha={a}"), |name| {
                let mut worst: f64 = 0.0;
                for &(x, y) in &points {
                    let r = bcv_check(alpha, Complex64::new(x, 0.0), Complex64::new(y, 0.0), order)?;
                    worst = worst.max(r.rel_err);
                }
                Ok(Check::below(name, "rel_err", worst, 1e-10))
            }));
        }
        out.push(attempt("hurwitz n=2 |j|<=12 alpha=-1/2", |name| {
            Ok(Check::below(name, "abs_err", hurwitz_check(2, 12)?, 1e-10))
        }));
        out
    }

    fn aed_limit(&self) -> Vec<Check> {
        let us = [Complex64::new(1e-2, 0.0), Complex64::new(1e-3, 0.0)];
        (2..=4)
            .map(|n| {
                attempt(format!("limit_ratio n={n} alpha=0"), |name| {
                    let r = bernoulli_limit_check(0.0, n, &us)?;
                    Ok(Check::within(name, "ratio", r.ratios[0], 7.0, 13.0))
                })
            })
            .collect()
    }
}

/// The exact rational of α; binary decimals convert without rounding.
fn exact_alpha(a: &DunklParam) -> BigRational {
    match a {
        DunklParam::Rational(q) => q.clone(),
        DunklParam::Real(x) => <BigRational as Scalar>::from_f64(*x),
    }
}

/// −(α+1)(α+c)/(32(α+3)(α+2)²); c = 2 is the checked form, c = 4 the correct one.
fn rho2_expression(a: &BigRational, c: i64) -> BigRational {
    let f = |k: i64| a.clone() + BigRational::from_i64(k);
    -(f(1) * f(c)) / (BigRational::from_i64(32) * f(3) * f(2) * f(2))
}

fn rel_err(value: Complex64, target: Complex64) -> f64 {
    let d = (value - target).norm();
    if target.norm() > 0.0 {
        d / target.norm()
    } else {
        d
    }
}

/// 𝓘_α^{(k)}(is_l) = 𝓘_α(is_l)P_k(is_l): the derivative ladder against direct evaluation.
fn derivative_ladder_error(alpha: f64, table: &ZeroTable, l: usize, kmax: usize) -> Result<f64> {
    let z = Complex64::new(0.0, table.signed(l as i64)?);
    let direct = cal_i_derivs(alpha, kmax, z)?;
    let ladder = deriv_poly_ladder(&alpha, kmax)?;
    let scale = direct.iter().map(|d| d.norm()).fold(0.0, f64::max);
    Ok(ladder
        .iter()
        .zip(&direct)
        .map(|((p, _), d)| (direct[0] * p.eval(z) - d).norm() / scale)
        .fold(0.0, f64::max))
}
