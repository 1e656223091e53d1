use num::complex::Complex64;
use serde_json::{json, Value};

use dunkl::apostol_euler::{aed_at_izero, aed_family};
use dunkl::appell::DensePoly;
use dunkl::bernoulli::{bernoulli_family, classical_reduction_check};
use dunkl::bessel::zeros::{zeros_j, zeros_s};
use dunkl::format;
use dunkl::fourier::FourierDunklSystem;
use dunkl::numerics::scalar::{rational_string, Scalar};
use dunkl::series::{rho_closed, series_report, sigma_closed, SeriesKind, TSV_HEADER};
use dunkl::verify::{Suite, Verifier, VerifyConfig};
use dunkl::DunklParam;

use crate::output::{cell, tsv, Failure, Output};
use crate::{Family, FourierArgs, PolyArgs, SeriesArgs, SeriesKindArg, SuiteArg, VerifyArgs, ZeroKindArg, ZerosArgs};

type CmdResult = Result<Output, Failure>;

fn parse_alpha(s: &str) -> Result<DunklParam, Failure> {
    s.parse::<DunklParam>().map_err(|_| Failure::Usage(format!("cannot parse alpha {s:?}")))
}

fn parse_complex(s: &str) -> Result<Complex64, Failure> {
    s.trim().parse::<Complex64>().map_err(|_| Failure::Usage(format!("cannot parse complex number {s:?}")))
}

fn poly_table<S: Scalar>(polys: &[DensePoly<S>]) -> (Value, Vec<String>) {
    let mut rows = Vec::new();
    let json: Vec<Value> = polys
        .iter()
        .enumerate()
        .map(|(n, p)| {
            for (i, c) in p.coeffs().iter().enumerate() {
                rows.push(format!("{n}\t{i}\t{}", cell(&c.to_json())));
            }
            let mut v = p.to_json();
            v["n"] = json!(n);
            v
        })
        .collect();
    (Value::Array(json), rows)
}

pub fn poly(a: &PolyArgs) -> CmdResult {
    let alpha = parse_alpha(&a.alpha)?;
    let mut params = json!({
        "family": match a.family { Family::Bernoulli => "bernoulli", Family::Aed => "aed" },
        "alpha": a.alpha,
        "max_n": a.max_n,
    });
    match a.family {
        Family::Bernoulli => {
            if a.u.is_some() || a.u_at_jzero.is_some() {
                return Err(Failure::Usage("--u and --u-at-jzero apply to the aed family only".into()));
            }
            params["classical_check"] = json!(a.classical_check);
            params["arithmetic"] = json!(alpha.arithmetic());
            let (polys, rows) = match &alpha {
                DunklParam::Rational(q) => poly_table(&bernoulli_family(q, a.max_n)?.polys),
                DunklParam::Real(x) => poly_table(&bernoulli_family(x, a.max_n)?.polys),
            };
            let mut result = json!({ "family": "bernoulli", "polys": polys });
            let mut failure = None;
            if a.classical_check {
                if alpha.as_f64() != -0.5 {
                    return Err(Failure::Precondition("--classical-check needs alpha = -1/2".into()));
                }
                let report = classical_reduction_check(a.max_n)?;
                if let Some(e) = report.entries.iter().find(|e| !e.pass) {
                    failure = Some(Failure::Verification(format!("classical reduction fails at n = {}", e.n)));
                }
                result["classical_check"] = report.to_json();
            }
            let mut out = Output::new("poly", params, result, tsv("n\tpower\tcoeff", rows));
            out.failure = failure;
            Ok(out)
        }
        Family::Aed => {
            if a.classical_check {
                return Err(Failure::Usage("--classical-check applies to the bernoulli family only".into()));
            }
            let x = alpha.as_f64();
            params["arithmetic"] = json!("complex128");
            let fam = match (&a.u, a.u_at_jzero) {
                (Some(u), None) => {
                    params["u"] = json!(u);
                    aed_family(x, parse_complex(u)?, a.max_n)?
                }
                (None, Some(l)) => {
                    params["u_at_jzero"] = json!(l);
                    aed_at_izero(x, &zeros_j(x, l)?, l, a.max_n)?
                }
                _ => return Err(Failure::Usage("the aed family needs --u or --u-at-jzero".into())),
            };
            let (polys, rows) = poly_table(&fam.polys);
            let result = json!({
                "family": "aed",
                "alpha": format::num(fam.alpha),
                "u": format::complex(fam.u),
                "polys": polys,
                "max_residual": format::num(fam.max_residual()),
            });
            Ok(Output::new("poly", params, result, tsv("n\tpower\tcoeff", rows)))
        }
    }
}

pub fn zeros(a: &ZerosArgs) -> CmdResult {
    let alpha = parse_alpha(&a.alpha)?;
    let x = alpha.as_f64();
    let table = match a.kind {
        ZeroKindArg::S => zeros_s(x, a.count)?,
        ZeroKindArg::J => zeros_j(x, a.count)?,
    };
    let params = json!({
        "alpha": a.alpha,
        "count": a.count,
        "kind": table.kind.tag(),
        "arithmetic": "real64",
    });
    let rows = table
        .zeros
        .iter()
        .zip(&table.residuals)
        .enumerate()
        .map(|(i, (z, r))| format!("{}\t{}\t{}", i + 1, format::sig17(*z), format::sig17(*r)));
    let rows = tsv("j\tzero\tresidual", rows);
    Ok(Output::new("zeros", params, table.to_json(), rows))
}

pub fn series(a: &SeriesArgs) -> CmdResult {
    let alpha = parse_alpha(&a.alpha)?;
    let x = alpha.as_f64();
    let shifted = matches!(a.kind, SeriesKindArg::EtaU | SeriesKindArg::OmegaU);
    let lattice = matches!(a.kind, SeriesKindArg::EtaL | SeriesKindArg::OmegaL);
    if a.u.is_some() && !shifted {
        return Err(Failure::Usage("--u applies to eta-u and omega-u only".into()));
    }
    if a.l.is_some() && !lattice {
        return Err(Failure::Usage("--l applies to eta-l and omega-l only".into()));
    }
    let u = || -> Result<Complex64, Failure> {
        parse_complex(a.u.as_deref().ok_or_else(|| Failure::Usage("this series needs --u".into()))?)
    };
    let l = || a.l.ok_or_else(|| Failure::Usage("this series needs --l".into()));
    let kind = match a.kind {
        SeriesKindArg::Sigma => SeriesKind::Sigma(a.k),
        SeriesKindArg::Rho => SeriesKind::Rho(a.k),
        SeriesKindArg::EtaU => SeriesKind::EtaU(a.k, u()?),
        SeriesKindArg::EtaL => SeriesKind::EtaL(a.k, l()?),
        SeriesKindArg::OmegaU => SeriesKind::OmegaU(a.k, u()?),
        SeriesKindArg::OmegaL => SeriesKind::OmegaL(a.k, l()?),
    };
    kind.check(x)?;
    let mut params = json!({
        "kind": kind.tag(),
        "k": a.k,
        "alpha": a.alpha,
        "terms": a.terms,
        "tail": a.tail,
        "arithmetic": "real64",
    });
    if let Some(u) = &a.u {
        params["u"] = json!(u);
    }
    if let Some(l) = a.l {
        params["l"] = json!(l);
    }
    let need = a.terms.max(20).max(a.l.unwrap_or(0));
    let table = zeros_s(x, need)?;
    let report = series_report(kind, x, &table, a.terms, a.tail)?;
    let mut result = report.to_json();
    if let DunklParam::Rational(q) = &alpha {
        let exact = match kind {
            SeriesKind::Sigma(k) => Some(sigma_closed(q, k)?),
            SeriesKind::Rho(k) => Some(rho_closed(q, k)?),
            _ => None,
        };
        if let Some(e) = exact {
            params["arithmetic"] = json!("rational");
            result["closed_exact"] = json!(rational_string(&e));
        }
    }
    let rows = tsv(TSV_HEADER, [report.to_tsv_row()]);
    Ok(Output::new("series", params, result, rows))
}

pub fn fourier(a: &FourierArgs) -> CmdResult {
    let alpha = parse_alpha(&a.alpha)?;
    let x = alpha.as_f64();
    if a.n == 0 {
        return Err(Failure::Precondition("n = 0: the constant polynomial is a multiple of e_0".into()));
    }
    if let Some(bad) = a.x.iter().find(|v| !(v.abs() < 1.0)) {
        return Err(Failure::Precondition(format!("x = {bad} is not interior to (-1, 1)")));
    }
    let params = json!({
        "alpha": a.alpha,
        "n": a.n,
        "jmax": a.jmax,
        "terms": a.terms,
        "tail": a.tail,
        "quad_order": a.quad_order,
        "x": a.x,
        "arithmetic": "real64",
    });
    let sys = FourierDunklSystem::with_zeros(x, a.terms.max(a.jmax).max(20))?;
    let mut rows = Vec::new();
    let mut coeffs = Vec::new();
    for j in -(a.jmax as i64)..=a.jmax as i64 {
        let closed = sys.bd_coefficient(a.n, j)?;
        let quad = sys.bd_coefficient_quadrature(a.n, j, a.quad_order)?;
        let diff = (closed - quad).norm();
        rows.push(format!("coeff\t{j}\t{}\t{}\t{}", format::complex_tsv(closed), format::complex_tsv(quad), format::sig17(diff)));
        coeffs.push(json!({
            "j": j,
            "closed": format::complex(closed),
            "quadrature": format::complex(quad),
            "abs_err": format::num(diff),
        }));
    }
    let fam = bernoulli_family(&x, a.n)?;
    let mut sums = Vec::new();
    for &p in &a.x {
        let s = sys.bd_partial_sum(a.n, a.terms, p)?;
        let exact = fam.polys[a.n].eval(&p);
        let err = (s - exact).norm();
        rows.push(format!("partial_sum\t{}\t{}\t{}\t{}", format::sig17(p), format::complex_tsv(s), format::sig17(exact), format::sig17(err)));
        sums.push(json!({
            "x": format::num(p),
            "partial_sum": format::complex(s),
            "exact": format::num(exact),
            "abs_err": format::num(err),
        }));
    }
    let parseval = if a.n >= 2 {
        let r = sys.parseval_check(a.n, a.terms, a.quad_order, a.tail)?;
        rows.push(format!("parseval\t{}\t{}\t{}\t{}", r.jmax, format::sig17(r.coeff_sum + r.tail), format::sig17(r.norm_sq), format::sig17(r.rel_err)));
        r.to_json()
    } else {
        Value::Null
    };
    let result = json!({
        "coefficients": coeffs,
        "partial_sums": sums,
        "parseval": parseval,
    });
    let rows = tsv("row\tindex\tvalue\treference\terr", rows);
    Ok(Output::new("fourier", params, result, rows))
}

pub fn verify(a: &VerifyArgs) -> CmdResult {
    let mut cfg = VerifyConfig::default();
    if let Some(grid) = &a.alpha_grid {
        cfg.alpha_grid = grid.split(',').map(parse_alpha).collect::<Result<_, _>>()?;
        if cfg.alpha_grid.is_empty() {
            return Err(Failure::Usage("empty --alpha-grid".into()));
        }
    }
    if let Some(seed) = a.seed {
        cfg.seed = seed;
    }
    if let Some(order) = a.quad_order {
        cfg.quad_order = order;
    }
    if let Some(terms) = a.terms {
        cfg.terms = terms;
    }
    let suites: Vec<Suite> = match a.suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Exact => vec![Suite::Exact],
        SuiteArg::Series => vec![Suite::Series],
        SuiteArg::Fourier => vec![Suite::Fourier],
    };
    let params = json!({
        "suite": match a.suite { SuiteArg::All => "all", SuiteArg::Exact => "exact", SuiteArg::Series => "series", SuiteArg::Fourier => "fourier" },
        "alpha_grid": a.alpha_grid,
        "seed": a.seed,
        "quad_order": a.quad_order,
        "terms": a.terms,
    });
    let results = Verifier::new(cfg.clone()).run_suites(&suites);
    for r in &results {
        eprintln!("{}", r.summary_line());
    }
    let pass = results.iter().all(|r| r.pass());
    let result = json!({
        "pass": pass,
        "config": cfg.to_json(),
        "criteria": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    });
    let mut rows = Vec::new();
    for r in &results {
        for c in &r.checks {
            let tol = match c.bound {
                dunkl::verify::Bound::Exact => "exact".to_string(),
                dunkl::verify::Bound::Below(t) => format!("<{}", format::sig17(t)),
                dunkl::verify::Bound::Within(lo, hi) => format!("[{},{}]", format::sig17(lo), format::sig17(hi)),
            };
            rows.push(format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.id,
                c.name,
                if c.pass { "pass" } else { "fail" },
                c.informational,
                c.metric,
                c.value.map(format::sig17).unwrap_or_default(),
                tol
            ));
        }
    }
    let mut out = Output::new("verify", params, result, tsv("criterion\tcheck\tstatus\tinformational\tmetric\tvalue\ttolerance", rows));
    if let Some(path) = &a.report {
        let mut text = serde_json::to_string_pretty(&out.json).expect("serializable");
        text.push('\n');
        std::fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    if let Some((r, c)) = results.iter().find_map(|r| r.first_failure().map(|c| (r, c))) {
        out.failure = Some(Failure::Verification(format!("criterion {} ({}): {}", r.id, r.title, c.name)));
    }
    Ok(out)
}
