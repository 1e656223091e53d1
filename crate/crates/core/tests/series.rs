use std::f64::consts::PI;

use num::complex::Complex64;
use proptest::prelude::*;

use dunkl::apostol_euler::classical_euler;
use dunkl::bessel::deriv::cal_i_derivs;
use dunkl::bessel::laurent::deriv_poly_ladder;
use dunkl::bessel::zeros::{cal_i_at_izero, zeros_s, zeros_s_with};
use dunkl::numerics::scalar::Scalar;
use dunkl::series::{
    closed_form, euler_alternating_from_omega, eta_l_closed_all, series_report, sigma_closed, truncated_sum,
    truncated_sum_with, SeriesKind,
};
use dunkl::Execution;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Σ 1/(πj)^{2k} = ζ(2k)/π^{2k} with ζ(2k) from the classical Bernoulli numbers.
fn zeta_over_pi_pow(k: usize) -> f64 {
    let b = dunkl::bernoulli::classical_bernoulli(2 * k)[2 * k].coeff(0).to_c64().re;
    let fact: f64 = (1..=2 * k).map(|i| i as f64).product();
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    sign * 2f64.powi(2 * k as i32 - 1) * b / fact
}

#[test]
fn even_zeta_values() {
    let t = zeros_s(-0.5, 10_000).unwrap();
    for k in 1..=4 {
        let r = series_report(SeriesKind::Sigma(k), -0.5, &t, 10_000, true).unwrap();
        let z = zeta_over_pi_pow(k);
        assert!((r.corrected.re - z).abs() / z < 1e-8, "k={k}: {r:?}");
        assert!((r.closed_form.re - z).abs() / z < 1e-14);
    }
}

#[test]
fn alternating_euler_sums() {
    // Σ_{j≥0} (−1)^j/(2j+1)^{2k+1} = (−1)^k π^{2k+1} E_{2k}(1/2)/(4 (2k)!)
    let t = zeros_s(-0.5, 10_000).unwrap();
    let euler = classical_euler(8);
    let half = num::BigRational::new(1.into(), 2.into());
    for k in 1..=3 {
        let kind = SeriesKind::OmegaU(2 * k, c(PI / 2.0, 0.0));
        let e = euler[2 * k].eval(&half).to_c64().re;
        let fact: f64 = (1..=2 * k).map(|i| i as f64).product();
        let expect = -(if k % 2 == 0 { 1.0 } else { -1.0 }) * PI.powi(2 * k as i32 + 1) * e / (4.0 * fact);
        let direct: f64 = (0..200_000).map(|j| (if j % 2 == 0 { 1.0 } else { -1.0 }) / ((2 * j + 1) as f64).powi(2 * k as i32 + 1)).sum();
        assert!((expect + direct).abs() < 1e-12, "oracle k={k}");
        let closed = closed_form(kind, -0.5, None).unwrap();
        assert!((euler_alternating_from_omega(closed, k) - expect).abs() < 1e-12);
        let r = series_report(kind, -0.5, &t, 10_000, true).unwrap();
        assert!((euler_alternating_from_omega(r.corrected, k) - expect).abs() < 1e-9);
    }
}

#[test]
fn truncation_error_halves_with_doubling() {
    // σ_1 without tail: error ~ 1/(π² N) at α = −1/2
    let t = zeros_s(0.5, 8_000).unwrap();
    let exact = sigma_closed(&0.5, 1).unwrap();
    let err = |n| exact - truncated_sum(SeriesKind::Sigma(1), 0.5, &t, n, false).unwrap().0.re;
    for n in [500, 1000, 2000, 4000] {
        let ratio = err(n) / err(2 * n);
        assert!((ratio - 2.0).abs() < 0.01, "N={n}: {ratio}");
    }
}

#[test]
fn tail_beats_plain_truncation() {
    let alpha = 0.5;
    let t = zeros_s(alpha, 1000).unwrap();
    let kinds = [
        SeriesKind::Sigma(1),
        SeriesKind::Sigma(2),
        SeriesKind::Rho(1),
        SeriesKind::EtaL(0, 1),
        SeriesKind::EtaL(1, 2),
        SeriesKind::OmegaL(0, 1),
        SeriesKind::EtaU(2, c(0.7, 0.4)),
        SeriesKind::OmegaU(1, c(1.3, -0.2)),
    ];
    for kind in kinds {
        let plain = series_report(kind, alpha, &t, 1000, false).unwrap();
        let tailed = series_report(kind, alpha, &t, 1000, true).unwrap();
        assert!(tailed.abs_err * 100.0 < plain.abs_err || tailed.rel_err < 1e-12, "{kind}: {plain:?} {tailed:?}");
    }
}

#[test]
fn generic_u_approaches_lattice_value() {
    // η_{k,u} − (s_l − u)^{−(k+1)} → η_k^{l} as u → s_l
    let alpha = 0.5;
    let t = zeros_s(alpha, 10).unwrap();
    for l in [1usize, 3] {
        let s = t.zeros[l - 1];
        let lattice = eta_l_closed_all(alpha, &t, l, 3).unwrap();
        let u = c(s * (1.0 + 1e-3), 0.0);
        for (k, want) in lattice.iter().enumerate() {
            let eta = closed_form(SeriesKind::EtaU(k, u), alpha, None).unwrap();
            let regular = eta - (c(s, 0.0) - u).powi(-(k as i32 + 1));
            assert!((regular - want).norm() < 1e-2 * want.norm().max(1.0), "l={l} k={k}: {regular} vs {want}");
        }
    }
}

#[test]
fn derivatives_at_zeros_reduce_to_ladder() {
    for &alpha in &[0.0, 0.5, 2.0] {
        let t = zeros_s(alpha, 6).unwrap();
        let ladder = deriv_poly_ladder(&alpha, 6).unwrap();
        for l in 1..=6 {
            let z = c(0.0, t.zeros[l - 1]);
            let w = cal_i_at_izero(alpha, &t, l).unwrap();
            let direct = cal_i_derivs(alpha, 6, z).unwrap();
            for (k, (p, _)) in ladder.iter().enumerate() {
                let via = w * p.eval(z);
                assert!((via - direct[k]).norm() < 1e-10 * direct[0].norm().max(direct[k].norm()), "α={alpha} l={l} k={k}");
            }
            // P_1 = 0, P_2 = 1
            assert!(direct[1].norm() < 1e-12 * direct[0].norm());
            assert!((direct[2] - direct[0]).norm() < 1e-11 * direct[0].norm());
        }
    }
}

#[test]
fn parallel_and_sequential_agree_bitwise() {
    let seq = zeros_s_with(0.5, 3000, Execution::Sequential).unwrap();
    let par = zeros_s_with(0.5, 3000, Execution::Parallel).unwrap();
    assert_eq!(seq, par);
    for kind in [SeriesKind::Sigma(2), SeriesKind::OmegaL(1, 2), SeriesKind::EtaU(0, c(0.3, 0.9))] {
        let a = truncated_sum_with(kind, 0.5, &seq, 3000, true, Execution::Sequential).unwrap();
        let b = truncated_sum_with(kind, 0.5, &seq, 3000, true, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn rayleigh_sums_match_closed_form(alpha in -1.9f64..4.0, k in 1usize..=4) {
        prop_assume!((alpha + 1.0).abs() > 1e-3);
        let t = zeros_s(alpha, 2000).unwrap();
        let r = series_report(SeriesKind::Sigma(k), alpha, &t, 2000, true).unwrap();
        prop_assert!(r.rel_err < 1e-7, "{:?}", r);
    }

    #[test]
    fn alternating_sums_match_closed_form(alpha in -1.9f64..2.4, k in 1usize..=2) {
        prop_assume!((alpha + 1.0).abs() > 1e-3);
        prop_assume!(alpha <= 2.0 * k as f64 - 1.5);
        let t = zeros_s(alpha, 2000).unwrap();
        let r = series_report(SeriesKind::Rho(k), alpha, &t, 2000, true).unwrap();
        prop_assert!(r.rel_err < 1e-5, "{:?}", r);
    }

    #[test]
    fn sigma_sums_decrease_in_k(alpha in -1.5f64..5.0) {
        prop_assume!((alpha + 1.0).abs() > 1e-3);
        let s1 = zeros_s(alpha, 1).unwrap().zeros[0];
        for k in 1..6 {
            let a = sigma_closed(&alpha, k).unwrap();
            let b = sigma_closed(&alpha, k + 1).unwrap();
            // s_1^{−2} σ_k ≥ σ_{k+1} ≥ s_1^{−2k−2}
            prop_assert!(b <= a / (s1 * s1) * (1.0 + 1e-12));
            prop_assert!(b >= s1.powi(-2 * (k as i32 + 1)) * (1.0 - 1e-12));
        }
    }
}
