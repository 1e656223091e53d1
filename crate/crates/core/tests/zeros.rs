use std::f64::consts::PI;

use proptest::prelude::*;

use dunkl::bessel::zeros::{mcmahon, zeros_j, zeros_s};

#[test]
fn tabulated_values() {
    // j_{0,1}, j_{1,1}, j_{1,2} (Abramowitz–Stegun 9.5)
    let j0 = zeros_j(0.0, 1).unwrap();
    assert!((j0.zeros[0] - 2.404825557695773).abs() < 1e-14);
    let s0 = zeros_s(0.0, 2).unwrap();
    assert!((s0.zeros[0] - 3.831705970207512).abs() < 1e-14);
    assert!((s0.zeros[1] - 7.015586669815619).abs() < 1e-14);
    // J_{3/2}: tan x = x
    let s = zeros_s(0.5, 3).unwrap();
    for z in s.zeros {
        assert!((z.tan() - z).abs() < 1e-9 * z);
    }
}

#[test]
fn inputs_out_of_range() {
    assert!(zeros_s(-2.0, 1).is_err());
    assert!(zeros_s(f64::NAN, 1).is_err());
    assert!(zeros_j(-1.0, 1).is_err());
    assert!(zeros_s(0.0, 0).unwrap().is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn residuals_and_interlacing(alpha in -0.99f64..6.0) {
        let s = zeros_s(alpha, 60).unwrap();
        let j = zeros_j(alpha, 61).unwrap();
        prop_assert!(s.residuals.iter().all(|&r| r < 1e-12));
        for l in 0..60 {
            prop_assert!(j.zeros[l] < s.zeros[l] && s.zeros[l] < j.zeros[l + 1]);
        }
    }

    #[test]
    fn spacing_tends_to_pi(alpha in -1.95f64..6.0) {
        let s = zeros_s(alpha, 3000).unwrap();
        let gap = s.zeros[2999] - s.zeros[2998];
        prop_assert!((gap - PI).abs() < 1e-4);
        let nu = alpha + 1.0;
        prop_assert!((s.zeros[2999] - mcmahon(nu, 3000.0)).abs() < 1e-9);
    }

    #[test]
    fn zeros_increase_with_order(alpha in -1.9f64..5.0, d in 0.05f64..1.0) {
        let a = zeros_s(alpha, 20).unwrap();
        let b = zeros_s(alpha + d, 20).unwrap();
        prop_assert!(a.zeros.iter().zip(&b.zeros).all(|(x, y)| x < y));
    }
}
