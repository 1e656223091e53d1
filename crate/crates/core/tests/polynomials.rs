use num::complex::Complex64;
use num::BigRational;
use proptest::prelude::*;

use dunkl::appell::{coeff_distance, dunkl_translate, gamma_closed, gamma_ladder, lambda_op, DensePoly};
use dunkl::apostol_euler::aed_family;
use dunkl::bernoulli::{bernoulli_family, Endpoint};
use dunkl::numerics::scalar::Scalar;

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

/// Rational α avoiding the negative integers.
fn rational_alpha() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=6)
        .prop_map(|(p, d)| q(p, d))
        .prop_filter("negative integer", |a| !(a.is_integer() && *a < q(0, 1)))
}

/// Λ_α x^n computed straight from the operator definition
/// f′(x) + (α + 1/2)(f(x) − f(−x))/x.
fn lambda_monomial(alpha: &BigRational, n: usize) -> DensePoly<BigRational> {
    if n == 0 {
        return DensePoly::zero();
    }
    let mut c = BigRational::from_i64(n as i64);
    if n % 2 == 1 {
        c = c + (alpha.clone() + q(1, 2)) * BigRational::from_i64(2);
    }
    DensePoly::monomial(n - 1).scale(&c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lambda_matches_definition(alpha in rational_alpha(), n in 0usize..12) {
        prop_assert_eq!(lambda_op(&DensePoly::monomial(n), &alpha), lambda_monomial(&alpha, n));
    }

    #[test]
    fn bernoulli_family_is_appell_with_parity(alpha in rational_alpha()) {
        let fam = bernoulli_family(&alpha, 10).unwrap();
        prop_assert!(fam.appell_property_holds());
        prop_assert!(fam.parity_holds());
        for n in 1..=4 {
            prop_assert!(fam.value(2 * n + 1, Endpoint::One).unwrap().is_zero());
        }
        prop_assert!(fam.translation_holds().iter().all(|&b| b));
    }

    #[test]
    fn binary64_family_tracks_rational(p in -6i64..=12, d in prop::sample::select(vec![1i64, 2, 4, 8])) {
        let a = q(p, d);
        prop_assume!(!(a.is_integer() && a < q(0, 1)));
        let exact = bernoulli_family(&a, 12).unwrap();
        let float = bernoulli_family(&(p as f64 / d as f64), 12).unwrap();
        for n in 0..=12 {
            let e = exact.get(n).unwrap();
            let scale = e.max_abs().max(1.0);
            prop_assert!(coeff_distance(float.get(n).unwrap(), e) / scale < 1e-11);
        }
    }

    #[test]
    fn gamma_ladder_is_product_of_ratios(alpha in rational_alpha(), n in 1usize..16) {
        let ladder = gamma_ladder(&alpha, n).unwrap();
        prop_assert!(ladder.ratio_recursion_holds());
        let mut g = BigRational::from_i64(1);
        for m in 1..=n {
            g = g * ladder.k(m).clone();
        }
        prop_assert_eq!(g, gamma_closed(&alpha, n));
    }

    #[test]
    fn translation_is_symmetric_on_bernoulli(alpha in rational_alpha(), y in -3i64..=3, x in -3i64..=3) {
        // τ_y B(x) = τ_x B(y) for the Dunkl translation of any polynomial
        let fam = bernoulli_family(&alpha, 6).unwrap();
        let (x, y) = (q(x, 2), q(y, 3));
        for n in 0..=6 {
            let p = fam.get(n).unwrap();
            let at_xy = dunkl_translate(p, &y, &alpha).unwrap().eval(&x);
            let at_yx = dunkl_translate(p, &x, &alpha).unwrap().eval(&y);
            prop_assert_eq!(at_xy, at_yx);
        }
    }

    #[test]
    fn aed_family_is_appell(alpha in -0.45f64..3.0, re in 0.2f64..2.5, im in -1.5f64..1.5) {
        let fam = aed_family(alpha, Complex64::new(re, im), 8).unwrap();
        prop_assert!(fam.appell_defect() < 1e-10, "{}", fam.appell_defect());
        prop_assert!(fam.polys.iter().enumerate().all(|(n, p)| p.degree() == Some(n)));
        prop_assert!(fam.polys.iter().all(|p| (p.coeff(p.degree().unwrap()) - 1.0).norm() < 1e-12));
    }
}

#[test]
fn printed_low_degree_bernoulli() {
    let a = q(1, 3);
    let fam = bernoulli_family(&a, 3).unwrap();
    let one = BigRational::from_i64(1);
    // 𝔅_1 = x and 𝔅_2 = x² − (α+1)/(α+2)
    assert_eq!(fam.get(1).unwrap().coeffs(), &[q(0, 1), one.clone()]);
    let b2 = fam.get(2).unwrap();
    assert_eq!(b2.coeff(2), one);
    assert_eq!(b2.coeff(1), q(0, 1));
    assert_eq!(b2.coeff(0), -(a.clone() + one.clone()) / (a + BigRational::from_i64(2)));
}
