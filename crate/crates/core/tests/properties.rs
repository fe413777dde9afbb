use proptest::prelude::*;

use slater_core::amplitudes::*;
use slater_core::ellipsoidal::{t_abc_exact, t_abc_oracle};
use slater_core::quadrature::{try_integrate_finite, QuadratureOptions};
use slater_core::specfun::*;
use slater_core::theorems::*;
use slater_core::{Complex, TruncationPolicy};

fn close(a: Complex, b: Complex, rel: f64) -> bool {
    (a - b).norm() <= rel * a.norm().max(b.norm()).max(1e-300)
}

fn arg_z() -> impl Strategy<Value = Complex> {
    (0.05f64..20.0, -1.2f64..1.2).prop_map(|(r, th)| Complex::from_polar(r, th))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn k_half_recurrence_through_negative_orders(m in -6i64..6, z in arg_z()) {
        // K_{ν+1} = K_{ν−1} + (2ν/z) K_ν with ν = m + 1/2, crossing ν < 0 via K_{−ν} = K_ν.
        let nu = m as f64 + 0.5;
        let lhs = bessel_k_half_signed(m + 1, z).unwrap();
        let rhs = bessel_k_half_signed(m - 1, z).unwrap() + bessel_k_half_signed(m, z).unwrap() * (2.0 * nu) / z;
        prop_assert!(close(lhs, rhs, 1e-11));
    }

    #[test]
    fn gamma_recurrence(twice_a in -10i32..12, z in arg_z()) {
        let a = twice_a as f64 / 2.0;
        let lhs = upper_incomplete_gamma(a + 1.0, z).unwrap();
        let rhs = upper_incomplete_gamma(a, z).unwrap() * a + z.powf(a) * (-z).exp();
        prop_assert!(close(lhs, rhs, 1e-10), "a={a} z={z}: {lhs} vs {rhs}");
    }

    #[test]
    fn erf_is_odd(re in -4.0f64..4.0, im in -2.0f64..2.0) {
        let z = Complex::new(re, im);
        let a = erf_complex(z).unwrap();
        let b = erf_complex(-z).unwrap();
        prop_assert!((a + b).norm() <= 1e-14 * a.norm().max(1.0));
    }

    #[test]
    fn kummer_transformation(a in 1u32..6, extra in 1u32..6, re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let b = a + extra;
        let z = Complex::new(re, im);
        let lhs = kummer_1f1(a, b, z).unwrap();
        let rhs = z.exp() * kummer_1f1(b - a, b, -z).unwrap();
        prop_assert!(close(lhs, rhs, 1e-9));
    }

    #[test]
    fn quadrature_is_linear(alpha in -3.0f64..3.0, beta in -3.0f64..3.0, w in 0.5f64..4.0) {
        let opts = QuadratureOptions::with_tol(1e-12);
        let f = |x: f64| (w * x).sin() * (-x).exp();
        let g = |x: f64| x.sqrt() / (1.0 + x * x);
        let int = |h: &dyn Fn(f64) -> f64| {
            try_integrate_finite(|x| Ok(h(x)), 0.0, 3.0, &opts).unwrap().value
        };
        let combined = int(&|x| alpha * f(x) + beta * g(x));
        let split = alpha * int(&f) + beta * int(&g);
        prop_assert!((combined - split).abs() <= 1e-10 * (alpha.abs() + beta.abs() + 1.0));
    }

    #[test]
    fn theorem1_terms_alternate(b in 0.01f64..1.0, c in 0.05f64..2.0, x2 in 0.05f64..3.0, k in 0.05f64..1.0) {
        let p = YukawaFormParams::real(b, c, x2, k);
        let terms: Vec<f64> = (0..8).map(|n| theorem1_term(n, &p).unwrap().re).collect();
        for w in terms.windows(2) {
            prop_assert!(w[0] * w[1] < 0.0);
        }
    }

    #[test]
    fn theorem2_matches_quadrature(eta2 in 0.5f64..2.0, x1 in 0.5f64..2.0, x2 in 0.5f64..2.0) {
        let v = theorem2_angular(eta2, x1, x2).unwrap();
        let o = theorem2_angular_oracle(eta2, x1, x2, 1e-12).unwrap();
        prop_assert!(close(v, o, 1e-8));
    }

    // The finite gamma sum expands both polynomial factors about s = 0, so it
    // loses roughly (η₁²/(η₁² − η₂²))^{2n} to cancellation; the domain keeps
    // that ratio moderate.
    #[test]
    fn general_term_matches_quadrature(
        n in 0usize..4,
        eta1 in 0.3f64..1.0,
        gap in 0.2f64..0.6,
        x2 in 0.1f64..3.0,
        k in 0.05f64..1.0,
    ) {
        let p = SlaterPair::collinear(eta1 + gap, eta1, x2, k);
        let a = s1_general_term_gamma(n, &p).unwrap();
        let b = s1_series_n_term(n, &p, 1e-12).unwrap();
        prop_assert!(close(a, b, 1e-6), "n={n}: {a} vs {b}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn cos_power_identity(j in 0usize..=12) {
        let set = cos_power_to_legendre(j).unwrap();
        for i in 0..50 {
            let u = ((2 * i + 1) as f64 * std::f64::consts::PI / 100.0).cos();
            let got = set.eval(u).unwrap();
            prop_assert!((got - u.powi(j as i32)).abs() <= 1e-13);
        }
    }

    #[test]
    fn one_range_matches_two_range(
        x1 in 0.2f64..1.0,
        ratio in 1.4f64..3.0,
        ct in -0.9f64..0.9,
        eta in 0.2f64..2.0,
    ) {
        let x2 = x1 * ratio;
        let cfg = CorollaryConfig::spherical(CorollaryVariant::C4, eta, x1, x2, ct);
        let one = corollary_eval(&cfg, &TruncationPolicy::default().with_max_terms(200)).unwrap();
        let two = two_range_mos_eval(eta, x1, x2, ct, 70).unwrap();
        prop_assert!(close(one.value, two.series.value, 1e-6));
    }

    #[test]
    fn tau_oracle_reduces_to_closed_forms(eta1 in 0.2f64..2.0, eta2 in 0.2f64..2.0, x2 in 0.05f64..3.0) {
        prop_assume!((eta1 - eta2).abs() > 1e-3);
        let p = SlaterPair::new(eta1, eta2, x2, 0.0, 0.0).unwrap();
        let v = s1_tau_oracle(&p, 1e-12).unwrap().value;
        prop_assert!((v.re - s1_two_slater_closed(eta1, eta2, x2).unwrap()).abs() < 1e-9 * v.re);
        prop_assert!(v.im.abs() < 1e-14);
        let q = SlaterPair::new(eta2, eta2, x2, 0.0, 0.0).unwrap();
        let w = s1_tau_oracle(&q, 1e-12).unwrap().value;
        prop_assert!((w.re - s1_equal_eta_closed(eta2, x2).unwrap()).abs() < 1e-9 * w.re);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn t_abc_exact_matches_oracle(r in 0.01f64..2.0) {
        let o = t_abc_oracle(r, 1e-9).unwrap();
        let x = t_abc_exact(r).unwrap();
        prop_assert!((o.value - x).abs() <= 1e-8 * x.abs());
        prop_assert!(x > 0.0);
    }
}
