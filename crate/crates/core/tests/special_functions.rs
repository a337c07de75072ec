
use bessel_reference::{J_REFERENCE, K_REFERENCE};
use proptest::prelude::*;
use qdot::special::*;
use qdot::ComplexValue;

fn crel_err(a: ComplexValue, b: ComplexValue) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn j_matches_high_precision_reference() {
    let mut worst = 0.0f64;
    for &(n, x, want) in J_REFERENCE {
        let got = bessel_j(n, x).unwrap();
        // absolute error near zeros, relative elsewhere
        let err = (got - want).abs() / want.abs().max(1e-3);
        assert!(err < 1e-10, "J_{n}({x}) = {got:e}, want {want:e}");
        assert_eq!(bessel_j(n, -x).unwrap(), if n % 2 == 0 { got } else { -got });
        worst = worst.max(err);
    }
    println!("J worst scaled error {worst:e}");
}

#[test]
fn k_matches_high_precision_reference() {
    let mut worst = 0.0f64;
    for &(n, re, im, want_re, want_im) in K_REFERENCE {
        let z = ComplexValue::new(re, im);
        let want = ComplexValue::new(want_re, want_im);
        let got = bessel_k_complex(n, z).unwrap();
        let err = crel_err(got, want);
        assert!(err < 1e-10, "K_{n}({z}) = {got}, want {want}, rel {err:e}");
        worst = worst.max(err);
    }
    println!("K worst relative error {worst:e}");
}

#[test]
fn j_first_zero() {
    assert!(bessel_j(0, 2.404825557695773).unwrap().abs() < 1e-12);
}

#[test]
fn j_recurrence() {
    for n in 1..=10 {
        for i in 0..100 {
            let x = 0.5 + 49.5 * i as f64 / 99.0;
            let lhs = bessel_j(n - 1, x).unwrap() + bessel_j(n + 1, x).unwrap();
            let rhs = 2.0 * n as f64 / x * bessel_j(n, x).unwrap();
            let scale = lhs.abs().max(rhs.abs()).max(bessel_j(n - 1, x).unwrap().abs());
            assert!((lhs - rhs).abs() <= 1e-10 * scale, "n={n} x={x}");
        }
    }
}

#[test]
fn j_wronskian_two_ways() {
    // J_{n+1} J_{n-1} - J_n^2 from direct values and from values generated by
    // the three-term recurrence started at J_{n-1}, J_n
    for n in 1..=8 {
        for i in 0..60 {
            let x = 0.1 + 49.9 * i as f64 / 59.0;
            let (a, b, c) = (bessel_j(n - 1, x).unwrap(), bessel_j(n, x).unwrap(), bessel_j(n + 1, x).unwrap());
            let direct = c * a - b * b;
            let c_rec = 2.0 * n as f64 / x * b - a;
            let recurred = c_rec * a - b * b;
            assert!((direct - recurred).abs() < 1e-10, "n={n} x={x}");
        }
    }
}

#[test]
fn k_recurrence() {
    let zs = [
        ComplexValue::new(0.01, 0.0),
        ComplexValue::new(0.4, 0.3),
        ComplexValue::new(1.9, -1.0),
        ComplexValue::new(2.1, 0.5),
        ComplexValue::new(5.0, 4.9),
        ComplexValue::new(0.05, 3.0),
        ComplexValue::new(30.0, -20.0),
        ComplexValue::new(120.0, 100.0),
    ];
    for z in zs {
        for n in 1..=10 {
            let k = bessel_k_orders(n - 1, n + 1, z).unwrap();
            let lhs = k[0] - k[2];
            let rhs = -2.0 * n as f64 / z * k[1];
            assert!(crel_err(lhs, rhs) < 1e-9, "n={n} z={z}");
        }
    }
}

#[test]
fn k_negative_orders_reflect() {
    let z = ComplexValue::new(1.3, -0.4);
    for n in 0..6 {
        assert_eq!(bessel_k_complex(-n, z).unwrap(), bessel_k_complex(n, z).unwrap());
    }
}

#[test]
fn k_conjugation_is_exact() {
    for &(n, re, im, _, _) in K_REFERENCE {
        let z = ComplexValue::new(re, im);
        assert_eq!(bessel_k_complex(n, z.conj()).unwrap(), bessel_k_complex(n, z).unwrap().conj());
    }
    let k = ComplexValue::new(3.0, 1.0);
    assert_eq!(
        bessel_k_radial_derivative(1, k.conj(), 1.2).unwrap(),
        bessel_k_radial_derivative(1, k, 1.2).unwrap().conj()
    );
}

#[test]
fn k_domain_and_caps() {
    assert!(matches!(bessel_k_complex(0, ComplexValue::new(0.0, 1.0)), Err(SpecialError::DomainError(_))));
    assert!(matches!(bessel_k_complex(0, ComplexValue::new(-1.0, 0.0)), Err(SpecialError::DomainError(_))));
    assert!(matches!(bessel_k_complex(65, ComplexValue::new(1.0, 0.0)), Err(SpecialError::OrderCapExceeded(_))));
    assert!(matches!(bessel_j(0, 200.5), Err(SpecialError::ArgumentOutOfRange(_))));
}

#[test]
fn derivative_identities_at_order_zero() {
    for r in [0.3, 1.0, 4.2] {
        assert!((bessel_j_radial_derivative(0, 1.0, r).unwrap() + bessel_j(1, r).unwrap()).abs() < 1e-15);
        let k = ComplexValue::new(1.7, 0.0);
        let d = bessel_k_radial_derivative(0, k, r).unwrap();
        let want = -k * bessel_k_complex(1, k * r).unwrap();
        assert!(crel_err(d, want) < 1e-14);
    }
    assert_eq!(bessel_j_radial_derivative(3, 0.0, 0.8).unwrap(), 0.0);
}

#[test]
fn derivative_fixed_examples() {
    let h = 1e-6;
    let fd = (bessel_j(1, 2.0 * (0.7 + h)).unwrap() - bessel_j(1, 2.0 * (0.7 - h)).unwrap()) / (2.0 * h);
    assert!((bessel_j_radial_derivative(1, 2.0, 0.7).unwrap() - fd).abs() < 1e-8);

    let k = ComplexValue::new(3.0, 1.0);
    let fd = (bessel_k_complex(1, k * (1.2 + h)).unwrap() - bessel_k_complex(1, k * (1.2 - h)).unwrap()) / (2.0 * h);
    assert!((bessel_k_radial_derivative(1, k, 1.2).unwrap() - fd).norm() < 1e-7);
}

#[test]
fn k_large_argument_asymptotics() {
    let mut last = f64::INFINITY;
    for x in [10.0, 20.0, 40.0, 80.0] {
        let z = ComplexValue::new(x, 0.0);
        let asym = (std::f64::consts::PI / (2.0 * z)).sqrt() * (-z).exp() * (1.0 - 1.0 / (8.0 * z));
        let err = crel_err(bessel_k_complex(0, z).unwrap(), asym);
        assert!(err < 2e-3 && err < last, "x={x}: {err:e}");
        last = err;
    }
}

proptest! {
    #[test]
    fn j_derivative_matches_finite_difference(n in -6i32..=6, k in -8.0f64..8.0, r in 0.05f64..3.0) {
        let h = 1e-6;
        let fd = (bessel_j(n, k * (r + h)).unwrap() - bessel_j(n, k * (r - h)).unwrap()) / (2.0 * h);
        let d = bessel_j_radial_derivative(n, k, r).unwrap();
        prop_assert!((d - fd).abs() < 1e-7, "{d} vs {fd}");
    }

    #[test]
    fn k_derivative_matches_finite_difference(n in -5i32..=5, kr in 0.2f64..6.0, ki in -4.0f64..4.0, r in 0.5f64..3.0) {
        let k = ComplexValue::new(kr, ki);
        let h = 1e-6;
        let fd = (bessel_k_complex(n, k * (r + h)).unwrap() - bessel_k_complex(n, k * (r - h)).unwrap()) / (2.0 * h);
        let d = bessel_k_radial_derivative(n, k, r).unwrap();
        // absolute tolerance, scaled for the r^-n growth near the origin
        let scale = bessel_k_complex(n, k * r).unwrap().norm().max(1.0);
        prop_assert!((d - fd).norm() < 1e-7 * scale, "{d} vs {fd}");
    }

    #[test]
    fn j_parity(n in -20i32..=20, x in 0.0f64..150.0) {
        let a = bessel_j(n, x).unwrap();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert_eq!(bessel_j(n, -x).unwrap(), sign * a);
        prop_assert_eq!(bessel_j(-n, x).unwrap(), sign * a);
    }

    #[test]
    fn j_orders_agree_with_single(lo in -10i32..0, span in 0i32..15, x in 0.0f64..100.0) {
        let v = bessel_j_orders(lo, lo + span, x).unwrap();
        for (i, j) in v.iter().enumerate() {
            let single = bessel_j(lo + i as i32, x).unwrap();
            prop_assert!((j - single).abs() <= 1e-12 * single.abs().max(1e-3));
        }
    }

    #[test]
    fn k_orders_agree_with_single(re in 0.05f64..50.0, im in -50.0f64..50.0, hi in 0i32..8) {
        let z = ComplexValue::new(re, im);
        let k = bessel_k_orders(-2, hi, z).unwrap();
        for (i, c) in k.iter().enumerate() {
            prop_assert!(c.re.is_finite() && c.im.is_finite());
            prop_assert_eq!(*c, bessel_k_complex(i as i32 - 2, z).unwrap());
        }
    }
}
