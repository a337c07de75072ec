use std::f64::consts::PI;

use proptest::prelude::*;
use qdot::basis::tail_envelope;
use qdot::wavefunction::{density_integrals, overlap, sample_radial};
use qdot::{
    continuity_mismatch, evaluate_radial, evaluate_spinor, find_spectrum, normalize, ode_residual,
    solve_coefficients, BoundState, DotParameters, QuadratureSpec, ScanSpec,
};

fn states(v: f64, beta: f64, m: i32) -> Vec<BoundState> {
    let p = DotParameters::new(v, beta, m).unwrap();
    let spec = QuadratureSpec::default();
    find_spectrum(&p, &ScanSpec::default())
        .unwrap()
        .levels
        .iter()
        .map(|&e| normalize(&solve_coefficients(&p, e).unwrap(), &spec).unwrap())
        .collect()
}

fn ratios(c: [f64; 4]) -> [f64; 3] {
    [c[1] / c[0], c[2] / c[0], c[3] / c[0]]
}

fn assert_ratios(got: [f64; 4], want: [f64; 4]) {
    for (a, b) in ratios(got).iter().zip(ratios(want)) {
        assert!((a / b - 1.0).abs() < 1e-3, "{got:?} vs {want:?}");
    }
}

#[test]
fn reference_coefficient_ratios() {
    let fig1 = states(100.0, 2.0, 1)[2];
    assert!((fig1.e - 37.0825).abs() < 1e-3);
    assert_ratios(fig1.coefficients.as_array(), [4.22035, -4067.87, -0.7139284, 880.843]);

    let p = DotParameters::new(100.0, 2.0, -2).unwrap();
    let fig2 = solve_coefficients(&p, fig1.e).unwrap();
    assert_ratios(fig2.coefficients.as_array(), [0.713928, 880.843, -4.22035, 4067.87]);
}

#[test]
fn normalization_and_rescaling() {
    let spec = QuadratureSpec::default();
    for s in states(49.0, 7.0, 1) {
        let (a, b) = density_integrals(&s, &spec).unwrap();
        assert!((a + b - 1.0).abs() < 1e-8);
        let raw = BoundState { coefficients: s.coefficients.scaled(-2.5), normalized: false, ..s };
        let again = normalize(&raw, &spec).unwrap();
        for (x, y) in again.coefficients.as_array().iter().zip(s.coefficients.as_array()) {
            assert!((x.abs() - y.abs()).abs() <= 1e-12 * y.abs().max(1e-300));
        }
    }
}

#[test]
fn distinct_levels_are_orthogonal() {
    let spec = QuadratureSpec::default();
    for (v, beta, m) in [(25.0, 5.0, 0), (100.0, 2.0, 1), (49.0, 14.0, 2)] {
        let s = states(v, beta, m);
        for i in 0..s.len() {
            for j in 0..i {
                let o = overlap(&s[i], &s[j], &spec).unwrap();
                assert!(o.abs() < 1e-6, "v={v} beta={beta} m={m} ({i},{j}): {o:e}");
            }
        }
    }
}

#[test]
fn mirrored_states_share_density() {
    for (v, beta, m) in [(100.0, 2.0, 1), (25.0, 5.0, 0)] {
        let a = states(v, beta, m);
        let b = states(v, -beta, -(m + 1));
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            for i in 0..40 {
                let r = 0.05 + 0.1 * i as f64;
                let (p, q) = (evaluate_radial(x, r).unwrap(), evaluate_radial(y, r).unwrap());
                let (dp, dq) = (p.u * p.u + p.w * p.w, q.u * q.u + q.w * q.w);
                assert!((dp - dq).abs() < 1e-8, "r={r}: {dp:e} vs {dq:e}");
            }
        }
    }
}

#[test]
fn continuity_at_the_boundary() {
    for s in states(100.0, 10.0, 2) {
        let jumps = continuity_mismatch(&s).unwrap();
        assert!(jumps.iter().all(|j| *j < 1e-8), "{jumps:?}");
        let eps = 1e-7;
        let (a, b) = (evaluate_radial(&s, 1.0 - eps).unwrap(), evaluate_radial(&s, 1.0 + eps).unwrap());
        assert!((a.u - b.u).abs() < 1e-5 && (a.w - b.w).abs() < 1e-5);
    }
}

#[test]
fn tail_stays_under_envelope() {
    for s in states(25.0, 1.0, 0) {
        let env = tail_envelope(s.e, s.params.v, s.params.beta).unwrap();
        // amplitude of the exterior solution fixed by its value at r = 2
        let near = evaluate_radial(&s, 2.0).unwrap();
        let c = s.coefficients;
        let bound = 2.0 * (c.c2.abs() + c.d2.abs()) * env.amplitude * (-env.decay_rate * 10.0).exp() / 10f64.sqrt();
        let far = evaluate_radial(&s, 10.0).unwrap();
        assert!(far.u.abs() <= bound, "{} > {bound}", far.u);
        assert!(far.u.abs() < near.u.abs().max(near.w.abs()));
    }
}

#[test]
fn fig1_profiles_decay_outside_well() {
    let s = states(100.0, 2.0, 1)[2];
    let samples = sample_radial(&s, 3.0, 300).unwrap();
    assert_eq!(samples[0].r, 0.0);
    assert_eq!(samples[299].r, 3.0);
    let inside = samples.iter().filter(|x| x.r < 1.0).fold(0.0f64, |a, x| a.max(x.u.abs()).max(x.w.abs()));
    let outside = samples.iter().filter(|x| x.r > 1.5).fold(0.0f64, |a, x| a.max(x.u.abs()).max(x.w.abs()));
    assert!(outside < 0.05 * inside);
    // u changes sign inside the well
    let interior: Vec<f64> = samples.iter().filter(|x| x.r > 0.0 && x.r < 1.0).map(|x| x.u).collect();
    assert!(interior.windows(2).any(|w| w[0] * w[1] < 0.0));
}

#[test]
fn full_density_integrates_to_two_pi() {
    let s = states(49.0, 7.0, 0)[1];
    let spec = QuadratureSpec::default();
    let (a, b) = density_integrals(&s, &spec).unwrap();
    for phi in [0.0, 0.4, 2.0, 5.5] {
        for r in [0.2, 0.9, 1.7] {
            let [x, y] = evaluate_spinor(&s, r, phi).unwrap();
            let q = evaluate_radial(&s, r).unwrap();
            assert!((x.norm_sqr() + y.norm_sqr() - q.u * q.u - q.w * q.w).abs() < 1e-14);
        }
    }
    assert!((2.0 * PI * (a + b) - 2.0 * PI).abs() < 1e-7);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn residuals_vanish_at_random_radii(v in 10.0f64..100.0, beta in -6.0f64..6.0, m in -2i32..3,
                                        ri in 0.01f64..0.99, ro in 1.01f64..8.0) {
        let p = DotParameters::new(v, beta, m).unwrap();
        let spec = QuadratureSpec::default();
        for e in find_spectrum(&p, &ScanSpec::default()).unwrap().levels {
            let s = normalize(&solve_coefficients(&p, e).unwrap(), &spec).unwrap();
            for r in [ri, ro] {
                let (a, b) = ode_residual(&s, r).unwrap();
                prop_assert!(a.abs() < 1e-8 && b.abs() < 1e-8, "e={} r={}: {:e} {:e}", e, r, a, b);
            }
        }
    }
}
