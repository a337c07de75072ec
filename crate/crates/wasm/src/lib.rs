//! Browser bindings for the demo page in `www/`.
//!
//! Results cross the boundary as flat `Float64Array`s; the layouts are
//! documented on each export.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use qdot::spectrum::reduced_determinant;
use qdot::wavefunction::sample_radial;
use qdot::{find_spectrum, normalize, solve_coefficients, DotParameters, QuadratureSpec, ScanSpec};
use wasm_bindgen::prelude::*;

const MAX_POINTS: usize = 20_000;

fn params(v: f64, beta: f64, m: i32) -> Result<DotParameters, String> {
    DotParameters::new(v, beta, m).map_err(|e| e.to_string())
}

fn check_points(n: usize, what: &str) -> Result<(), String> {
    if (2..=MAX_POINTS).contains(&n) {
        Ok(())
    } else {
        Err(format!("{what} must be between 2 and {MAX_POINTS}, got {n}"))
    }
}

pub fn levels_inner(v: f64, beta: f64, m: i32) -> Result<Vec<f64>, String> {
    let p = params(v, beta, m)?;
    Ok(find_spectrum(&p, &ScanSpec::default()).map_err(|e| e.to_string())?.levels)
}

/// `[e0, d0, e1, d1, ...]` across the open energy window; `d` is the
/// regularized, row-normalized determinant whose zeros are the levels.
pub fn determinant_curve_inner(v: f64, beta: f64, m: i32, points: usize) -> Result<Vec<f64>, String> {
    check_points(points, "points")?;
    let p = params(v, beta, m)?;
    let (lo, hi) = p.window();
    let margin = 1e-6 * (hi - lo);
    let mut out = Vec::with_capacity(2 * points);
    for i in 0..points {
        let e = lo + margin + (hi - lo - 2.0 * margin) * i as f64 / (points - 1) as f64;
        out.push(e);
        out.push(reduced_determinant(&p, e).map_err(|err| err.to_string())?);
    }
    Ok(out)
}

/// `[beta, e, beta, e, ...]` for every level at `steps` values of beta in
/// `[0, beta_max]`.
pub fn level_fan_inner(v: f64, m: i32, beta_max: f64, steps: usize) -> Result<Vec<f64>, String> {
    check_points(steps, "steps")?;
    if !(beta_max > 0.0) || !beta_max.is_finite() {
        return Err(format!("beta_max must be positive, got {beta_max}"));
    }
    let spec = ScanSpec { grid_points: 600, ..ScanSpec::default() };
    let mut out = Vec::new();
    for i in 0..steps {
        let beta = beta_max * i as f64 / (steps - 1) as f64;
        let s = find_spectrum(&params(v, beta, m)?, &spec).map_err(|e| e.to_string())?;
        for e in s.levels {
            out.push(beta);
            out.push(e);
        }
    }
    Ok(out)
}

/// `[e, c1, c2, d1, d2, r0, u0, w0, r1, u1, w1, ...]` for the normalized
/// state of the given level.
pub fn wavefunction_inner(
    v: f64,
    beta: f64,
    m: i32,
    level: usize,
    r_max: f64,
    samples: usize,
) -> Result<Vec<f64>, String> {
    check_points(samples, "samples")?;
    let p = params(v, beta, m)?;
    let levels = levels_inner(v, beta, m)?;
    let e = *levels.get(level).ok_or_else(|| format!("level {level} out of range: {} levels", levels.len()))?;
    let state = solve_coefficients(&p, e)
        .and_then(|s| normalize(&s, &QuadratureSpec::default()))
        .map_err(|err| err.to_string())?;
    let mut out = vec![e];
    out.extend(state.coefficients.as_array());
    for s in sample_radial(&state, r_max, samples).map_err(|err| err.to_string())? {
        out.extend([s.r, s.u, s.w]);
    }
    Ok(out)
}

fn js<T>(r: Result<T, String>) -> Result<T, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// Energy window `[lo, hi]`.
#[wasm_bindgen]
pub fn window(v: f64, beta: f64) -> Result<Vec<f64>, JsError> {
    let (lo, hi) = js(params(v, beta, 0))?.window();
    Ok(vec![lo, hi])
}

#[wasm_bindgen]
pub fn spectrum(v: f64, beta: f64, m: i32) -> Result<Vec<f64>, JsError> {
    js(levels_inner(v, beta, m))
}

#[wasm_bindgen]
pub fn determinant_curve(v: f64, beta: f64, m: i32, points: usize) -> Result<Vec<f64>, JsError> {
    js(determinant_curve_inner(v, beta, m, points))
}

#[wasm_bindgen]
pub fn level_fan(v: f64, m: i32, beta_max: f64, steps: usize) -> Result<Vec<f64>, JsError> {
    js(level_fan_inner(v, m, beta_max, steps))
}

#[wasm_bindgen]
pub fn wavefunction(v: f64, beta: f64, m: i32, level: usize, r_max: f64, samples: usize) -> Result<Vec<f64>, JsError> {
    js(wavefunction_inner(v, beta, m, level, r_max, samples))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levels_match_cli_values() {
        let l = levels_inner(25.0, 5.0, 0).unwrap();
        assert_eq!(l.len(), 3);
        assert!((l[0] + 4.40).abs() < 5e-3);
    }

    #[test]
    fn curve_changes_sign_at_each_level() {
        let c = determinant_curve_inner(25.0, 5.0, 0, 800).unwrap();
        assert_eq!(c.len(), 1600);
        let crossings = c.chunks(2).collect::<Vec<_>>().windows(2).filter(|w| w[0][1] * w[1][1] < 0.0).count();
        assert_eq!(crossings, 3);
        assert!(determinant_curve_inner(25.0, 5.0, 0, 1).is_err());
    }

    #[test]
    fn fan_starts_at_zero_coupling() {
        let f = level_fan_inner(25.0, 0, 10.0, 11).unwrap();
        assert_eq!(f[0], 0.0);
        assert!((f[1] - 3.976).abs() < 1e-3);
        let last_beta = f[f.len() - 2];
        assert_eq!(last_beta, 10.0);
        assert!(level_fan_inner(25.0, 0, -1.0, 11).is_err());
    }

    #[test]
    fn wavefunction_layout() {
        let w = wavefunction_inner(100.0, 2.0, 1, 2, 3.0, 61).unwrap();
        assert_eq!(w.len(), 5 + 3 * 61);
        assert!((w[0] - 37.0825).abs() < 1e-3);
        assert_eq!(w[5], 0.0);
        assert_eq!(w[5 + 3 * 60], 3.0);
        let err = wavefunction_inner(100.0, 2.0, 1, 40, 3.0, 61).unwrap_err();
        assert!(err.contains("out of range"));
        assert!(wavefunction_inner(-1.0, 2.0, 1, 0, 3.0, 61).is_err());
    }
}
