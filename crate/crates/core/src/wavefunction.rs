//! Coefficients, normalization and evaluation of bound-state spinors
//!
//! ```text
//! Psi_m(r, phi) = u(r) e^{i m phi} (1, 0)^T + w(r) e^{i (m+1) phi} (0, 1)^T
//! ```
//!
//! with `u = c1 f1(m) + d1 g1(m)`, `w = c1 g1(m+1) + d1 f1(m+1)` inside the
//! well and `u = c2 f2(m) + d2 g2(m)`, `w = c2 g2(m+1) - d2 f2(m+1)` outside.

use std::f64::consts::PI;

use crate::basis::{exterior_basis, interior_basis, tail_envelope, DotParameters};
use crate::numerics::{
    integrate_panel, integrate_tail_oscillatory, nullspace_4x4, ComplexValue, QuadratureSpec,
};
use crate::spectrum::match_matrix;
use crate::{Error, Result};

/// Relative pivot threshold for accepting an energy as a level.
pub const SINGULARITY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coefficients {
    pub c1: f64,
    pub c2: f64,
    pub d1: f64,
    pub d2: f64,
}

impl Coefficients {
    pub fn as_array(&self) -> [f64; 4] {
        [self.c1, self.c2, self.d1, self.d2]
    }

    fn from_array(a: [f64; 4]) -> Self {
        Coefficients { c1: a[0], c2: a[1], d1: a[2], d2: a[3] }
    }

    pub fn scaled(&self, s: f64) -> Self {
        Coefficients::from_array(self.as_array().map(|c| c * s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub params: DotParameters,
    pub e: f64,
    pub coefficients: Coefficients,
    pub normalized: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorSample {
    pub r: f64,
    pub u: f64,
    pub w: f64,
}

/// `u, w` and their first two derivatives at one radius.
#[derive(Debug, Clone, Copy)]
struct Radial {
    u: [f64; 3],
    w: [f64; 3],
}

/// Solves `M x = 0` for `x = (c1, c2, d1, d2)`.
///
/// The columns are equilibrated before elimination; the returned vector
/// has unit Euclidean norm and its largest component is positive.
pub fn solve_coefficients(params: &DotParameters, e: f64) -> Result<BoundState> {
    let mm = match_matrix(params, e)?.entries;
    let mut norms = [0.0f64; 4];
    for (j, n) in norms.iter_mut().enumerate() {
        *n = (0..4).map(|i| mm[i][j] * mm[i][j]).sum::<f64>().sqrt();
        if *n == 0.0 {
            *n = 1.0;
        }
    }
    let mut scaled = mm;
    for row in scaled.iter_mut() {
        for j in 0..4 {
            row[j] /= norms[j];
        }
    }
    let y = nullspace_4x4(&scaled, SINGULARITY_TOL)?;
    let mut x = [0.0f64; 4];
    for j in 0..4 {
        x[j] = y[j] / norms[j];
    }
    let len = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    let lead = (0..4).fold(0, |best, i| if x[i].abs() > x[best].abs() { i } else { best });
    let sign = if x[lead] < 0.0 { -1.0 } else { 1.0 };
    Ok(BoundState {
        params: *params,
        e,
        coefficients: Coefficients::from_array(x.map(|v| sign * v / len)),
        normalized: false,
    })
}

fn radial(state: &BoundState, r: f64) -> Result<Radial> {
    radial_side(state, r, r < 1.0)
}

fn radial_side(state: &BoundState, r: f64, interior: bool) -> Result<Radial> {
    let DotParameters { v, beta, m } = state.params;
    let Coefficients { c1, c2, d1, d2 } = state.coefficients;
    let e = state.e;
    if interior {
        let a = interior_basis(m, e, beta, r)?;
        let b = interior_basis(m + 1, e, beta, r)?;
        Ok(Radial {
            u: [c1 * a.f + d1 * a.g, c1 * a.df + d1 * a.dg, c1 * a.d2f + d1 * a.d2g],
            w: [c1 * b.g + d1 * b.f, c1 * b.dg + d1 * b.df, c1 * b.d2g + d1 * b.d2f],
        })
    } else {
        let a = exterior_basis(m, e, v, beta, r)?;
        let b = exterior_basis(m + 1, e, v, beta, r)?;
        Ok(Radial {
            u: [c2 * a.f + d2 * a.g, c2 * a.df + d2 * a.dg, c2 * a.d2f + d2 * a.d2g],
            w: [c2 * b.g - d2 * b.f, c2 * b.dg - d2 * b.df, c2 * b.d2g - d2 * b.d2f],
        })
    }
}

/// `u(r)` and `w(r)` without the normalization check.
pub fn radial_values(state: &BoundState, r: f64) -> Result<(f64, f64)> {
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::InvalidParameters(format!("radius {r}")));
    }
    let x = radial(state, r)?;
    Ok((x.u[0], x.w[0]))
}

/// `u'(r)` and `w'(r)`; one-sided at `r = 1` (exterior side).
pub fn radial_derivatives(state: &BoundState, r: f64) -> Result<(f64, f64)> {
    let x = radial(state, r)?;
    Ok((x.u[1], x.w[1]))
}

/// Jumps of `u, u', w, w'` across `r = 1`, each divided by the larger of
/// `max(|u|, |w|)` and `max(|u'|, |w'|)` on the exterior side.
pub fn continuity_mismatch(state: &BoundState) -> Result<[f64; 4]> {
    let a = radial_side(state, 1.0, true)?;
    let b = radial_side(state, 1.0, false)?;
    let value_scale = b.u[0].abs().max(b.w[0].abs()).max(f64::MIN_POSITIVE);
    let slope_scale = b.u[1].abs().max(b.w[1].abs()).max(f64::MIN_POSITIVE);
    Ok([
        (a.u[0] - b.u[0]).abs() / value_scale,
        (a.u[1] - b.u[1]).abs() / slope_scale,
        (a.w[0] - b.w[0]).abs() / value_scale,
        (a.w[1] - b.w[1]).abs() / slope_scale,
    ])
}

/// `int_a^inf f` split into the well `[0, 1]` and the exterior tail.
fn integrate_radial<F: Fn(f64) -> f64>(
    f: F,
    decay_rate: f64,
    beta: f64,
    spec: &QuadratureSpec,
) -> Result<(f64, f64)> {
    let inner = integrate_panel(&f, 0.0, 1.0, spec)?;
    let period = if beta != 0.0 { Some(2.0 * PI / beta.abs()) } else { None };
    let outer = integrate_tail_oscillatory(&f, 1.0, decay_rate, period, spec)?;
    Ok((inner, outer))
}

/// The two parts of `int (u^2 + w^2) r dr`: inside and outside the well.
pub fn density_integrals(state: &BoundState, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    let env = tail_envelope(state.e, state.params.v, state.params.beta)?;
    let density = |r: f64| {
        radial_values(state, r).map(|(u, w)| (u * u + w * w) * r).unwrap_or(f64::NAN)
    };
    integrate_radial(density, 2.0 * env.decay_rate, state.params.beta, spec)
}

/// Rescales the coefficients so that `int_0^inf (u^2 + w^2) r dr = 1`.
pub fn normalize(state: &BoundState, spec: &QuadratureSpec) -> Result<BoundState> {
    let (inner, outer) = density_integrals(state, spec)?;
    let total = inner + outer;
    if !(total >= 1e-300) || !total.is_finite() {
        return Err(Error::DegenerateState(total));
    }
    Ok(BoundState {
        coefficients: state.coefficients.scaled(1.0 / total.sqrt()),
        normalized: true,
        ..*state
    })
}

/// `int_0^inf (u_a u_b + w_a w_b) r dr` for two states of the same problem.
pub fn overlap(a: &BoundState, b: &BoundState, spec: &QuadratureSpec) -> Result<f64> {
    let rate = tail_envelope(a.e, a.params.v, a.params.beta)?.decay_rate
        + tail_envelope(b.e, b.params.v, b.params.beta)?.decay_rate;
    let f = |r: f64| match (radial_values(a, r), radial_values(b, r)) {
        (Ok((ua, wa)), Ok((ub, wb))) => (ua * ub + wa * wb) * r,
        _ => f64::NAN,
    };
    let (inner, outer) = integrate_radial(f, rate, a.params.beta, spec)?;
    Ok(inner + outer)
}

fn require_normalized(state: &BoundState) -> Result<()> {
    if state.normalized {
        Ok(())
    } else {
        Err(Error::NotNormalized)
    }
}

/// `(r, u(r), w(r))`; the exterior formulas apply from `r = 1` on.
pub fn evaluate_radial(state: &BoundState, r: f64) -> Result<SpinorSample> {
    require_normalized(state)?;
    let (u, w) = radial_values(state, r)?;
    Ok(SpinorSample { r, u, w })
}

/// `samples` evenly spaced points on `[0, r_max]`, both ends included.
pub fn sample_radial(state: &BoundState, r_max: f64, samples: usize) -> Result<Vec<SpinorSample>> {
    if samples < 2 || !(r_max > 0.0) {
        return Err(Error::InvalidParameters(format!("{samples} samples on [0, {r_max}]")));
    }
    (0..samples)
        .map(|i| {
            let r = if i + 1 == samples { r_max } else { r_max * i as f64 / (samples - 1) as f64 };
            evaluate_radial(state, r)
        })
        .collect()
}

/// Both spinor components `u e^{i m phi}` and `w e^{i (m+1) phi}`.
pub fn evaluate_spinor(state: &BoundState, r: f64, phi: f64) -> Result<[ComplexValue; 2]> {
    let s = evaluate_radial(state, r)?;
    let m = state.params.m as f64;
    Ok([
        ComplexValue::from_polar(1.0, m * phi) * s.u,
        ComplexValue::from_polar(1.0, (m + 1.0) * phi) * s.w,
    ])
}

/// Residuals of the two coupled radial equations at `r`, each divided by
/// the largest of its terms.
///
/// With `eps = e - V(r)`:
/// `r^2 u'' + r u' + (eps r^2 - m^2) u - beta r^2 (w' + (m+1) w / r)` and
/// `r^2 w'' + r w' + (eps r^2 - (m+1)^2) w + beta r^2 (u' - m u / r)`.
pub fn ode_residual(state: &BoundState, r: f64) -> Result<(f64, f64)> {
    require_normalized(state)?;
    if !(r > 0.0) || r == 1.0 || !r.is_finite() {
        return Err(Error::BoundaryPoint(r));
    }
    let DotParameters { v, beta, m } = state.params;
    let eps = if r < 1.0 { state.e } else { state.e - v };
    let Radial { u, w } = radial(state, r)?;
    let (m0, m1) = (m as f64, m as f64 + 1.0);

    let scaled_sum = |terms: [f64; 6]| {
        let scale = terms.iter().fold(0.0f64, |a, t| a.max(t.abs()));
        let sum: f64 = terms.iter().sum();
        if scale == 0.0 {
            0.0
        } else {
            sum / scale
        }
    };
    let ru = scaled_sum([
        r * r * u[2],
        r * u[1],
        eps * r * r * u[0],
        -m0 * m0 * u[0],
        -beta * r * r * w[1],
        -beta * r * m1 * w[0],
    ]);
    let rw = scaled_sum([
        r * r * w[2],
        r * w[1],
        eps * r * r * w[0],
        -m1 * m1 * w[0],
        beta * r * r * u[1],
        -beta * r * m0 * u[0],
    ]);
    Ok((ru, rw))
}
