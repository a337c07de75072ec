//! Interior and exterior radial basis functions.
//!
//! Inside the well (`r < 1`) the radial solutions are real combinations of
//! `J_m(k1- r)` and `J_m(k1+ r)` with `k1± = sqrt(e + beta^2/4) ± beta/2`.
//! Outside, they are combinations of `K_m(k2± r)` with the conjugate pair
//! `k2± = sqrt(v - e - beta^2/4) ± i beta/2`. Since `K_m(conj z) =
//! conj K_m(z)`, the exterior pair is the real and imaginary part of a
//! single complex evaluation:
//!
//! ```text
//! f2 = (K_m(k2- r) + K_m(k2+ r)) / 2     = Re K_m(k2+ r)
//! g2 = i (K_m(k2- r) - K_m(k2+ r)) / 2   = Im K_m(k2+ r)
//! ```

use std::f64::consts::PI;

use crate::numerics::ComplexValue;
use crate::special::{bessel_j_orders, bessel_k_orders, bessel_k_scaled_orders};
use crate::{Error, Result};

/// A problem instance in dimensionless units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DotParameters {
    /// Well depth.
    pub v: f64,
    /// Rashba coupling strength; any sign.
    pub beta: f64,
    /// Angular momentum number of the spin-up component.
    pub m: i32,
}

impl DotParameters {
    pub fn new(v: f64, beta: f64, m: i32) -> Result<Self> {
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::InvalidParameters(format!("well depth v = {v} must be positive")));
        }
        if !beta.is_finite() {
            return Err(Error::InvalidParameters(format!("beta = {beta}")));
        }
        Ok(DotParameters { v, beta, m })
    }

    /// The open energy interval `(-beta^2/4, v - beta^2/4)` holding all
    /// bound states.
    pub fn window(&self) -> (f64, f64) {
        let shift = 0.25 * self.beta * self.beta;
        (-shift, self.v - shift)
    }

    /// The partner problem `m -> -(m+1)`, `beta -> -beta`.
    pub fn mirrored(&self) -> Self {
        DotParameters { v: self.v, beta: -self.beta, m: -(self.m + 1) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InteriorWaveNumbers {
    pub k_plus: f64,
    pub k_minus: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExteriorWaveNumbers {
    pub k_plus: ComplexValue,
    pub k_minus: ComplexValue,
}

/// Values and radial derivatives of a basis pair `(f, g)` at one radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialBasisEval {
    pub f: f64,
    pub g: f64,
    pub df: f64,
    pub dg: f64,
    pub d2f: f64,
    pub d2g: f64,
}

/// Large-`r` form of the exterior basis:
/// `f2 ~ A e^{-k r} / sqrt(r) cos((beta r + gamma)/2)` and
/// `g2 ~ -A e^{-k r} / sqrt(r) sin((beta r + gamma)/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailEnvelope {
    pub amplitude: f64,
    pub decay_rate: f64,
    pub phase_rate: f64,
    pub gamma: f64,
}

impl TailEnvelope {
    /// Predicted `(f2, g2)` at radius `r`.
    pub fn at(&self, r: f64) -> (f64, f64) {
        let env = self.amplitude * (-self.decay_rate * r).exp() / r.sqrt();
        let phase = self.phase_rate * r + 0.5 * self.gamma;
        (env * phase.cos(), -env * phase.sin())
    }
}

pub fn interior_wave_numbers(e: f64, beta: f64) -> Result<InteriorWaveNumbers> {
    let bottom = -0.25 * beta * beta;
    if !(e > bottom) {
        return Err(Error::BelowWindow { e, bottom });
    }
    let s = (e + 0.25 * beta * beta).sqrt();
    Ok(InteriorWaveNumbers { k_plus: s + 0.5 * beta, k_minus: s - 0.5 * beta })
}

pub fn exterior_wave_numbers(e: f64, v: f64, beta: f64) -> Result<ExteriorWaveNumbers> {
    let top = v - 0.25 * beta * beta;
    if !(e < top) {
        return Err(Error::AboveWindow { e, top });
    }
    let k_plus = ComplexValue::new((top - e).sqrt(), 0.5 * beta);
    Ok(ExteriorWaveNumbers { k_plus, k_minus: k_plus.conj() })
}

/// `(J_n(kr), d/dr, d²/dr²)` through the ladder identities.
fn j_ladder(n: i32, k: f64, r: f64) -> Result<[f64; 3]> {
    let j = bessel_j_orders(n - 2, n + 2, k * r)?;
    Ok([j[2], 0.5 * k * (j[1] - j[3]), 0.25 * k * k * (j[0] - 2.0 * j[2] + j[4])])
}

fn k_ladder(n: i32, k: ComplexValue, r: f64, scaled: bool) -> Result<[ComplexValue; 3]> {
    let kk = if scaled { bessel_k_scaled_orders(n - 2, n + 2, k * r)? } else { bessel_k_orders(n - 2, n + 2, k * r)? };
    Ok([kk[2], -0.5 * k * (kk[1] + kk[3]), 0.25 * k * k * (kk[0] + 2.0 * kk[2] + kk[4])])
}

/// `f1 = (J_m(k1- r) + J_m(k1+ r)) / 2`, `g1 = (J_m(k1- r) - J_m(k1+ r)) / 2`
/// and their first two radial derivatives. Accepts `r = 0`.
pub fn interior_basis(m: i32, e: f64, beta: f64, r: f64) -> Result<RadialBasisEval> {
    if !(r >= 0.0) {
        return Err(Error::InvalidParameters(format!("radius {r}")));
    }
    let k = interior_wave_numbers(e, beta)?;
    let a = j_ladder(m, k.k_minus, r)?;
    let b = j_ladder(m, k.k_plus, r)?;
    Ok(RadialBasisEval {
        f: 0.5 * (a[0] + b[0]),
        g: 0.5 * (a[0] - b[0]),
        df: 0.5 * (a[1] + b[1]),
        dg: 0.5 * (a[1] - b[1]),
        d2f: 0.5 * (a[2] + b[2]),
        d2g: 0.5 * (a[2] - b[2]),
    })
}

/// `f2 = Re K_m(k2+ r)`, `g2 = Im K_m(k2+ r)` and their radial derivatives.
pub fn exterior_basis(m: i32, e: f64, v: f64, beta: f64, r: f64) -> Result<RadialBasisEval> {
    exterior(m, e, v, beta, r, false)
}

/// [`exterior_basis`] with every entry multiplied by `e^{decay_rate r}`.
/// Stays representable in deep wells where `K` underflows.
pub fn exterior_basis_scaled(m: i32, e: f64, v: f64, beta: f64, r: f64) -> Result<RadialBasisEval> {
    exterior(m, e, v, beta, r, true)
}

fn exterior(m: i32, e: f64, v: f64, beta: f64, r: f64, scaled: bool) -> Result<RadialBasisEval> {
    if !(r > 0.0) {
        return Err(Error::InvalidParameters(format!("radius {r}")));
    }
    let k = exterior_wave_numbers(e, v, beta)?;
    let [val, d1, d2] = k_ladder(m, k.k_plus, r, scaled)?;
    Ok(RadialBasisEval { f: val.re, g: val.im, df: d1.re, dg: d1.im, d2f: d2.re, d2g: d2.im })
}

pub fn tail_envelope(e: f64, v: f64, beta: f64) -> Result<TailEnvelope> {
    let k = exterior_wave_numbers(e, v, beta)?;
    let decay_rate = k.k_plus.re;
    Ok(TailEnvelope {
        amplitude: (0.5 * PI).sqrt() * (v - e).powf(-0.25),
        decay_rate,
        phase_rate: 0.5 * beta,
        gamma: (0.5 * beta).atan2(decay_rate),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{bessel_j, bessel_k_complex};

    #[test]
    fn wave_number_examples() {
        let k = interior_wave_numbers(4.0, 0.0).unwrap();
        assert_eq!((k.k_plus, k.k_minus), (2.0, 2.0));
        let k = interior_wave_numbers(0.0, 2.0).unwrap();
        assert_eq!((k.k_plus, k.k_minus), (2.0, 0.0));
        let k = interior_wave_numbers(-23.25, 10.0).unwrap();
        assert!((k.k_minus - (1.75f64.sqrt() - 5.0)).abs() < 1e-14);
        assert!(k.k_minus < 0.0);
        assert!((k.k_plus * k.k_minus + 23.25).abs() < 1e-13 * 23.25);
        assert!(matches!(interior_wave_numbers(-25.0, 10.0), Err(Error::BelowWindow { .. })));
    }

    #[test]
    fn exterior_wave_number_examples() {
        let k = exterior_wave_numbers(4.0, 25.0, 0.0).unwrap();
        assert_eq!(k.k_plus, ComplexValue::new(21f64.sqrt(), 0.0));
        assert_eq!(k.k_minus, k.k_plus);
        let k = exterior_wave_numbers(0.0, 25.0, 6.0).unwrap();
        assert_eq!(k.k_plus, ComplexValue::new(4.0, 3.0));
        assert_eq!(k.k_minus, ComplexValue::new(4.0, -3.0));
        assert!(matches!(exterior_wave_numbers(0.0, 25.0, 10.0), Err(Error::AboveWindow { .. })));

        let p = DotParameters::new(25.0, 10.0, 0).unwrap();
        let (lo, hi) = p.window();
        assert_eq!((lo, hi), (-25.0, 0.0));
        for e in [-23.25, -18.31, -9.67] {
            assert!(lo < e && e < hi);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(DotParameters::new(0.0, 1.0, 0).is_err());
        assert!(DotParameters::new(-3.0, 1.0, 0).is_err());
        assert!(DotParameters::new(10.0, f64::NAN, 0).is_err());
    }

    #[test]
    fn beta_zero_collapses() {
        for m in [-2, 0, 1, 3] {
            let b = interior_basis(m, 7.0, 0.0, 0.6).unwrap();
            assert_eq!((b.g, b.dg, b.d2g), (0.0, 0.0, 0.0));
            assert_eq!(b.f, bessel_j(m, 7f64.sqrt() * 0.6).unwrap());
            let x = exterior_basis(m, 7.0, 25.0, 0.0, 1.7).unwrap();
            assert_eq!((x.g, x.dg, x.d2g), (0.0, 0.0, 0.0));
            assert_eq!(x.f, bessel_k_complex(m, ComplexValue::new(18f64.sqrt() * 1.7, 0.0)).unwrap().re);
        }
    }

    #[test]
    fn origin_limit() {
        let b = interior_basis(0, 5.0, 1.3, 0.0).unwrap();
        assert_eq!((b.f, b.g), (1.0, 0.0));
        let b = interior_basis(0, 5.0, 1.3, 1e-9).unwrap();
        assert!((b.f - 1.0).abs() < 1e-15 && b.g.abs() < 1e-15);
    }

    #[test]
    fn envelope_examples() {
        let t = tail_envelope(3.0, 25.0, 0.0).unwrap();
        assert_eq!(t.gamma, 0.0);
        let t = tail_envelope(0.0, 25.0, 6.0).unwrap();
        assert!((t.gamma.cos() - 0.8).abs() < 1e-15);
        assert!((t.gamma.sin() - 0.6).abs() < 1e-15);
        assert_eq!(t.decay_rate, 4.0);
    }

    #[test]
    fn exterior_matches_envelope_far_out() {
        let (m, v, beta, e) = (0, 100.0, 2.0, 2.97);
        let t = tail_envelope(e, v, beta).unwrap();
        let b = exterior_basis(m, e, v, beta, 30.0).unwrap();
        let (f, g) = t.at(30.0);
        assert!((b.f / f - 1.0).abs() < 1e-3);
        assert!((b.g / g - 1.0).abs() < 1e-3);

        let (m, v, beta, e) = (0, 25.0, 1.0, 3.49);
        let t = tail_envelope(e, v, beta).unwrap();
        let b = exterior_basis(m, e, v, beta, 2.0).unwrap();
        let (f, g) = t.at(2.0);
        assert!((b.f / f - 1.0).abs() < 0.05);
        assert!((b.g / g - 1.0).abs() < 0.05);
    }

    #[test]
    fn exterior_decays() {
        let (v, beta, e) = (49.0, 7.0, 9.55);
        let rate = tail_envelope(e, v, beta).unwrap().decay_rate;
        for m in [0, 1, 2] {
            let near = exterior_basis(m, e, v, beta, 2.0).unwrap();
            let far = exterior_basis(m, e, v, beta, 20.0).unwrap();
            let bound = (-18.0 * rate).exp() * 10.0;
            let size = |b: &RadialBasisEval| b.f.abs().max(b.g.abs());
            assert!(size(&far) <= bound * size(&near));
        }
    }

    #[test]
    fn small_beta_is_continuous() {
        for m in [0, 1, -2] {
            let a = interior_basis(m, 12.0, 0.0, 0.4).unwrap();
            let b = interior_basis(m, 12.0, 1e-8, 0.4).unwrap();
            assert!((a.f - b.f).abs() < 1e-6 && (a.g - b.g).abs() < 1e-6 && (a.df - b.df).abs() < 1e-6);
            let a = exterior_basis(m, 12.0, 30.0, 0.0, 1.4).unwrap();
            let b = exterior_basis(m, 12.0, 30.0, 1e-8, 1.4).unwrap();
            assert!((a.f - b.f).abs() < 1e-6 && (a.g - b.g).abs() < 1e-6 && (a.df - b.df).abs() < 1e-6);
        }
    }

    #[test]
    fn regular_at_origin() {
        for m in [1, 2] {
            let a = interior_basis(m, 9.0, 2.0, 1e-6).unwrap();
            let b = interior_basis(m, 9.0, 2.0, 1e-3).unwrap();
            let ratio = a.f / b.f;
            let expected = 1e-3f64.powi(m);
            assert!((ratio / expected - 1.0).abs() < 0.1);
        }
    }
}
