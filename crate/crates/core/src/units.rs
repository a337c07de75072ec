//! Conversion between physical inputs and the dimensionless problem.
//!
//! With `mu` the effective mass and `rho0` the dot radius,
//! `e = (2 mu / hbar^2) rho0^2 E`, `v = (2 mu / hbar^2) rho0^2 V0` and
//! `beta = (2 mu / hbar) rho0 beta_R`. The Rashba input is the coupling
//! constant `alpha_R = hbar beta_R` in meV nm.

use crate::{Error, Result};

/// `hbar^2 / (2 m_e)` in meV nm^2.
pub const HBAR2_OVER_2ME: f64 = 38.0998;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalInputs {
    /// In units of the free-electron mass.
    pub effective_mass: f64,
    /// nm
    pub dot_radius: f64,
    /// meV
    pub well_depth: f64,
    /// meV nm, any sign
    pub rashba_coefficient: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dimensionless {
    pub v: f64,
    pub beta: f64,
    /// `hbar^2 / (2 mu rho0^2)` in meV: multiply a dimensionless energy by
    /// this to get meV.
    pub energy_scale: f64,
}

impl Dimensionless {
    pub fn to_mev(&self, e: f64) -> f64 {
        e * self.energy_scale
    }

    pub fn from_mev(&self, energy: f64) -> f64 {
        energy / self.energy_scale
    }
}

pub fn to_dimensionless(p: &PhysicalInputs) -> Result<Dimensionless> {
    let positive = |x: f64| x > 0.0 && x.is_finite();
    if !positive(p.effective_mass) || !positive(p.dot_radius) || !positive(p.well_depth) {
        return Err(Error::InvalidParameters(format!("{p:?}")));
    }
    if !p.rashba_coefficient.is_finite() {
        return Err(Error::InvalidParameters(format!("{p:?}")));
    }
    // hbar^2 / (2 mu)
    let kinetic = HBAR2_OVER_2ME / p.effective_mass;
    let energy_scale = kinetic / (p.dot_radius * p.dot_radius);
    Ok(Dimensionless {
        v: p.well_depth / energy_scale,
        beta: p.rashba_coefficient * p.dot_radius / kinetic,
        energy_scale,
    })
}
