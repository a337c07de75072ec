//! Bound states of an electron in a two-dimensional circular quantum dot of
//! finite depth with Rashba spin-orbit coupling.
//!
//! Everything works in dimensionless units: lengths in units of the dot
//! radius and energies in units of `hbar^2 / (2 mu rho0^2)` (see [`units`]).
//! The radial wave functions are built from Bessel functions inside the
//! well and modified Bessel functions of complex argument outside it; the
//! bound-state energies are the zeros of the 4x4 matching determinant.
//!
//! ```
//! use qdot::{find_spectrum, DotParameters, ScanSpec};
//!
//! let params = DotParameters::new(25.0, 0.0, 0).unwrap();
//! let spectrum = find_spectrum(&params, &ScanSpec::default()).unwrap();
//! assert_eq!(spectrum.levels.len(), 3);
//! assert!((spectrum.levels[0] - 3.98).abs() < 5e-3);
//! ```

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod basis;
mod error;
pub mod numerics;
pub mod reference;
pub mod special;
pub mod spectrum;
pub mod units;
pub mod wavefunction;

pub use basis::{
    exterior_basis, exterior_wave_numbers, interior_basis, interior_wave_numbers, tail_envelope,
    DotParameters, ExteriorWaveNumbers, InteriorWaveNumbers, RadialBasisEval, TailEnvelope,
};
pub use error::{Error, Result};
pub use numerics::{ComplexValue, QuadratureSpec};
pub use spectrum::{
    find_spectrum, match_matrix, spectral_determinant, EnergySpectrum, MatchMatrix, ScanSpec,
};
pub use wavefunction::{
    continuity_mismatch, evaluate_radial, evaluate_spinor, normalize, ode_residual, solve_coefficients, BoundState,
    Coefficients, SpinorSample,
};
