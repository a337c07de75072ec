//! Problem-agnostic numerical kernels: bracketed root refinement, a 4x4
//! nullspace solver and Gauss-Legendre quadrature on finite panels and on
//! exponentially decaying tails.

mod linalg;
mod quadrature;
mod roots;

use thiserror::Error;

pub use linalg::{det4, nullspace_4x4, Matrix4};
pub use quadrature::{
    gauss_legendre, integrate_panel, integrate_tail, integrate_tail_oscillatory, QuadratureSpec,
};
pub use roots::{refine_root, Bracket, DEFAULT_MAX_ITER};

/// Complex scalar used for the exterior wave numbers and `K_n(z)`.
pub type ComplexValue = num_complex::Complex64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("bracket [{lo}, {hi}] does not enclose a sign change (f_lo = {f_lo}, f_hi = {f_hi})")]
    BracketInvalid { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    #[error("no convergence after {0} iterations")]
    NoConvergence(usize),
    #[error("matrix is not singular: last pivot ratio {0:e}")]
    NotSingular(f64),
    #[error("matrix has a kernel of dimension >= 2 (degenerate level)")]
    RankDeficiency2,
    #[error("tail integrand did not decay below {abs_tol:e} within {panels} panels")]
    DecayViolation { panels: usize, abs_tol: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
