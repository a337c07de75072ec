use thiserror::Error;

use crate::numerics::NumericsError;
use crate::special::SpecialError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("energy {e} is not above the window bottom {bottom}")]
    BelowWindow { e: f64, bottom: f64 },
    #[error("energy {e} is not below the window top {top}")]
    AboveWindow { e: f64, top: f64 },
    #[error("energy {e} lies outside the bound-state window ({lo}, {hi})")]
    WindowViolation { e: f64, lo: f64, hi: f64 },
    #[error("normalization integral {0:e} is too small; state is degenerate")]
    DegenerateState(f64),
    #[error("state has not been normalized")]
    NotNormalized,
    #[error("radius {0} is a boundary point of the radial equations")]
    BoundaryPoint(f64),
}
