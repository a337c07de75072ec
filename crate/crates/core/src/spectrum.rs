//! Matching matrix, spectral determinant and bound-state enumeration.
//!
//! Continuity of `u`, `u'`, `w`, `w'` at `r = 1` gives `M (c1, c2, d1, d2)^T
//! = 0` with
//!
//! ```text
//!      | f1(m)    -f2(m)    g1(m)    -g2(m)   |
//!  M = | f1'(m)   -f2'(m)   g1'(m)   -g2'(m)  |
//!      | g1(m+1)  -g2(m+1)  f1(m+1)   f2(m+1) |
//!      | g1'(m+1) -g2'(m+1) f1'(m+1)  f2'(m+1)|
//! ```
//!
//! The bound states are the zeros of `det M` inside the window. When
//! `k1- = 0` (that is `e = 0` with `beta != 0`) the columns of `c1` and
//! `d1` coincide and `det M` vanishes like `e^p`, `p = min(|m|, |m+1|)`,
//! without a bound state being there. The search therefore runs on
//! `det M / e^p`, assembled in the basis `J_n(k1± r) / k1±^p` where the
//! limit is regular.

use std::cell::RefCell;

use crate::basis::{exterior_basis, exterior_basis_scaled, interior_basis, interior_wave_numbers, DotParameters};
use crate::numerics::{det4, refine_root, Bracket, Matrix4};
use crate::special::{bessel_j, bessel_j_scaled};
use crate::{Error, Result};

/// Distance kept from both ends of the energy window.
pub const WINDOW_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchMatrix {
    pub entries: Matrix4,
    pub params: DotParameters,
    pub e: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanSpec {
    pub grid_points: usize,
    /// Width of the final bracket around each level.
    pub refine_tol: f64,
    /// Relative size of a non-crossing `|det|` minimum reported as suspect.
    pub suspect_threshold: f64,
    /// Restricts the search to `(lo, hi)` intersected with the window.
    /// Deep wells put most of the window out of reach of a uniform grid;
    /// this lets the low end be resolved on its own.
    pub range: Option<(f64, f64)>,
}

impl Default for ScanSpec {
    fn default() -> Self {
        ScanSpec { grid_points: 2000, refine_tol: 1e-10, suspect_threshold: 1e-6, range: None }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnergySpectrum {
    pub params: DotParameters,
    /// Bound-state energies, strictly increasing.
    pub levels: Vec<f64>,
    pub window: (f64, f64),
    /// Grid minima of `|det|` that come close to zero without a sign change.
    pub diagnostics: Vec<f64>,
}

fn check_window(params: &DotParameters, e: f64) -> Result<()> {
    let (lo, hi) = params.window();
    if lo < e && e < hi {
        Ok(())
    } else {
        Err(Error::WindowViolation { e, lo, hi })
    }
}

pub fn match_matrix(params: &DotParameters, e: f64) -> Result<MatchMatrix> {
    check_window(params, e)?;
    let DotParameters { v, beta, m } = *params;
    let i0 = interior_basis(m, e, beta, 1.0)?;
    let i1 = interior_basis(m + 1, e, beta, 1.0)?;
    let x0 = exterior_basis(m, e, v, beta, 1.0)?;
    let x1 = exterior_basis(m + 1, e, v, beta, 1.0)?;
    let entries = [
        [i0.f, -x0.f, i0.g, -x0.g],
        [i0.df, -x0.df, i0.dg, -x0.dg],
        [i1.g, -x1.g, i1.f, x1.f],
        [i1.dg, -x1.dg, i1.df, x1.df],
    ];
    Ok(MatchMatrix { entries, params: *params, e })
}

/// `det M(m, e, v, beta)`.
pub fn spectral_determinant(params: &DotParameters, e: f64) -> Result<f64> {
    Ok(det4(&match_matrix(params, e)?.entries))
}

/// Order of the spurious zero of `det M` at `e = 0`.
pub fn degeneracy_order(m: i32) -> u32 {
    m.unsigned_abs().min((m + 1).unsigned_abs())
}

/// `(J_n(k r) / k^p, d/dr of it)` at `r = 1`, for `|n| >= p`.
fn scaled_j_pair(n: i32, p: u32, k: f64) -> Result<(f64, f64)> {
    let big_n = n.unsigned_abs();
    let sign = if n < 0 && big_n % 2 == 1 { -1.0 } else { 1.0 };
    let value = bessel_j_scaled(big_n, p, k)?;
    // d/dr J_N(kr) = k J_{N-1}(kr) - (N/r) J_N(kr), or -k J_1 for N = 0
    let deriv = if big_n == 0 {
        -k * bessel_j(1, k)?
    } else if p == 0 {
        k * bessel_j(big_n as i32 - 1, k)? - big_n as f64 * value
    } else {
        bessel_j_scaled(big_n - 1, p - 1, k)? - big_n as f64 * value
    };
    Ok((sign * value, sign * deriv))
}

fn row_normalized_det(a: &Matrix4) -> f64 {
    let scale: f64 = a
        .iter()
        .map(|row| row.iter().map(|v| v * v).sum::<f64>().sqrt())
        .product();
    if scale == 0.0 {
        0.0
    } else {
        det4(a) / scale
    }
}

/// `det M / e^p`, divided by the product of the row norms of the
/// regularized matrix. Same sign changes as `det M` apart from the
/// spurious one at `e = 0`; finite and smooth there. The exterior columns
/// use [`exterior_basis_scaled`], a positive factor that keeps deep wells
/// from underflowing.
pub fn reduced_determinant(params: &DotParameters, e: f64) -> Result<f64> {
    check_window(params, e)?;
    let DotParameters { v, beta, m } = *params;
    let p = degeneracy_order(m);
    let k = interior_wave_numbers(e, beta)?;
    let (a0, da0) = scaled_j_pair(m, p, k.k_minus)?;
    let (a1, da1) = scaled_j_pair(m + 1, p, k.k_minus)?;
    let (b0, db0) = scaled_j_pair(m, p, k.k_plus)?;
    let (b1, db1) = scaled_j_pair(m + 1, p, k.k_plus)?;
    let x0 = exterior_basis_scaled(m, e, v, beta, 1.0)?;
    let x1 = exterior_basis_scaled(m + 1, e, v, beta, 1.0)?;
    // columns: k1- branch (c1 + d1), c2, k1+ branch (c1 - d1), d2
    let entries = [
        [a0, -x0.f, b0, -x0.g],
        [da0, -x0.df, db0, -x0.dg],
        [a1, -x1.g, -b1, x1.f],
        [da1, -x1.dg, -db1, x1.df],
    ];
    Ok(-0.5 * row_normalized_det(&entries))
}

/// The two spin-channel determinants at `beta = 0`, where `det M` factors
/// into `D_m(e) D_{m+1}(e)`. Each is divided by its row norms; exterior
/// entries are exponentially scaled as in [`reduced_determinant`].
pub fn channel_determinants(params: &DotParameters, e: f64) -> Result<(f64, f64)> {
    check_window(params, e)?;
    let DotParameters { v, beta, m } = *params;
    let i0 = interior_basis(m, e, beta, 1.0)?;
    let i1 = interior_basis(m + 1, e, beta, 1.0)?;
    let x0 = exterior_basis_scaled(m, e, v, beta, 1.0)?;
    let x1 = exterior_basis_scaled(m + 1, e, v, beta, 1.0)?;
    let det2 = |a: f64, b: f64, c: f64, d: f64| {
        let s = (a.hypot(b)) * (c.hypot(d));
        if s == 0.0 {
            0.0
        } else {
            (a * d - b * c) / s
        }
    };
    Ok((det2(i0.f, -x0.f, i0.df, -x0.df), det2(i1.f, x1.f, i1.df, x1.df)))
}

struct ScanResult {
    roots: Vec<f64>,
    suspects: Vec<f64>,
}

fn scan<F: Fn(f64) -> Result<f64>>(f: F, lo: f64, hi: f64, spec: &ScanSpec) -> Result<ScanResult> {
    let n = spec.grid_points;
    let grid: Vec<f64> = (0..n)
        .map(|i| if i + 1 == n { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
        .collect();
    let values = grid.iter().map(|&e| f(e)).collect::<Result<Vec<f64>>>()?;
    let max = values.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));

    let failure = RefCell::new(None);
    let g = |e: f64| match f(e) {
        Ok(v) => v,
        Err(err) => {
            failure.borrow_mut().get_or_insert(err);
            f64::NAN
        }
    };

    let mut roots = Vec::new();
    for i in 0..n - 1 {
        if values[i] == 0.0 {
            roots.push(grid[i]);
        } else if values[i] * values[i + 1] < 0.0 {
            let bracket = Bracket { lo: grid[i], hi: grid[i + 1], f_lo: values[i], f_hi: values[i + 1] };
            let root = refine_root(&g, bracket, spec.refine_tol)?;
            if let Some(err) = failure.borrow_mut().take() {
                return Err(err);
            }
            roots.push(root);
        }
    }
    if values[n - 1] == 0.0 {
        roots.push(grid[n - 1]);
    }

    let mut suspects = Vec::new();
    for i in 1..n - 1 {
        let (a, b, c) = (values[i - 1], values[i], values[i + 1]);
        let crossing = a * b <= 0.0 || b * c <= 0.0;
        if !crossing && b.abs() <= a.abs() && b.abs() <= c.abs() && b.abs() < spec.suspect_threshold * max {
            suspects.push(grid[i]);
        }
    }
    Ok(ScanResult { roots, suspects })
}

/// All bound-state energies of `params` (or those inside `spec.range`).
///
/// The window (less [`WINDOW_MARGIN`] at each end) is sampled on a uniform
/// grid; every sign change of the regularized determinant is refined with
/// Brent's method. At `beta = 0` the two spin channels are searched
/// separately so that levels shared by both cannot cancel into a
/// touching zero.
pub fn find_spectrum(params: &DotParameters, spec: &ScanSpec) -> Result<EnergySpectrum> {
    if spec.grid_points < 100 || !(spec.refine_tol > 0.0) || !(spec.suspect_threshold >= 0.0) {
        return Err(Error::InvalidParameters(format!("{spec:?}")));
    }
    let window = params.window();
    let (mut lo, mut hi) = (window.0 + WINDOW_MARGIN, window.1 - WINDOW_MARGIN);
    if let Some((a, b)) = spec.range {
        if !(a < b) {
            return Err(Error::InvalidParameters(format!("search range ({a}, {b})")));
        }
        lo = lo.max(a);
        hi = hi.min(b);
        if !(lo < hi) {
            return Ok(EnergySpectrum { params: *params, levels: Vec::new(), window, diagnostics: Vec::new() });
        }
    }

    let (mut levels, mut diagnostics) = if params.beta == 0.0 {
        let first = scan(|e| Ok(channel_determinants(params, e)?.0), lo, hi, spec)?;
        let second = scan(|e| Ok(channel_determinants(params, e)?.1), lo, hi, spec)?;
        (
            first.roots.into_iter().chain(second.roots).collect::<Vec<_>>(),
            first.suspects.into_iter().chain(second.suspects).collect::<Vec<_>>(),
        )
    } else {
        let found = scan(|e| reduced_determinant(params, e), lo, hi, spec)?;
        (found.roots, found.suspects)
    };

    levels.sort_by(f64::total_cmp);
    levels.dedup_by(|a, b| (*a - *b).abs() <= 10.0 * spec.refine_tol);
    diagnostics.sort_by(f64::total_cmp);
    Ok(EnergySpectrum { params: *params, levels, window, diagnostics })
}
