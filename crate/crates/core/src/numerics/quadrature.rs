use std::f64::consts::PI;

use super::NumericsError;

const MAX_DEPTH: usize = 40;
const MAX_TAIL_PANELS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Gauss-Legendre points per panel.
    pub panel_order: usize,
    pub rel_tol: f64,
    pub abs_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { panel_order: 16, rel_tol: 1e-12, abs_tol: 1e-14 }
    }
}

impl QuadratureSpec {
    fn validate(&self) -> Result<(), NumericsError> {
        if self.panel_order < 2 || !(self.rel_tol > 0.0) || !(self.abs_tol > 0.0) {
            return Err(NumericsError::InvalidArgument(format!("{self:?}")));
        }
        Ok(())
    }
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            // n == 1 leaves p1 = x, p0 = 1
            dp = nf * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

struct Rule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl Rule {
    fn new(n: usize) -> Self {
        let (nodes, weights) = gauss_legendre(n);
        Rule { nodes, weights }
    }

    fn apply<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        half * self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(mid + half * x))
            .sum::<f64>()
    }
}

fn adapt<F: Fn(f64) -> f64>(
    rule: &Rule,
    f: &F,
    a: f64,
    b: f64,
    whole: f64,
    spec: &QuadratureSpec,
    depth: usize,
) -> Result<f64, NumericsError> {
    let mid = 0.5 * (a + b);
    let left = rule.apply(f, a, mid);
    let right = rule.apply(f, mid, b);
    let sum = left + right;
    if !sum.is_finite() {
        return Err(NumericsError::InvalidArgument(format!("non-finite integrand on [{a}, {b}]")));
    }
    if (sum - whole).abs() <= (spec.rel_tol * sum.abs()).max(spec.abs_tol) {
        return Ok(sum);
    }
    if depth >= MAX_DEPTH {
        return Err(NumericsError::NoConvergence(depth));
    }
    Ok(adapt(rule, f, a, mid, left, spec, depth + 1)? + adapt(rule, f, mid, b, right, spec, depth + 1)?)
}

/// Adaptive Gauss-Legendre integration of `f` over `[a, b]`.
///
/// Each panel is bisected until the two halves agree with the whole to
/// `max(rel_tol * |I|, abs_tol)`.
pub fn integrate_panel<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<f64, NumericsError> {
    spec.validate()?;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(NumericsError::InvalidArgument(format!("interval [{a}, {b}]")));
    }
    let rule = Rule::new(spec.panel_order);
    let whole = rule.apply(&f, a, b);
    adapt(&rule, &f, a, b, whole, spec, 0)
}

/// Integral of `f` over `[a, inf)` for an integrand decaying at least as
/// fast as `exp(-decay_rate * r)`.
pub fn integrate_tail<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    decay_rate: f64,
    spec: &QuadratureSpec,
) -> Result<f64, NumericsError> {
    integrate_tail_oscillatory(f, a, decay_rate, None, spec)
}

/// Like [`integrate_tail`], with sub-panels no longer than half of
/// `period` when the integrand oscillates.
///
/// Panels of width `5 / decay_rate` are summed until one contributes less
/// than `abs_tol`; two consecutive such panels are required so an
/// accidental cancellation inside one panel cannot stop the sum early.
pub fn integrate_tail_oscillatory<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    decay_rate: f64,
    period: Option<f64>,
    spec: &QuadratureSpec,
) -> Result<f64, NumericsError> {
    spec.validate()?;
    if !(decay_rate > 0.0) || !decay_rate.is_finite() || !a.is_finite() {
        return Err(NumericsError::InvalidArgument(format!("decay rate {decay_rate} from {a}")));
    }
    let width = 5.0 / decay_rate;
    let pieces = match period {
        Some(p) if p > 0.0 && p.is_finite() => (2.0 * width / p).ceil().max(1.0) as usize,
        _ => 1,
    };
    let step = width / pieces as f64;

    let mut total = 0.0;
    let mut quiet = 0;
    for panel in 0..MAX_TAIL_PANELS {
        let start = a + panel as f64 * width;
        let mut contribution = 0.0;
        for k in 0..pieces {
            let lo = start + k as f64 * step;
            contribution += integrate_panel(&f, lo, lo + step, spec)?;
        }
        total += contribution;
        if contribution.abs() < spec.abs_tol {
            quiet += 1;
            if quiet == 2 {
                return Ok(total);
            }
        } else {
            quiet = 0;
        }
    }
    Err(NumericsError::DecayViolation { panels: MAX_TAIL_PANELS, abs_tol: spec.abs_tol })
}
