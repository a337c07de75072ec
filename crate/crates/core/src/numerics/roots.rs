use super::NumericsError;

pub const DEFAULT_MAX_ITER: usize = 200;

/// An interval known to enclose a sign change of some function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl Bracket {
    /// Builds a bracket by evaluating `f` at both ends.
    pub fn from_fn<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64) -> Self {
        Bracket { lo, hi, f_lo: f(lo), f_hi: f(hi) }
    }

    fn check(&self) -> Result<(), NumericsError> {
        let ok = self.lo < self.hi
            && self.f_lo.is_finite()
            && self.f_hi.is_finite()
            && self.f_lo * self.f_hi < 0.0;
        if ok {
            Ok(())
        } else {
            Err(NumericsError::BracketInvalid {
                lo: self.lo,
                hi: self.hi,
                f_lo: self.f_lo,
                f_hi: self.f_hi,
            })
        }
    }
}

/// Brent's method: bisection safeguarded inverse quadratic / secant steps.
///
/// Returns a point whose enclosing sign-change interval is no wider than
/// `tol`. The bracket end values are taken from `bracket` and not
/// re-evaluated.
pub fn refine_root<F: FnMut(f64) -> f64>(
    mut f: F,
    bracket: Bracket,
    tol: f64,
) -> Result<f64, NumericsError> {
    bracket.check()?;
    if !(tol > 0.0) {
        return Err(NumericsError::InvalidArgument(format!("tolerance {tol}")));
    }

    let (mut a, mut b) = (bracket.lo, bracket.hi);
    let (mut fa, mut fb) = (bracket.f_lo, bracket.f_hi);
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;

    for _ in 0..DEFAULT_MAX_ITER {
        if fb * fc > 0.0 {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b);
    }
    Err(NumericsError::NoConvergence(DEFAULT_MAX_ITER))
}
