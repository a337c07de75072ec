//! Integer-order Bessel functions `J_n(x)` of real argument and modified
//! Bessel functions `K_n(z)` of complex argument in the right half-plane.
//!
//! `J_n` uses the power series for `|x| <= 2` and Miller's backward
//! recurrence normalized by `J_0 + 2 sum J_2k = 1` above that. `K_0` and
//! `K_1` come from the logarithmic series for `|z| <= 2` and from Steed's
//! continued fraction (Temme's CF2) otherwise; higher orders follow by
//! forward recurrence, which is stable for `K`.
//!
//! Radial derivatives use the ladder identities
//! `d/dr J_n(kr) = k (J_{n-1} - J_{n+1}) / 2` and
//! `d/dr K_n(kr) = -k (K_{n-1} + K_{n+1}) / 2`.

use std::f64::consts::PI;

use thiserror::Error;

use crate::numerics::ComplexValue;

/// Largest supported `|n|`.
pub const ORDER_CAP: u32 = 64;
/// Largest `|x|` for `J_n` and `|z|` for `K_n`.
pub const ARGUMENT_CAP: f64 = 200.0;
/// Largest `|z|` accepted by `K_n`; beyond [`ARGUMENT_CAP`] the continued
/// fraction converges even faster, and the tail quadrature of weakly bound
/// states needs it.
pub const K_ARGUMENT_CAP: f64 = 1.0e7;

const SERIES_LIMIT: f64 = 2.0;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialError {
    #[error("order {0} exceeds the cap {ORDER_CAP}")]
    OrderCapExceeded(i64),
    #[error("argument {0} is outside the validated range")]
    ArgumentOutOfRange(f64),
    #[error("K_n(z) needs Re z > 0, got {0}")]
    DomainError(ComplexValue),
    #[error("K_n(z) overflowed for z = {0}")]
    Overflow(ComplexValue),
}

fn check_order(n: i64) -> Result<u32, SpecialError> {
    let a = n.unsigned_abs();
    if a > ORDER_CAP as u64 {
        Err(SpecialError::OrderCapExceeded(n))
    } else {
        Ok(a as u32)
    }
}

fn parity(n: i64) -> f64 {
    if n.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `J_n(x)/x^p` by the power series; valid for `n >= p`.
fn j_series_scaled(n: u32, p: u32, x: f64) -> f64 {
    let mut lead = 1.0;
    for k in 1..=n {
        lead /= 2.0 * k as f64;
    }
    lead *= x.powi((n - p) as i32);
    let q = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        term *= q / (k as f64 * (n + k) as f64);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

/// `J_0(x) ..= J_nmax(x)` for `x >= 0`.
fn j_table(nmax: u32, x: f64) -> Vec<f64> {
    let len = nmax as usize + 1;
    if x == 0.0 {
        let mut out = vec![0.0; len];
        out[0] = 1.0;
        return out;
    }
    if x <= SERIES_LIMIT {
        return (0..=nmax).map(|n| j_series_scaled(n, 0, x)).collect();
    }

    let top = (nmax as f64).max(x);
    let mut start = (top + 30.0 + (40.0 * top).sqrt()) as usize;
    start += start % 2;
    let mut out = vec![0.0; len];
    let (mut next, mut cur) = (0.0f64, 1e-300f64);
    let mut norm = 0.0;
    for k in (1..=start).rev() {
        // cur = J_k, next = J_{k+1} (unnormalized)
        let prev = 2.0 * k as f64 / x * cur - next;
        next = cur;
        cur = prev;
        let idx = k - 1;
        if idx < len {
            out[idx] = cur;
        }
        if idx % 2 == 0 && idx > 0 {
            norm += 2.0 * cur;
        }
        if cur.abs() > 1e250 {
            cur *= 1e-250;
            next *= 1e-250;
            norm *= 1e-250;
            for v in out.iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    norm += cur;
    for v in out.iter_mut() {
        *v /= norm;
    }
    out
}

fn check_j_argument(x: f64) -> Result<(), SpecialError> {
    if !x.is_finite() || x.abs() > ARGUMENT_CAP {
        Err(SpecialError::ArgumentOutOfRange(x))
    } else {
        Ok(())
    }
}

/// Bessel function of the first kind, `J_n(x)`, for any integer order and
/// real argument.
pub fn bessel_j(n: i32, x: f64) -> Result<f64, SpecialError> {
    let a = check_order(n as i64)?;
    check_j_argument(x)?;
    let mut sign = if n < 0 { parity(n as i64) } else { 1.0 };
    if x < 0.0 {
        sign *= parity(a as i64);
    }
    Ok(sign * j_table(a, x.abs())[a as usize])
}

/// `J_n(x)` for every `n` in `lo..=hi` from one recurrence sweep.
pub fn bessel_j_orders(lo: i32, hi: i32, x: f64) -> Result<Vec<f64>, SpecialError> {
    let amax = check_order(lo as i64)?.max(check_order(hi as i64)?);
    check_j_argument(x)?;
    let table = j_table(amax, x.abs());
    Ok((lo..=hi)
        .map(|n| {
            let a = n.unsigned_abs();
            let mut s = if n < 0 { parity(n as i64) } else { 1.0 };
            if x < 0.0 {
                s *= parity(a as i64);
            }
            s * table[a as usize]
        })
        .collect())
}

/// `J_n(x) / x^p` for `0 <= p <= n`, finite and smooth through `x = 0`.
pub fn bessel_j_scaled(n: u32, p: u32, x: f64) -> Result<f64, SpecialError> {
    check_order(n as i64)?;
    check_j_argument(x)?;
    assert!(p <= n, "scaled J needs p <= n");
    let sign = if x < 0.0 { parity((n - p) as i64) } else { 1.0 };
    let ax = x.abs();
    let v = if ax <= SERIES_LIMIT {
        j_series_scaled(n, p, ax)
    } else {
        j_table(n, ax)[n as usize] / ax.powi(p as i32)
    };
    Ok(sign * v)
}

/// `d/dr J_n(k r)`.
pub fn bessel_j_radial_derivative(n: i32, k: f64, r: f64) -> Result<f64, SpecialError> {
    if k == 0.0 {
        return Ok(0.0);
    }
    let j = bessel_j_orders(n - 1, n + 1, k * r)?;
    Ok(0.5 * k * (j[0] - j[2]))
}

/// `K_0(z), K_1(z)` by the logarithmic series (`|z| <= 2`).
fn k01_series(z: ComplexValue) -> (ComplexValue, ComplexValue) {
    let q = 0.25 * z * z;
    let log_half = (0.5 * z).ln();
    // t_k = q^k / (k!)^2 and u_k = q^k / (k! (k+1)!)
    let mut t = ComplexValue::new(1.0, 0.0);
    let mut u = ComplexValue::new(1.0, 0.0);
    let mut i0 = t;
    let mut i1s = u;
    let mut k0s = ComplexValue::new(0.0, 0.0);
    let mut k1s = u * (-2.0 * EULER_GAMMA + 1.0);
    let mut harmonic = 0.0;
    for k in 1..100 {
        let kf = k as f64;
        t *= q / (kf * kf);
        u *= q / (kf * (kf + 1.0));
        harmonic += 1.0 / kf;
        i0 += t;
        i1s += u;
        k0s += t * harmonic;
        // psi(k+1) + psi(k+2) = 2 H_k + 1/(k+1) - 2 gamma
        let dk1 = u * (2.0 * harmonic + 1.0 / (kf + 1.0) - 2.0 * EULER_GAMMA);
        k1s += dk1;
        if t.norm() < 1e-17 * i0.norm() && dk1.norm() < 1e-17 * k1s.norm() {
            break;
        }
    }
    let k0 = -(log_half + EULER_GAMMA) * i0 + k0s;
    let i1 = 0.5 * z * i1s;
    let k1 = 1.0 / z + log_half * i1 - 0.25 * z * k1s;
    (k0, k1)
}

/// `K_0(z), K_1(z)` by Steed's algorithm on Temme's continued fraction,
/// times `e^{Re z}` when `scaled`.
fn k01_continued_fraction(z: ComplexValue, scaled: bool) -> Result<(ComplexValue, ComplexValue), SpecialError> {
    let one = ComplexValue::new(1.0, 0.0);
    let a1 = 0.25;
    let mut b = 2.0 * (one + z);
    let mut d = one / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = ComplexValue::new(0.0, 0.0);
    let mut q2 = one;
    let mut q = ComplexValue::new(a1, 0.0);
    let mut c = a1;
    let mut a = -a1;
    let mut s = one + q * delh;
    let mut converged = false;
    for i in 1..20_000 {
        let fi = i as f64;
        a -= 2.0 * fi;
        c = -a * c / (fi + 1.0);
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = one / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if dels.norm() < 1e-17 * s.norm() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(SpecialError::ArgumentOutOfRange(z.norm()));
    }
    let h = a1 * h;
    let decay = if scaled { ComplexValue::from_polar(1.0, -z.im) } else { (-z).exp() };
    let k0 = (PI / (2.0 * z)).sqrt() * decay / s;
    let k1 = k0 * (z + 0.5 - h) / z;
    Ok((k0, k1))
}

/// `K_0(z) ..= K_nmax(z)` for `Re z > 0`, `Im z >= 0`.
fn k_table_upper(nmax: u32, z: ComplexValue, scaled: bool) -> Result<Vec<ComplexValue>, SpecialError> {
    let (k0, k1) = if z.norm() <= SERIES_LIMIT {
        let (k0, k1) = k01_series(z);
        let f = if scaled { z.re.exp() } else { 1.0 };
        (k0 * f, k1 * f)
    } else {
        k01_continued_fraction(z, scaled)?
    };
    let mut out = Vec::with_capacity(nmax as usize + 1);
    out.push(k0);
    if nmax >= 1 {
        out.push(k1);
    }
    for n in 1..nmax as usize {
        let next = out[n - 1] + (2.0 * n as f64) / z * out[n];
        out.push(next);
    }
    if out.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(SpecialError::Overflow(z));
    }
    Ok(out)
}

fn k_table(nmax: u32, z: ComplexValue, scaled: bool) -> Result<Vec<ComplexValue>, SpecialError> {
    if !(z.re > 0.0) || !z.im.is_finite() {
        return Err(SpecialError::DomainError(z));
    }
    if z.norm() > K_ARGUMENT_CAP {
        return Err(SpecialError::ArgumentOutOfRange(z.norm()));
    }
    // K_n(conj z) = conj K_n(z): evaluate in the upper half-plane only
    if z.im < 0.0 {
        Ok(k_table_upper(nmax, z.conj(), scaled)?.into_iter().map(|v| v.conj()).collect())
    } else {
        k_table_upper(nmax, z, scaled)
    }
}

/// Modified Bessel function of the second kind, `K_n(z)`, `Re z > 0`.
pub fn bessel_k_complex(n: i32, z: ComplexValue) -> Result<ComplexValue, SpecialError> {
    let a = check_order(n as i64)?;
    Ok(k_table(a, z, false)?[a as usize])
}

/// `K_n(z)` for every `n` in `lo..=hi`.
pub fn bessel_k_orders(lo: i32, hi: i32, z: ComplexValue) -> Result<Vec<ComplexValue>, SpecialError> {
    let amax = check_order(lo as i64)?.max(check_order(hi as i64)?);
    let table = k_table(amax, z, false)?;
    Ok((lo..=hi).map(|n| table[n.unsigned_abs() as usize]).collect())
}

/// `e^{Re z} K_n(z)` for every `n` in `lo..=hi`. Finite where `K_n` itself
/// underflows.
pub fn bessel_k_scaled_orders(lo: i32, hi: i32, z: ComplexValue) -> Result<Vec<ComplexValue>, SpecialError> {
    let amax = check_order(lo as i64)?.max(check_order(hi as i64)?);
    let table = k_table(amax, z, true)?;
    Ok((lo..=hi).map(|n| table[n.unsigned_abs() as usize]).collect())
}

/// `d/dr K_n(k r)`.
pub fn bessel_k_radial_derivative(
    n: i32,
    k: ComplexValue,
    r: f64,
) -> Result<ComplexValue, SpecialError> {
    let kk = bessel_k_orders(n - 1, n + 1, k * r)?;
    Ok(-0.5 * k * (kk[0] + kk[2]))
}
