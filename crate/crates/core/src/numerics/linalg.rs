// Index loops read most clearly in the fixed-size elimination below.
#![allow(clippy::needless_range_loop)]

use super::NumericsError;

pub type Matrix4 = [[f64; 4]; 4];

/// Determinant by LU decomposition with partial pivoting.
pub fn det4(m: &Matrix4) -> f64 {
    let mut a = *m;
    let mut det = 1.0;
    for k in 0..4 {
        let p = (k..4)
            .max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs()))
            .unwrap();
        if a[p][k] == 0.0 {
            return 0.0;
        }
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..4 {
            let l = a[i][k] / a[k][k];
            for j in k..4 {
                a[i][j] -= l * a[k][j];
            }
        }
    }
    det
}

/// Unit vector spanning the kernel of a rank-3 matrix.
///
/// Gaussian elimination with full pivoting. The last pivot must be below
/// `sing_tol` times the first (largest) pivot, and the third must not be,
/// otherwise [`NumericsError::NotSingular`] or
/// [`NumericsError::RankDeficiency2`] is returned. The sign is fixed so the
/// component of largest magnitude (the first one, on ties) is positive.
pub fn nullspace_4x4(m: &Matrix4, sing_tol: f64) -> Result<[f64; 4], NumericsError> {
    let mut a = *m;
    let mut cols = [0usize, 1, 2, 3];
    let mut pivots = [0.0f64; 4];

    for k in 0..4 {
        let (mut pi, mut pj, mut best) = (k, k, -1.0);
        for i in k..4 {
            for j in k..4 {
                if a[i][j].abs() > best {
                    best = a[i][j].abs();
                    pi = i;
                    pj = j;
                }
            }
        }
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        cols.swap(k, pj);
        pivots[k] = a[k][k];
        if a[k][k] == 0.0 {
            continue;
        }
        for i in k + 1..4 {
            let l = a[i][k] / a[k][k];
            for j in k..4 {
                a[i][j] -= l * a[k][j];
            }
        }
    }

    let scale = pivots[0].abs();
    if !scale.is_finite() {
        return Err(NumericsError::InvalidArgument("non-finite matrix entries".into()));
    }
    if scale == 0.0 || pivots[2].abs() <= sing_tol * scale {
        return Err(NumericsError::RankDeficiency2);
    }
    let ratio = pivots[3].abs() / scale;
    if ratio > sing_tol {
        return Err(NumericsError::NotSingular(ratio));
    }

    // back-substitution in the permuted basis with the free variable set to 1
    let mut y = [0.0f64; 4];
    y[3] = 1.0;
    for k in (0..3).rev() {
        let s: f64 = (k + 1..4).map(|j| a[k][j] * y[j]).sum();
        y[k] = -s / a[k][k];
    }
    let mut x = [0.0f64; 4];
    for (k, &c) in cols.iter().enumerate() {
        x[c] = y[k];
    }

    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    let lead = (0..4).fold(0, |best, i| if x[i].abs() > x[best].abs() { i } else { best });
    let sign = if x[lead] < 0.0 { -1.0 } else { 1.0 };
    Ok(x.map(|v| sign * v / norm))
}
