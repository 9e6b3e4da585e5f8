//! Small dense complex linear algebra on top of nalgebra.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub fn to_dmatrix(rows: &[Vec<Complex64>]) -> DMatrix<Complex64> {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    DMatrix::from_fn(r, c, |i, j| rows[i][j])
}

pub fn complex_det(rows: &[Vec<Complex64>]) -> Complex64 {
    if rows.is_empty() {
        return Complex64::new(1.0, 0.0);
    }
    to_dmatrix(rows).lu().determinant()
}

/// Solve `a·x = b`; `None` when `a` is numerically singular.
pub fn complex_solve(a: DMatrix<Complex64>, b: &DVector<Complex64>) -> Option<DVector<Complex64>> {
    let x = a.lu().solve(b)?;
    x.iter().all(|v| v.re.is_finite() && v.im.is_finite()).then_some(x)
}

/// Coefficients (ascending) of `det(zI - M)` for a square complex matrix,
/// recovered from values on a circle by a discrete Fourier transform.
pub fn char_poly(m: &DMatrix<Complex64>) -> Vec<Complex64> {
    let n = m.nrows();
    let radius = m.iter().map(|v| v.norm()).fold(1.0_f64, f64::max);
    let count = n + 1;
    let values: Vec<Complex64> = (0..count)
        .map(|k| {
            let z = Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / count as f64);
            let shifted = DMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    z - m[(i, j)]
                } else {
                    -m[(i, j)]
                }
            });
            shifted.lu().determinant()
        })
        .collect();
    (0..count)
        .map(|j| {
            let sum: Complex64 = values
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    v * Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * (j * k) as f64 / count as f64)
                })
                .sum();
            sum / (count as f64 * radius.powi(j as i32))
        })
        .collect()
}
