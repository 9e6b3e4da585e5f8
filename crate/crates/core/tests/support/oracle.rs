//! Brute-force fiber solver used as a cross-check for the homotopy solver.
//!
//! Equations are `det [[D(s_i), N(s_i)], [K, I]] = det(D - NK)(s_i) = 0` at each target root,
//! evaluated directly as floating determinants. Newton runs from every point of
//! a grid over `[-50, 50]^{mp}` plus random complex starts, with a
//! finite-difference Jacobian.

use num_complex::Complex64;
use polefiber::ratpoly::RatPolyMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Oracle {
    m: usize,
    p: usize,
    /// `(D(s_i), N(s_i))` per target root.
    samples: Vec<(Vec<Vec<Complex64>>, Vec<Vec<Complex64>>)>,
}

fn det(mut a: Vec<Vec<Complex64>>) -> Complex64 {
    let n = a.len();
    let mut acc = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .unwrap();
        if a[piv][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if piv != col {
            a.swap(piv, col);
            acc = -acc;
        }
        acc *= a[col][col];
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
        }
    }
    acc
}

/// Solve `a x = b` by Gaussian elimination; `None` when singular.
fn solve(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))?;
        if a[piv][col].norm() < 1e-300 {
            return None;
        }
        a.swap(piv, col);
        b.swap(piv, col);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
            let v = b[col];
            b[r] -= f * v;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for r in (0..n).rev() {
        let s: Complex64 = (r + 1..n).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    Some(x)
}

fn sup(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

impl Oracle {
    pub fn new(d: &RatPolyMatrix, n: &RatPolyMatrix, roots: &[f64]) -> Self {
        let p = d.rows();
        let m = n.cols();
        assert_eq!(roots.len(), m * p, "oracle needs a square system");
        let samples = roots
            .iter()
            .map(|&s| {
                let z = Complex64::new(s, 0.0);
                (d.eval_complex(z), n.eval_complex(z))
            })
            .collect();
        Oracle { m, p, samples }
    }

    fn block(&self, i: usize, k: &[Complex64]) -> Vec<Vec<Complex64>> {
        let (m, p) = (self.m, self.p);
        let (ds, ns) = &self.samples[i];
        let mut rows = Vec::with_capacity(m + p);
        for r in 0..p {
            let mut row = ds[r].clone();
            row.extend_from_slice(&ns[r]);
            rows.push(row);
        }
        for r in 0..m {
            let mut row: Vec<Complex64> = (0..p).map(|c| k[r * p + c]).collect();
            row.extend((0..m).map(|c| Complex64::new(if c == r { 1.0 } else { 0.0 }, 0.0)));
            rows.push(row);
        }
        rows
    }

    /// Residuals, each divided by the size of its sample so roots of very
    /// different magnitude are weighted alike.
    pub fn residual(&self, k: &[Complex64]) -> Vec<Complex64> {
        (0..self.samples.len())
            .map(|i| {
                let (ds, ns) = &self.samples[i];
                let scale = ds
                    .iter()
                    .chain(ns)
                    .flatten()
                    .map(|z| z.norm())
                    .fold(1.0, f64::max);
                det(self.block(i, k)) / scale.powi(self.p as i32)
            })
            .collect()
    }

    /// Residual divided by the degree-`m` growth in `K`.
    pub fn normalized_residual(&self, k: &[Complex64]) -> f64 {
        sup(&self.residual(k)) / (1.0 + sup(k)).powi(self.m.min(self.p) as i32)
    }

    fn newton(&self, mut x: Vec<Complex64>) -> Option<Vec<Complex64>> {
        let nv = x.len();
        for _ in 0..80 {
            let f = self.residual(&x);
            let h = 1e-7 * (1.0 + sup(&x));
            let mut jac = vec![vec![Complex64::new(0.0, 0.0); nv]; nv];
            for j in 0..nv {
                let mut xp = x.clone();
                xp[j] += h;
                let mut xm = x.clone();
                xm[j] -= h;
                let (fp, fm) = (self.residual(&xp), self.residual(&xm));
                for i in 0..nv {
                    jac[i][j] = (fp[i] - fm[i]) / (2.0 * h);
                }
            }
            let step = solve(jac, f.iter().map(|v| -v).collect())?;
            for (xi, si) in x.iter_mut().zip(&step) {
                *xi += si;
            }
            if !x.iter().all(|z| z.re.is_finite() && z.im.is_finite()) || sup(&x) > 1e6 {
                return None;
            }
            if sup(&step) <= 1e-11 * (1.0 + sup(&x)) {
                return (self.normalized_residual(&x) < 1e-9).then_some(x);
            }
        }
        None
    }

    /// Every solution reached from the starts, deduplicated at 1e-6 relative.
    pub fn solve(&self, grid_per_axis: usize, complex_starts: usize, seed: u64) -> Vec<Vec<Complex64>> {
        let nv = self.m * self.p;
        let axis: Vec<f64> = (0..grid_per_axis)
            .map(|i| -50.0 + 100.0 * i as f64 / (grid_per_axis - 1) as f64)
            .collect();
        let mut starts: Vec<Vec<Complex64>> = Vec::new();
        let total = grid_per_axis.pow(nv as u32);
        for mut idx in 0..total {
            let mut x = Vec::with_capacity(nv);
            for _ in 0..nv {
                x.push(Complex64::new(axis[idx % grid_per_axis], 0.0));
                idx /= grid_per_axis;
            }
            starts.push(x);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..complex_starts {
            starts.push(
                (0..nv)
                    .map(|_| Complex64::new(rng.random_range(-50.0..50.0), rng.random_range(-50.0..50.0)))
                    .collect(),
            );
        }
        let mut found: Vec<Vec<Complex64>> = Vec::new();
        for s in starts {
            if let Some(mut x) = self.newton(s) {
                if x.iter().all(|z| z.im.abs() < 1e-9 * (1.0 + z.norm())) {
                    x.iter_mut().for_each(|z| z.im = 0.0);
                }
                if !found.iter().any(|y| distance(y, &x) < 1e-6) {
                    found.push(x);
                }
            }
        }
        found
    }
}

/// Max-entry distance relative to the larger sup norm (at least 1).
pub fn distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    let d = a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    d / sup(a).max(sup(b)).max(1.0)
}

/// True when the two sets coincide up to `tol` in both directions.
pub fn same_set(a: &[Vec<Complex64>], b: &[Vec<Complex64>], tol: f64) -> bool {
    a.len() == b.len()
        && a.iter().all(|x| b.iter().any(|y| distance(x, y) < tol))
        && b.iter().all(|y| a.iter().any(|x| distance(x, y) < tol))
}
