//! Total-degree homotopy continuation for square polynomial systems.
//!
//! Paths are tracked in projective coordinates `(x_0, x_1, …, x_n)` on a
//! random affine patch, so that paths heading to infinity stay bounded and
//! show up as `x_0 → 0`. The homotopy is
//!
//! ```text
//! H(x, t) = γ·(1 - t)·G(x) + t·F(x),   G_i = x_i^{d_i} - x_0^{d_i}
//! ```
//!
//! with an explicit Euler predictor, a damped Newton corrector and an
//! adaptive step. Finite endpoints are polished by affine Newton, clustered,
//! sorted canonically and classified as real or non-real.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::complex_solve;
use crate::multipoly::{Exponents, RatMultiPoly};
use crate::ratpoly::rat_to_f64;

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// Residual ceiling for an endpoint to count as a solution.
pub const ACCEPT_RESIDUAL: f64 = 1e-8;

/// Newton must reach a relative update this small while polishing; points
/// drifting toward infinity can have tiny normalized residuals but never
/// settle.
pub const POLISH_CONVERGED: f64 = 1e-8;

/// A path that stalls within this distance of `t = 1` and does not polish to
/// a finite solution is counted as diverging.
pub const ENDGAME_ZONE: f64 = 1e-3;

/// The first corrector update after a predictor step may move the point by at
/// most this fraction of its norm; larger jumps shrink the step instead.
const FIRST_UPDATE_LIMIT: f64 = 0.01;

/// An endpoint whose affine polish keeps wandering is still accepted when
/// the projective Jacobian at `t = 1` is at most this badly conditioned.
/// Large but finite solutions land far below it; points running into the
/// solution set at infinity land far above.
pub const ENDPOINT_COND_MAX: f64 = 1e12;

/// Hard cap on predictor-corrector steps per path.
const MAX_STEPS: usize = 50_000;

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPoly {
    pub terms: Vec<(Exponents, Complex64)>,
}

impl ComplexPoly {
    pub fn from_exact(p: &RatMultiPoly) -> Self {
        ComplexPoly {
            terms: p
                .terms()
                .map(|(e, c)| (e.clone(), Complex64::new(rat_to_f64(c), 0.0)))
                .collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.terms
            .iter()
            .map(|(e, _)| e.iter().map(|&k| k as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// Largest coefficient modulus.
    pub fn coeff_norm(&self) -> f64 {
        self.terms.iter().map(|(_, c)| c.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, x: &[Complex64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(*c, |acc, (&k, xi)| acc * xi.powu(k as u32))
            })
            .sum()
    }

    /// Homogenization of degree `deg` with `x_0` as the extra variable.
    fn homogenize(&self, deg: usize) -> HomogeneousPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let e0 = deg - e.iter().map(|&k| k as usize).sum::<usize>();
                let exps = std::iter::once(e0 as u32).chain(e.iter().map(|&k| k as u32)).collect();
                (exps, *c)
            })
            .collect();
        HomogeneousPoly { terms }
    }

    fn gradient(&self, x: &[Complex64]) -> Vec<Complex64> {
        let mut xh = Vec::with_capacity(x.len() + 1);
        xh.push(ONE);
        xh.extend_from_slice(x);
        let mut grad = vec![ZERO; xh.len()];
        self.homogenize(self.degree()).eval_grad(&xh, &mut Scratch::new(xh.len()), &mut grad);
        grad[1..].to_vec()
    }
}

struct HomogeneousPoly {
    terms: Vec<(Vec<u32>, Complex64)>,
}

struct Scratch {
    pows: Vec<Complex64>,
    prefix: Vec<Complex64>,
}

impl Scratch {
    fn new(dim: usize) -> Self {
        Scratch {
            pows: vec![ZERO; dim],
            prefix: vec![ZERO; dim],
        }
    }
}

impl HomogeneousPoly {
    /// Value at `xh`; the gradient is written to `grad`.
    fn eval_grad(&self, xh: &[Complex64], scratch: &mut Scratch, grad: &mut [Complex64]) -> Complex64 {
        grad.fill(ZERO);
        let mut value = ZERO;
        for (exps, c) in &self.terms {
            // prefix[j] = Π_{i<j} x_i^{e_i}; the suffix product runs backwards
            let mut acc = ONE;
            for j in 0..xh.len() {
                scratch.prefix[j] = acc;
                scratch.pows[j] = if exps[j] == 0 { ONE } else { xh[j].powu(exps[j]) };
                acc *= scratch.pows[j];
            }
            value += acc * c;
            let mut suffix = *c;
            for j in (0..xh.len()).rev() {
                if exps[j] > 0 {
                    let dj = (exps[j] as f64) * xh[j].powu(exps[j] - 1);
                    grad[j] += scratch.prefix[j] * suffix * dj;
                }
                suffix *= scratch.pows[j];
            }
        }
        value
    }
}

/// A system of polynomial equations in `nvars` complex unknowns.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySystem {
    pub nvars: usize,
    pub equations: Vec<ComplexPoly>,
}

impl PolySystem {
    pub fn new(nvars: usize, equations: Vec<ComplexPoly>) -> Self {
        PolySystem { nvars, equations }
    }

    pub fn from_exact(nvars: usize, eqs: &[RatMultiPoly]) -> Self {
        Self::new(nvars, eqs.iter().map(ComplexPoly::from_exact).collect())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.equations.iter().map(ComplexPoly::degree).collect()
    }

    pub fn scales(&self) -> Vec<f64> {
        self.equations
            .iter()
            .map(|e| e.coeff_norm().max(f64::MIN_POSITIVE))
            .collect()
    }

    pub fn is_square(&self) -> bool {
        self.equations.len() == self.nvars
    }

    pub fn has_real_coefficients(&self) -> bool {
        self.equations
            .iter()
            .all(|e| e.terms.iter().all(|(_, c)| c.im == 0.0))
    }

    pub fn eval(&self, x: &[Complex64]) -> Vec<Complex64> {
        self.equations.iter().map(|e| e.eval(x)).collect()
    }

    pub fn jacobian(&self, x: &[Complex64]) -> DMatrix<Complex64> {
        let rows: Vec<Vec<Complex64>> = self.equations.iter().map(|e| e.gradient(x)).collect();
        DMatrix::from_fn(self.equations.len(), self.nvars, |i, j| rows[i][j])
    }

    /// `max_i |f_i(x)| / (scale_i · max(1, ‖x‖∞)^{d_i})`: the residual relative
    /// to the size the equation's terms can reach at `x`.
    pub fn normalized_residual(&self, x: &[Complex64]) -> f64 {
        let mag = x.iter().map(|v| v.norm()).fold(1.0_f64, f64::max);
        self.equations
            .iter()
            .zip(self.scales())
            .map(|(e, s)| e.eval(x).norm() / (s * mag.powi(e.degree() as i32)))
            .fold(0.0, f64::max)
    }

    /// The same system with every equation divided by its coefficient norm.
    pub fn scaled(&self) -> Self {
        let equations = self
            .equations
            .iter()
            .zip(self.scales())
            .map(|(e, s)| ComplexPoly {
                terms: e.terms.iter().map(|(x, c)| (x.clone(), c / s)).collect(),
            })
            .collect();
        PolySystem::new(self.nvars, equations)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrackerConfig {
    /// Unit-modulus constant for the γ-trick; derived from `seed` by default.
    pub gamma: Complex64,
    pub step_init: f64,
    pub step_min: f64,
    pub step_max: f64,
    pub newton_tol: f64,
    pub newton_max_iters: usize,
    pub divergence_norm: f64,
    pub dedupe_tol: f64,
    pub real_tol: f64,
    pub seed: u64,
    /// Track only the first `k` start points (harness self-tests).
    pub path_limit: Option<usize>,
}

impl Default for TrackerConfig {
    fn default() -> Self {
        Self::with_seed(0x5eed)
    }
}

impl TrackerConfig {
    pub fn with_seed(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let angle: f64 = rng.random_range(0.0..2.0 * PI);
        TrackerConfig {
            gamma: Complex64::from_polar(1.0, angle),
            step_init: 0.01,
            step_min: 1e-14,
            step_max: 0.05,
            newton_tol: 1e-10,
            newton_max_iters: 10,
            divergence_norm: 1e10,
            dedupe_tol: 1e-6,
            real_tol: 1e-8,
            seed,
            path_limit: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let steps_ok = 0.0 < self.step_min
            && self.step_min <= self.step_init
            && self.step_init <= self.step_max
            && self.step_max < 1.0;
        if !steps_ok {
            return Err(Error::InvalidArgument(format!(
                "need 0 < step_min <= step_init <= step_max < 1 (got {}, {}, {})",
                self.step_min, self.step_init, self.step_max
            )));
        }
        let tols = [
            self.newton_tol,
            self.divergence_norm,
            self.dedupe_tol,
            self.real_tol,
        ];
        if tols.iter().any(|&t| !(t > 0.0)) || self.newton_max_iters == 0 {
            return Err(Error::InvalidArgument("tolerances must be positive".into()));
        }
        if (self.gamma.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidArgument("gamma must have unit modulus".into()));
        }
        Ok(())
    }
}

/// Start system `x_i^{d_i} - 1` and its `Π d_i` roots.
#[derive(Clone, Debug)]
pub struct StartSystem {
    pub degrees: Vec<usize>,
    pub points: Vec<Vec<Complex64>>,
}

pub fn total_degree_start(system: &PolySystem) -> Result<StartSystem> {
    if !system.is_square() {
        return Err(Error::NonSquareSystem {
            equations: system.equations.len(),
            variables: system.nvars,
        });
    }
    let degrees = system.degrees();
    if let Some(index) = degrees.iter().position(|&d| d == 0) {
        return Err(Error::ZeroDegreeEquation { index });
    }
    let mut points: Vec<Vec<Complex64>> = vec![Vec::new()];
    for &d in &degrees {
        let roots: Vec<Complex64> = (0..d)
            .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / d as f64))
            .collect();
        points = points
            .into_iter()
            .flat_map(|prefix| {
                roots.iter().map(move |r| {
                    let mut v = prefix.clone();
                    v.push(*r);
                    v
                })
            })
            .collect();
    }
    Ok(StartSystem { degrees, points })
}

/// `γ(1-t)G + tF` on a projective patch `a·X = 1`.
pub struct Homotopy<'a> {
    target: &'a PolySystem,
    homogeneous: Vec<HomogeneousPoly>,
    degrees: Vec<usize>,
    gamma: Complex64,
    patch: Vec<Complex64>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum PathOutcome {
    /// Reached `t = 1`; projective endpoint.
    Endpoint(Vec<Complex64>),
    Divergent,
    /// Step size underflow at `t`; `last` is the last point on the path.
    Failed { t: f64, last: Vec<Complex64> },
}

impl<'a> Homotopy<'a> {
    pub fn new(target: &'a PolySystem, gamma: Complex64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        let patch = (0..=target.nvars)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let degrees = target.degrees();
        Homotopy {
            target,
            homogeneous: target
                .equations
                .iter()
                .zip(&degrees)
                .map(|(e, &d)| e.homogenize(d))
                .collect(),
            degrees,
            gamma,
            patch,
        }
    }

    fn dim(&self) -> usize {
        self.target.nvars + 1
    }

    /// Lift an affine start point onto the patch.
    pub fn lift(&self, x: &[Complex64]) -> Vec<Complex64> {
        let mut xh = Vec::with_capacity(x.len() + 1);
        xh.push(ONE);
        xh.extend_from_slice(x);
        let dot: Complex64 = self.patch.iter().zip(&xh).map(|(a, v)| a * v).sum();
        xh.iter().map(|v| v / dot).collect()
    }

    /// `H(X, t)`, `∂H/∂X` and `∂H/∂t`.
    fn eval(&self, xh: &[Complex64], t: f64) -> (DVector<Complex64>, DMatrix<Complex64>, DVector<Complex64>) {
        let n = self.target.nvars;
        let dim = n + 1;
        let mut h = DVector::from_element(dim, ZERO);
        let mut ht = DVector::from_element(dim, ZERO);
        let mut jac = DMatrix::from_element(dim, dim, ZERO);
        let gs = self.gamma * (1.0 - t);
        let mut scratch = Scratch::new(dim);
        let mut fg = vec![ZERO; dim];
        for i in 0..n {
            let d = self.degrees[i];
            let f = self.homogeneous[i].eval_grad(xh, &mut scratch, &mut fg);
            let g = xh[i + 1].powu(d as u32) - xh[0].powu(d as u32);
            h[i] = gs * g + f * t;
            ht[i] = f - self.gamma * g;
            for j in 0..dim {
                jac[(i, j)] = fg[j] * t;
            }
            let dd = d as f64;
            jac[(i, i + 1)] += gs * dd * xh[i + 1].powu(d as u32 - 1);
            jac[(i, 0)] -= gs * dd * xh[0].powu(d as u32 - 1);
        }
        h[n] = self.patch.iter().zip(xh).map(|(a, v)| a * v).sum::<Complex64>() - ONE;
        for j in 0..dim {
            jac[(n, j)] = self.patch[j];
        }
        (h, jac, ht)
    }

    /// Newton at fixed `t`. Converges once the update drops below
    /// `newton_tol`, or once it stops contracting while already below
    /// `sqrt(newton_tol)` (the rounding floor of an ill-conditioned Jacobian).
    /// Returns `None` if the iteration diverges or stalls above that.
    fn correct(&self, mut x: Vec<Complex64>, t: f64, cfg: &TrackerConfig, first_limit: f64) -> Option<Vec<Complex64>> {
        let mut prev = f64::INFINITY;
        for iter in 0..cfg.newton_max_iters {
            let (h, jac, _) = self.eval(&x, t);
            let delta = complex_solve(jac, &(-h))?;
            let dn = inf_norm(delta.as_slice());
            let scale = inf_norm(&x).max(1.0);
            if iter == 0 && dn > first_limit * scale {
                return None;
            }
            if iter > 0 && dn > 0.5 * prev {
                return (prev <= cfg.newton_tol.sqrt() * scale).then_some(x);
            }
            for (xi, di) in x.iter_mut().zip(delta.iter()) {
                *xi += di;
            }
            if dn <= cfg.newton_tol * scale {
                return Some(x);
            }
            prev = dn;
        }
        (prev <= cfg.newton_tol.sqrt() * inf_norm(&x).max(1.0)).then_some(x)
    }

    /// Track one path from `t = 0` to `t = 1`.
    pub fn track(&self, start: &[Complex64], cfg: &TrackerConfig) -> PathOutcome {
        let mut x = self.lift(start);
        let mut t = 0.0_f64;
        let mut h = cfg.step_init;
        let mut streak = 0;
        for _ in 0..MAX_STEPS {
            if t >= 1.0 {
                return PathOutcome::Endpoint(x);
            }
            if affine_norm(&x) > cfg.divergence_norm {
                return PathOutcome::Divergent;
            }
            let step = h.min(1.0 - t);
            let (_, jac, ht) = self.eval(&x, t);
            let Some(dx) = complex_solve(jac, &(-ht)) else {
                return PathOutcome::Failed { t, last: x };
            };
            let pred: Vec<Complex64> = x.iter().zip(dx.iter()).map(|(a, b)| a + b * step).collect();
            let t_next = if step == 1.0 - t { 1.0 } else { t + step };
            match self.correct(pred, t_next, cfg, FIRST_UPDATE_LIMIT) {
                Some(xc) => {
                    x = xc;
                    t = t_next;
                    streak += 1;
                    if streak >= 3 {
                        h = (h * 1.5).min(cfg.step_max);
                        streak = 0;
                    }
                }
                None => {
                    h *= 0.5;
                    streak = 0;
                    if h < cfg.step_min {
                        return PathOutcome::Failed { t, last: x };
                    }
                }
            }
        }
        PathOutcome::Failed { t, last: x }
    }

    /// Condition number of `∂H/∂X` at `t = 1`.
    fn endpoint_condition(&self, xh: &[Complex64]) -> f64 {
        let (_, jac, _) = self.eval(xh, 1.0);
        let sv = jac.singular_values();
        let max = sv.iter().cloned().fold(0.0, f64::max);
        let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
        max / min
    }

    pub fn dim_projective(&self) -> usize {
        self.dim()
    }
}

fn inf_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `‖x‖∞ / |x_0|` for a projective point.
fn affine_norm(xh: &[Complex64]) -> f64 {
    let x0 = xh[0].norm();
    let rest = inf_norm(&xh[1..]);
    if x0 == 0.0 {
        f64::INFINITY
    } else {
        rest / x0
    }
}

/// Affine Newton refinement to full precision.
pub fn polish(system: &PolySystem, x: Vec<Complex64>, cfg: &TrackerConfig) -> Vec<Complex64> {
    polish_tracked(system, x, cfg).0
}

/// Newton refinement that also reports the smallest relative update seen.
fn polish_tracked(system: &PolySystem, mut x: Vec<Complex64>, cfg: &TrackerConfig) -> (Vec<Complex64>, f64) {
    let mut best = f64::INFINITY;
    for _ in 0..cfg.newton_max_iters {
        let f = DVector::from_vec(system.eval(&x));
        let Some(delta) = complex_solve(system.jacobian(&x), &(-f)) else {
            break;
        };
        let dn = inf_norm(delta.as_slice());
        for (xi, di) in x.iter_mut().zip(delta.iter()) {
            *xi += di;
        }
        let rel = dn / inf_norm(&x).max(1.0);
        best = best.min(rel);
        if rel <= 1e-15 {
            break;
        }
    }
    (x, best)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Solution {
    pub point: Vec<Complex64>,
    /// Normalized residual, see [`PolySystem::normalized_residual`].
    pub residual: f64,
    pub is_real: bool,
    pub conjugate_partner: Option<usize>,
    /// Start point that produced the cluster representative.
    pub path_id: usize,
    /// Number of path endpoints that landed in this cluster.
    pub multiplicity: usize,
    /// Relative accuracy used for clustering, realness and conjugate
    /// matching: `dedupe_tol`, or more for badly conditioned endpoints.
    pub tolerance: f64,
}

impl Solution {
    /// Reshape the point into an `rows × cols` matrix, row-major.
    pub fn as_matrix(&self, rows: usize, cols: usize) -> Vec<Vec<Complex64>> {
        (0..rows)
            .map(|i| self.point[i * cols..(i + 1) * cols].to_vec())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolutionSet {
    pub solutions: Vec<Solution>,
    pub paths_tracked: usize,
    pub paths_diverged: usize,
    pub paths_failed: usize,
    pub bezout_bound: usize,
    pub real_system: bool,
    pub warnings: Vec<String>,
}

fn is_real_point(x: &[Complex64], real_tol: f64) -> bool {
    let max_im = x.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    max_im / (1.0 + inf_norm(x)) < real_tol
}

/// Max-entry distance relative to the larger of the two sup norms (at least 1).
pub fn relative_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    let d = a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    d / inf_norm(a).max(inf_norm(b)).max(1.0)
}

/// Canonical order: lexicographic on real parts rounded to 1e-6, then on
/// imaginary parts.
fn canonical_key(x: &[Complex64]) -> Vec<i64> {
    let r = |v: f64| (v * 1e6).round() as i64;
    x.iter().map(|z| r(z.re)).chain(x.iter().map(|z| r(z.im))).collect()
}

pub fn solve_system(system: &PolySystem, cfg: &TrackerConfig) -> Result<SolutionSet> {
    cfg.validate()?;
    let start = total_degree_start(system)?;
    let bezout_bound = start.points.len();
    let work = system.scaled();
    let homotopy = Homotopy::new(&work, cfg.gamma, cfg.seed);
    let limit = cfg.path_limit.unwrap_or(bezout_bound).min(bezout_bound);
    let outcomes: Vec<PathOutcome> = start.points[..limit]
        .par_iter()
        .map(|s| homotopy.track(s, cfg))
        .collect();

    let mut diverged = 0;
    let mut failed = 0;
    let mut finite: Vec<(usize, Vec<Complex64>, f64, f64)> = Vec::new();
    for (path_id, outcome) in outcomes.into_iter().enumerate() {
        let (xh, stalled_at) = match outcome {
            PathOutcome::Divergent => {
                diverged += 1;
                continue;
            }
            PathOutcome::Endpoint(xh) => (xh, None),
            PathOutcome::Failed { t, last } => (last, Some(t)),
        };
        if affine_norm(&xh) > cfg.divergence_norm {
            diverged += 1;
            continue;
        }
        let x: Vec<Complex64> = xh[1..].iter().map(|v| v / xh[0]).collect();
        let (x, upd) = polish_tracked(&work, x, cfg);
        let res = system.normalized_residual(&x);
        if res < ACCEPT_RESIDUAL {
            if upd <= POLISH_CONVERGED {
                finite.push((path_id, x, res, cfg.dedupe_tol));
                continue;
            }
            let cond = homotopy.endpoint_condition(&xh);
            if stalled_at.is_none() && cond <= ENDPOINT_COND_MAX {
                let tol = cfg.dedupe_tol.max(100.0 * f64::EPSILON * cond);
                finite.push((path_id, x, res, tol));
                continue;
            }
        }
        match stalled_at {
            // stalled next to t = 1 without a finite limit: the path is
            // running into the singular solution set at infinity
            Some(t) if t >= 1.0 - ENDGAME_ZONE => diverged += 1,
            Some(_) => failed += 1,
            None if inf_norm(&x) > cfg.divergence_norm.sqrt() => diverged += 1,
            None => failed += 1,
        }
    }

    let real_system = system.has_real_coefficients();
    // cluster in path order so representatives are deterministic
    let mut clusters: Vec<Solution> = Vec::new();
    for (path_id, x, res, tol) in finite {
        if let Some(c) = clusters
            .iter_mut()
            .find(|c| relative_distance(&c.point, &x) < c.tolerance.max(tol))
        {
            c.multiplicity += 1;
            c.tolerance = c.tolerance.max(tol);
            continue;
        }
        let is_real = real_system && is_real_point(&x, cfg.real_tol.max(tol));
        let (x, res) = if is_real {
            let xr: Vec<Complex64> = x.iter().map(|z| Complex64::new(z.re, 0.0)).collect();
            let rr = system.normalized_residual(&xr);
            (xr, rr)
        } else {
            (x, res)
        };
        clusters.push(Solution {
            is_real,
            point: x,
            residual: res,
            conjugate_partner: None,
            path_id,
            multiplicity: 1,
            tolerance: tol,
        });
    }
    clusters.sort_by_key(|a| canonical_key(&a.point));

    let mut warnings = Vec::new();
    if failed > 0 {
        warnings.push(format!("{failed} path(s) failed to reach t = 1"));
    }
    if clusters.len() > bezout_bound {
        return Err(Error::Internal(format!(
            "{} solutions exceed the Bézout bound {bezout_bound}",
            clusters.len()
        )));
    }
    let mut set = SolutionSet {
        solutions: clusters,
        paths_tracked: limit,
        paths_diverged: diverged,
        paths_failed: failed,
        bezout_bound,
        real_system,
        warnings,
    };
    if real_system {
        let unpaired = pair_conjugates(&mut set.solutions, cfg.dedupe_tol);
        if unpaired > 0 {
            set.warnings.push(format!(
                "{unpaired} non-real solution(s) without a conjugate partner"
            ));
        }
    }
    Ok(set)
}

/// Greedy conjugate matching; returns the number of unpaired non-real points.
fn pair_conjugates(sols: &mut [Solution], tol: f64) -> usize {
    for s in sols.iter_mut() {
        s.conjugate_partner = None;
    }
    let mut unpaired = 0;
    for i in 0..sols.len() {
        if sols[i].is_real || sols[i].conjugate_partner.is_some() {
            continue;
        }
        let conj: Vec<Complex64> = sols[i].point.iter().map(|z| z.conj()).collect();
        let partner = (0..sols.len()).find(|&j| {
            j != i
                && !sols[j].is_real
                && sols[j].conjugate_partner.is_none()
                && relative_distance(&conj, &sols[j].point) < tol.max(sols[i].tolerance).max(sols[j].tolerance)
        });
        match partner {
            Some(j) => {
                sols[i].conjugate_partner = Some(j);
                sols[j].conjugate_partner = Some(i);
            }
            None => unpaired += 1,
        }
    }
    unpaired
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RealClassification {
    pub num_real: usize,
    pub num_complex: usize,
    pub pairs: usize,
    pub unpaired: usize,
}

pub fn classify_real(set: &SolutionSet, cfg: &TrackerConfig) -> RealClassification {
    let mut sols = set.solutions.clone();
    for s in &mut sols {
        s.is_real = is_real_point(&s.point, cfg.real_tol.max(s.tolerance));
    }
    let unpaired = pair_conjugates(&mut sols, cfg.dedupe_tol);
    let num_real = sols.iter().filter(|s| s.is_real).count();
    let pairs = sols
        .iter()
        .enumerate()
        .filter(|(i, s)| s.conjugate_partner.is_some_and(|j| j > *i))
        .count();
    RealClassification {
        num_real,
        num_complex: sols.len() - num_real,
        pairs,
        unpaired,
    }
}
