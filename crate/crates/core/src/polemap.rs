//! The pole placement map `χ(K) = det(sI - A - BKC)` and the square fiber
//! system whose zero set is `χ⁻¹(φ)`.
//!
//! Gains are `m×p` and the unknowns of a fiber system are the entries of `K`
//! in row-major order. In fraction form `χ(K) = det(D - NK) / lead(det D)`,
//! which by the Plücker expansion is `Σ_α g_α(s)·k_α(-K)` normalized, where
//! `k_α(-K)` is the minor of `[K I]` on the complement of `α`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homotopy::PolySystem;
use crate::linalg;
use crate::multipoly::{self, monomials_up_to, RatMultiPoly};
use crate::plucker::{plucker_of_mfd, PluckerSystem};
use crate::ratpoly::{parse_rat, rat_int, Rat, RatMatrix, RatPoly, RatPolyMatrix};
use crate::sysmodel::{PlantModel, StateSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TargetForm {
    Roots,
    Coeffs,
}

/// A monic closed-loop target polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetPoly {
    roots: Option<Vec<Rat>>,
    poly: RatPoly,
    form: TargetForm,
}

impl TargetPoly {
    pub fn from_roots(roots: Vec<Rat>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidTarget("no roots given".into()));
        }
        let poly = RatPoly::from_roots(&roots);
        Ok(TargetPoly {
            roots: Some(roots),
            poly,
            form: TargetForm::Roots,
        })
    }

    pub fn from_int_roots(roots: &[i64]) -> Result<Self> {
        Self::from_roots(roots.iter().map(|&r| rat_int(r)).collect())
    }

    /// Any nonconstant polynomial; it is divided by its leading coefficient.
    pub fn from_coeffs(poly: RatPoly) -> Result<Self> {
        if poly.degree() < 1 {
            return Err(Error::InvalidTarget(format!(
                "target must have degree >= 1, got {}",
                poly.degree()
            )));
        }
        Ok(TargetPoly {
            roots: None,
            poly: poly.monic(),
            form: TargetForm::Coeffs,
        })
    }

    /// Parse a comma-separated list of rational roots such as `-8,-6,1/2`.
    pub fn parse_roots(text: &str) -> Result<Self> {
        let roots = text
            .split(',')
            .enumerate()
            .map(|(i, r)| {
                parse_rat(r).map_err(|message| Error::Parse {
                    location: format!("root {i}"),
                    message,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_roots(roots)
    }

    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    pub fn roots(&self) -> Option<&[Rat]> {
        self.roots.as_deref()
    }

    pub fn form(&self) -> TargetForm {
        self.form
    }

    pub fn degree(&self) -> usize {
        self.poly.degree() as usize
    }

    pub fn has_distinct_roots(&self) -> bool {
        match &self.roots {
            None => false,
            Some(r) => r
                .iter()
                .enumerate()
                .all(|(i, a)| r[i + 1..].iter().all(|b| a != b)),
        }
    }
}

fn check_gain_shape(rows: usize, cols: usize, m: usize, p: usize, op: &'static str) -> Result<()> {
    if rows != m || cols != p {
        return Err(Error::DimensionMismatch {
            op,
            detail: format!("K must be {m}x{p}, got {rows}x{cols}"),
        });
    }
    Ok(())
}

/// `det(sI - A - BKC)` for a rational gain, exactly.
pub fn chi_state(ss: &StateSpace, k: &RatMatrix) -> Result<RatPoly> {
    check_gain_shape(k.rows(), k.cols(), ss.inputs(), ss.outputs(), "chi_state")?;
    let closed = ss.a.add(&ss.b.mul(&k.mul(&ss.c)?)?)?;
    let n = ss.n();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut e = RatPoly::constant(-closed.get(i, j).clone());
            if i == j {
                e = &e + &RatPoly::s();
            }
            entries.push(e);
        }
    }
    RatPolyMatrix::new(n, n, entries)?.det()
}

/// Floating `det(sI - A - BKC)` for a complex gain; ascending coefficients.
pub fn chi_state_complex(ss: &StateSpace, k: &[Vec<Complex64>]) -> Result<Vec<Complex64>> {
    check_gain_shape(
        k.len(),
        k.first().map_or(0, Vec::len),
        ss.inputs(),
        ss.outputs(),
        "chi_state",
    )?;
    let a = linalg::to_dmatrix(&ss.a.to_complex_rows());
    let b = linalg::to_dmatrix(&ss.b.to_complex_rows());
    let c = linalg::to_dmatrix(&ss.c.to_complex_rows());
    let kk = linalg::to_dmatrix(k);
    let closed: DMatrix<Complex64> = a + b * kk * c;
    Ok(linalg::char_poly(&closed))
}

/// `χ(K)` from Plücker data: `Σ g_α k_α(-K)` divided by `lead(det D)`.
pub fn chi_plucker(sys: &PluckerSystem, k: &RatMatrix) -> Result<RatPoly> {
    Ok(sys.closed_loop(&k.neg())?.monic())
}

pub fn chi_plucker_complex(sys: &PluckerSystem, k: &[Vec<Complex64>]) -> Result<Vec<Complex64>> {
    let neg: Vec<Vec<Complex64>> = k.iter().map(|r| r.iter().map(|v| -v).collect()).collect();
    let raw = sys.closed_loop_complex(&neg)?;
    let lead = crate::ratpoly::rat_to_f64(&sys.g[0].leading());
    Ok(raw.into_iter().map(|c| c / lead).collect())
}

/// `χ(K)` for a plant given as `D⁻¹N`.
pub fn chi_mfd(d: &RatPolyMatrix, n: &RatPolyMatrix, k: &RatMatrix) -> Result<RatPoly> {
    chi_plucker(&plucker_of_mfd(d, n)?, k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FiberMode {
    /// One equation `χ(K)(s_i) = 0` per root of the target.
    RootEval,
    /// One equation per non-leading coefficient of `χ(K) - φ`.
    CoeffMatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FiberSource {
    Plucker,
    /// Coefficients fitted exactly from `det(sI - A - BKC)` on a unisolvent lattice.
    StateSpace,
}

/// Square polynomial system in the `mp` entries of `K` (row-major).
#[derive(Clone, Debug)]
pub struct FiberSystem {
    pub m: usize,
    pub p: usize,
    pub n: usize,
    pub mode: FiberMode,
    pub source: FiberSource,
    /// Exact equations over ℚ.
    pub exact: Vec<RatMultiPoly>,
    /// The same equations converted once to complex floats.
    pub system: PolySystem,
    pub degrees: Vec<usize>,
    /// Per-equation coefficient norm used for residual normalization.
    pub scale: Vec<f64>,
}

impl FiberSystem {
    pub fn num_vars(&self) -> usize {
        self.m * self.p
    }

    pub fn is_square(&self) -> bool {
        self.n == self.m * self.p
    }

    pub fn residuals(&self, k: &[Complex64]) -> Vec<Complex64> {
        self.system.eval(k)
    }

    pub fn normalized_residual(&self, k: &[Complex64]) -> f64 {
        self.system.normalized_residual(k)
    }

    /// Flatten an `m×p` gain into the unknown vector.
    pub fn flatten(k: &[Vec<Complex64>]) -> Vec<Complex64> {
        k.iter().flatten().copied().collect()
    }
}

/// `k_α(-K)` for every `α`, as polynomials in the entries of `K`.
pub fn compensator_minor_polys(m: usize, p: usize, sys: &PluckerSystem) -> Vec<RatMultiPoly> {
    let nvars = m * p;
    let total = m + p;
    sys.subsets
        .iter()
        .map(|a| {
            let cols = a.complement(total);
            let block: Vec<Vec<RatMultiPoly>> = (0..m)
                .map(|i| {
                    cols.iter()
                        .map(|&c| {
                            if c < p {
                                RatMultiPoly::var(nvars, i * p + c)
                            } else if c - p == i {
                                RatMultiPoly::constant(nvars, Rat::one())
                            } else {
                                RatMultiPoly::zero(nvars)
                            }
                        })
                        .collect()
                })
                .collect();
            multipoly::det(&block, nvars)
        })
        .collect()
}

fn check_target(plant_n: usize, target: &TargetPoly, mode: FiberMode) -> Result<()> {
    if target.degree() != plant_n {
        return Err(Error::InvalidTarget(format!(
            "target has degree {} but the plant has order {plant_n}",
            target.degree()
        )));
    }
    if mode == FiberMode::RootEval && !target.has_distinct_roots() {
        return Err(Error::InvalidTarget(
            "RootEval needs pairwise distinct explicit roots; use CoeffMatch for repeated roots"
                .into(),
        ));
    }
    Ok(())
}

fn finish(
    m: usize,
    p: usize,
    n: usize,
    mode: FiberMode,
    source: FiberSource,
    exact: Vec<RatMultiPoly>,
) -> FiberSystem {
    let system = PolySystem::from_exact(m * p, &exact);
    let degrees = system.degrees();
    let scale = system.scales();
    FiberSystem {
        m,
        p,
        n,
        mode,
        source,
        exact,
        system,
        degrees,
        scale,
    }
}

/// Fiber system from Plücker data.
pub fn fiber_from_plucker(sys: &PluckerSystem, target: &TargetPoly, mode: FiberMode) -> Result<FiberSystem> {
    check_target(sys.n, target, mode)?;
    let (m, p, n) = (sys.m, sys.p, sys.n);
    let nvars = m * p;
    let lead_inv = sys.g[0].leading().recip();
    let g: Vec<RatPoly> = sys.g.iter().map(|gi| gi.scale(&lead_inv)).collect();
    let kpolys = compensator_minor_polys(m, p, sys);
    let combine = |weights: &[Rat], constant: Rat| {
        let mut eq = RatMultiPoly::constant(nvars, constant);
        for (w, kp) in weights.iter().zip(&kpolys) {
            if !w.is_zero() {
                eq = eq.add(&kp.scale(w));
            }
        }
        eq
    };
    let exact: Vec<RatMultiPoly> = match mode {
        FiberMode::RootEval => target
            .roots()
            .expect("checked above")
            .iter()
            .map(|s| {
                let w: Vec<Rat> = g.iter().map(|gi| gi.eval(s)).collect();
                combine(&w, Rat::zero())
            })
            .collect(),
        FiberMode::CoeffMatch => (0..n)
            .map(|j| {
                let w: Vec<Rat> = g.iter().map(|gi| gi.coeff(j)).collect();
                combine(&w, -target.poly().coeff(j))
            })
            .collect(),
    };
    Ok(finish(m, p, n, mode, FiberSource::Plucker, exact))
}

/// Fiber system straight from `(A, B, C)`. Each equation is a polynomial of
/// total degree at most `min(m,p)` in the gain entries; its coefficients are
/// recovered exactly from values of `det(sI - A - BKC)` on the lattice
/// `{e : |e| ≤ min(m,p)}`, which is unisolvent for that degree.
pub fn fiber_from_state_space(ss: &StateSpace, target: &TargetPoly, mode: FiberMode) -> Result<FiberSystem> {
    let (m, p, n) = (ss.inputs(), ss.outputs(), ss.n());
    check_target(n, target, mode)?;
    let nvars = m * p;
    let monos = monomials_up_to(nvars, m.min(p));
    let gain_of = |e: &[u8]| {
        let data = e.iter().map(|&v| rat_int(v as i64)).collect();
        RatMatrix::new(m, p, data)
    };
    // rows: lattice points, columns: monomials
    let mut vander = RatMatrix::zeros(monos.len(), monos.len());
    let mut values: Vec<RatPoly> = Vec::with_capacity(monos.len());
    for (i, pt) in monos.iter().enumerate() {
        for (j, mono) in monos.iter().enumerate() {
            let v = pt
                .iter()
                .zip(mono)
                .fold(Rat::one(), |acc, (&x, &k)| acc * num_traits::pow(rat_int(x as i64), k as usize));
            vander.set(i, j, v);
        }
        values.push(chi_state(ss, &gain_of(pt)?)?);
    }
    let rhs_rows: Vec<Vec<Rat>> = match mode {
        FiberMode::RootEval => {
            let roots = target.roots().expect("checked above");
            values
                .iter()
                .map(|chi| roots.iter().map(|s| chi.eval(s)).collect())
                .collect()
        }
        FiberMode::CoeffMatch => values
            .iter()
            .map(|chi| {
                (0..n)
                    .map(|j| chi.coeff(j) - target.poly().coeff(j))
                    .collect()
            })
            .collect(),
    };
    let rhs = RatMatrix::from_rows(rhs_rows)?;
    let coeffs = vander
        .solve(&rhs)?
        .ok_or_else(|| Error::Internal("interpolation lattice is not unisolvent".into()))?;
    let exact = (0..rhs.cols())
        .map(|eq| {
            let mut poly = RatMultiPoly::zero(nvars);
            for (j, mono) in monos.iter().enumerate() {
                poly.add_term(mono.clone(), coeffs.get(j, eq).clone());
            }
            poly
        })
        .collect();
    Ok(finish(m, p, n, mode, FiberSource::StateSpace, exact))
}

/// Build the fiber system of `plant` over `target`, preferring the fraction
/// form when it is available.
pub fn build_fiber_system(plant: &PlantModel, target: &TargetPoly, mode: FiberMode) -> Result<FiberSystem> {
    if let Some(mfd) = &plant.mfd {
        let sys = plucker_of_mfd(&mfd.d, &mfd.n)?;
        return fiber_from_plucker(&sys, target, mode);
    }
    match &plant.state_space {
        Some(ss) => fiber_from_state_space(ss, target, mode),
        None => Err(Error::Internal("plant without any representation".into())),
    }
}
