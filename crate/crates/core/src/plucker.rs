//! Plücker data of a plant `[D(s) N(s)]` and of a compensator `[-K I]`.
//!
//! For a `p×p` block `D` and `p×m` block `N`, the closed-loop block
//! determinant expands by Laplace along the first `p` rows:
//!
//! ```text
//! det [[D, N], [-K, I]] = Σ_α g_α(s) · k_α
//! ```
//!
//! where `α` runs over the `p`-subsets of the `m+p` columns, `g_α` is the
//! signed `p×p` minor of `[D N]` on `α` and `k_α` is the `m×m` minor of
//! `[-K I]` on the complementary columns. Subsets are ordered
//! lexicographically, so `ᾱ = {0,…,p-1}` (the columns of `D`) comes first.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::ratpoly::{combinations, Rat, RatMatrix, RatPoly, RatPolyMatrix};

/// A `p`-subset of the column positions `{0, …, m+p-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetIndex {
    pub members: Vec<usize>,
    /// Rank in the lexicographic ordering of all `p`-subsets.
    pub ordinal: usize,
}

impl SubsetIndex {
    /// Columns not in the subset, ascending.
    pub fn complement(&self, total: usize) -> Vec<usize> {
        (0..total).filter(|c| !self.members.contains(c)).collect()
    }
}

pub fn enumerate_subsets(m: usize, p: usize) -> Vec<SubsetIndex> {
    combinations(m + p, p)
        .into_iter()
        .enumerate()
        .map(|(ordinal, members)| SubsetIndex { members, ordinal })
        .collect()
}

/// Laplace sign pairing the minor of the first `p` rows on `α` with the
/// minor of the last `m` rows on the complement of `α`.
pub fn complement_sign(alpha: &SubsetIndex, p: usize) -> i32 {
    let total: usize = alpha.members.iter().sum::<usize>() + (0..p).sum::<usize>();
    if total.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug)]
pub struct PluckerSystem {
    pub m: usize,
    pub p: usize,
    /// Degree of `det D`, the McMillan degree of the plant.
    pub n: usize,
    pub subsets: Vec<SubsetIndex>,
    /// `g[α.ordinal]`, already multiplied by the complement sign.
    pub g: Vec<RatPoly>,
    pub alpha_bar: SubsetIndex,
    /// Dimension of the ambient projective space, `C(m+p, p) - 1`.
    pub n_proj: usize,
}

/// Plücker coordinates of `[D(s) N(s)]`.
pub fn plucker_of_mfd(d: &RatPolyMatrix, n_mat: &RatPolyMatrix) -> Result<PluckerSystem> {
    let p = d.rows();
    if d.cols() != p {
        return Err(Error::NotSquare {
            op: "plucker_of_mfd",
            rows: d.rows(),
            cols: d.cols(),
        });
    }
    if n_mat.rows() != p {
        return Err(Error::DimensionMismatch {
            op: "plucker_of_mfd",
            detail: format!("D has {p} rows but N has {}", n_mat.rows()),
        });
    }
    let m = n_mat.cols();
    if m == 0 {
        return Err(Error::DimensionMismatch {
            op: "plucker_of_mfd",
            detail: "N has no columns".into(),
        });
    }
    let dn = d.hstack(n_mat)?;
    let subsets = enumerate_subsets(m, p);
    let mut g = Vec::with_capacity(subsets.len());
    for alpha in &subsets {
        let minor = dn.select_columns(&alpha.members).det()?;
        g.push(if complement_sign(alpha, p) > 0 {
            minor
        } else {
            -minor
        });
    }
    let alpha_bar = subsets[0].clone();
    let deg = g[0].degree();
    if deg < 1 {
        return Err(Error::ImproperPlant(format!(
            "det D has degree {deg}; need at least 1"
        )));
    }
    let n = deg as usize;
    if let Some((i, gi)) = g
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, gi)| gi.degree() >= deg)
    {
        return Err(Error::ImproperPlant(format!(
            "Plücker coordinate {:?} has degree {} >= deg det D = {n}; D^-1 N is not strictly proper",
            subsets[i].members,
            gi.degree()
        )));
    }
    let n_proj = subsets.len() - 1;
    Ok(PluckerSystem {
        m,
        p,
        n,
        subsets,
        g,
        alpha_bar,
        n_proj,
    })
}

impl PluckerSystem {
    fn check_gain(&self, rows: usize, cols: usize) -> Result<()> {
        if rows != self.m || cols != self.p {
            return Err(Error::DimensionMismatch {
                op: "closed_loop_from_plucker",
                detail: format!("K must be {}x{}, got {rows}x{cols}", self.m, self.p),
            });
        }
        Ok(())
    }

    /// `k_α` for every subset: the `m×m` minors of `[-K I]` on the complement.
    pub fn compensator_coordinates(&self, k: &RatMatrix) -> Result<Vec<Rat>> {
        self.check_gain(k.rows(), k.cols())?;
        let comp = k.neg().hstack(&RatMatrix::identity(self.m))?;
        self.subsets
            .iter()
            .map(|a| comp.select_columns(&a.complement(self.m + self.p)).det())
            .collect()
    }

    pub fn compensator_coordinates_complex(&self, k: &[Vec<Complex64>]) -> Result<Vec<Complex64>> {
        self.check_gain(k.len(), k.first().map_or(0, Vec::len))?;
        let total = self.m + self.p;
        Ok(self
            .subsets
            .iter()
            .map(|a| {
                let cols = a.complement(total);
                let block: Vec<Vec<Complex64>> = (0..self.m)
                    .map(|i| {
                        cols.iter()
                            .map(|&c| {
                                if c < self.p {
                                    -k[i][c]
                                } else if c - self.p == i {
                                    Complex64::one()
                                } else {
                                    Complex64::zero()
                                }
                            })
                            .collect()
                    })
                    .collect();
                linalg::complex_det(&block)
            })
            .collect())
    }

    /// `Σ_α g_α(s) k_α` with `k_α` taken from `[-K I]`; equals
    /// `det [[D, N], [-K, I]]` exactly.
    pub fn closed_loop(&self, k: &RatMatrix) -> Result<RatPoly> {
        let ks = self.compensator_coordinates(k)?;
        Ok(self
            .g
            .iter()
            .zip(&ks)
            .filter(|(_, ka)| !ka.is_zero())
            .fold(RatPoly::zero(), |acc, (g, ka)| &acc + &g.scale(ka)))
    }

    /// Floating counterpart of [`closed_loop`](Self::closed_loop); returns
    /// ascending coefficients of length `n + 1`.
    pub fn closed_loop_complex(&self, k: &[Vec<Complex64>]) -> Result<Vec<Complex64>> {
        let ks = self.compensator_coordinates_complex(k)?;
        let mut out = vec![Complex64::zero(); self.n + 1];
        for (g, ka) in self.g.iter().zip(&ks) {
            for (j, c) in g.to_f64_coeffs().into_iter().enumerate() {
                out[j] += ka * c;
            }
        }
        Ok(out)
    }
}

/// The center of the central projection, described by the coefficient
/// matrix of the `g_α`.
#[derive(Clone, Debug)]
pub struct CenterSubspace {
    /// `C(m+p,p) × (n+1)`; row `α` holds the coefficients of `g_α`.
    pub coeff_matrix: RatMatrix,
    pub rank: usize,
    /// Projective dimension of `E`; `-1` means empty.
    pub dim_e: isize,
    pub n_proj: usize,
    pub n: usize,
}

impl CenterSubspace {
    /// The smallest possible dimension, `N - n - 1`.
    pub fn expected_dim(&self) -> isize {
        self.n_proj as isize - self.n as isize - 1
    }

    /// True when the `g_α` span all polynomials of degree at most `n`, which
    /// is necessary for the pole placement map to be onto.
    pub fn has_full_span(&self) -> bool {
        self.rank == self.n + 1
    }
}

pub fn center_subspace(sys: &PluckerSystem) -> CenterSubspace {
    let rows: Vec<Vec<Rat>> = sys
        .g
        .iter()
        .map(|g| (0..=sys.n).map(|k| g.coeff(k)).collect())
        .collect();
    let coeff_matrix = RatMatrix::from_rows(rows).expect("rows have equal length");
    let rank = coeff_matrix.rank();
    CenterSubspace {
        coeff_matrix,
        rank,
        dim_e: sys.n_proj as isize - rank as isize,
        n_proj: sys.n_proj,
        n: sys.n,
    }
}

/// `[[D, N], [-K, I]]` as a polynomial matrix.
pub fn feedback_block(
    d: &RatPolyMatrix,
    n_mat: &RatPolyMatrix,
    k: &RatMatrix,
) -> Result<RatPolyMatrix> {
    let top = d.hstack(n_mat)?;
    let bottom = RatPolyMatrix::from_constant(&k.neg().hstack(&RatMatrix::identity(k.rows()))?);
    top.vstack(&bottom)
}
