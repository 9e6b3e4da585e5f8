//! Plant representations, classical rank tests, realization of a left matrix
//! fraction and the genericity verdict table.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratpoly::{rat, rat_int, Rat, RatMatrix, RatPoly, RatPolyMatrix};

/// Number of complex feedback laws of a generic square problem `n = mp`,
/// counted with multiplicity:
/// `1!·2!⋯(p-1)!·(mp)! / (m!·(m+1)!⋯(m+p-1)!)`.
pub fn schubert_degree(m: usize, p: usize) -> BigUint {
    assert!(m >= 1 && p >= 1, "schubert_degree needs m, p >= 1");
    let fact = |k: usize| (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(i));
    let num = (1..p).fold(fact(m * p), |acc, i| acc * fact(i));
    let den = (0..p).fold(BigUint::one(), |acc, j| acc * fact(m + j));
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Parity of the Schubert degree by the closed-form criterion: odd exactly
/// when `min(m,p) = 1`, or `min(m,p) = 2` and `max(m,p) + 1` is a power of two.
pub fn berstein_is_odd(m: usize, p: usize) -> bool {
    let (lo, hi) = (m.min(p), m.max(p));
    lo == 1 || (lo == 2 && (hi + 1).is_power_of_two())
}

fn check_shapes(
    a: &RatMatrix,
    other: &RatMatrix,
    other_is_input: bool,
    op: &'static str,
) -> Result<()> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::NotSquare {
            op,
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let ok = if other_is_input {
        other.rows() == n
    } else {
        other.cols() == n
    };
    if !ok {
        return Err(Error::DimensionMismatch {
            op,
            detail: format!(
                "A is {n}x{n} but the other matrix is {}x{}",
                other.rows(),
                other.cols()
            ),
        });
    }
    Ok(())
}

/// Kalman rank test on `[B AB … A^{n-1}B]`.
pub fn controllable(a: &RatMatrix, b: &RatMatrix) -> Result<bool> {
    check_shapes(a, b, true, "controllable")?;
    let n = a.rows();
    let mut block = b.clone();
    let mut krylov = b.clone();
    for _ in 1..n {
        block = a.mul(&block)?;
        krylov = krylov.hstack(&block)?;
    }
    Ok(krylov.rank() == n)
}

pub fn observable(a: &RatMatrix, c: &RatMatrix) -> Result<bool> {
    check_shapes(a, c, false, "observable")?;
    controllable(&a.transpose(), &c.transpose())
}

/// Single-output surjectivity test: with `d⁻¹(n_1, …, n_m)` a coprime
/// factorization, the pole placement map is onto iff the numerators span
/// the polynomials of degree at most `n-1`.
pub fn p1_surjective(d: &RatPoly, nums: &[RatPoly], n: usize) -> Result<bool> {
    if d.degree() != n as isize {
        return Err(Error::DegreeViolation(format!(
            "denominator has degree {}, expected {n}",
            d.degree()
        )));
    }
    if let Some(bad) = nums.iter().find(|q| q.degree() >= n as isize) {
        return Err(Error::DegreeViolation(format!(
            "numerator {bad} has degree >= {n}"
        )));
    }
    let rows: Vec<Vec<Rat>> = nums
        .iter()
        .map(|q| (0..n).map(|k| q.coeff(k)).collect())
        .collect();
    if rows.is_empty() {
        return Ok(n == 0);
    }
    Ok(RatMatrix::from_rows(rows)?.rank() == n)
}

/// Single-input case, reduced to [`p1_surjective`] on the transposed
/// transfer function (a column `n(s)/d(s)` transposes to a row).
pub fn m1_surjective(d: &RatPoly, nums: &[RatPoly], n: usize) -> Result<bool> {
    p1_surjective(d, nums, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Field {
    Real,
    AlgebraicallyClosed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    GenericallySurjective,
    NotGenericallySurjective,
    Unknown,
}

/// The result that justifies a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Authority {
    DimensionCount,
    BrockettByrnes,
    Wang,
    OddDegree,
    WillemsHesselink,
    PaperExample,
    KimConjectureOpen,
}

impl Authority {
    pub fn tag(self) -> &'static str {
        match self {
            Authority::DimensionCount => "DimensionCount",
            Authority::BrockettByrnes => "BrockettByrnes",
            Authority::Wang => "Wang",
            Authority::OddDegree => "OddDegree",
            Authority::WillemsHesselink => "WillemsHesselink",
            Authority::PaperExample => "PaperExample",
            Authority::KimConjectureOpen => "KimConjectureOpen",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityVerdict {
    pub verdict: Verdict,
    pub authority: Authority,
    /// Schubert degree when `n = mp`.
    pub degree: Option<BigUint>,
}

impl fmt::Display for GenericityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.verdict {
            Verdict::GenericallySurjective => {
                write!(f, "generically surjective [{}]", self.authority.tag())
            }
            Verdict::NotGenericallySurjective => {
                write!(f, "NOT generically surjective [{}]", self.authority.tag())
            }
            Verdict::Unknown => write!(f, "UNKNOWN [{}: conjectured NOT]", self.authority.tag()),
        }
    }
}

pub fn classify_genericity(m: usize, p: usize, n: usize, field: Field) -> Result<GenericityVerdict> {
    if m == 0 || p == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "m, p, n must be positive (got {m}, {p}, {n})"
        )));
    }
    let mp = m * p;
    let degree = (mp == n).then(|| schubert_degree(m, p));
    let (verdict, authority) = if mp < n {
        (Verdict::NotGenericallySurjective, Authority::DimensionCount)
    } else if field == Field::AlgebraicallyClosed {
        (Verdict::GenericallySurjective, Authority::BrockettByrnes)
    } else if mp > n {
        (Verdict::GenericallySurjective, Authority::Wang)
    } else if berstein_is_odd(m, p) {
        (Verdict::GenericallySurjective, Authority::OddDegree)
    } else if (m, p) == (2, 2) {
        (Verdict::NotGenericallySurjective, Authority::WillemsHesselink)
    } else if (m.max(p), m.min(p)) == (4, 2) {
        (Verdict::NotGenericallySurjective, Authority::PaperExample)
    } else {
        (Verdict::Unknown, Authority::KimConjectureOpen)
    };
    Ok(GenericityVerdict {
        verdict,
        authority,
        degree,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSpace {
    pub a: RatMatrix,
    pub b: RatMatrix,
    pub c: RatMatrix,
}

impl StateSpace {
    pub fn new(a: RatMatrix, b: RatMatrix, c: RatMatrix) -> Result<Self> {
        check_shapes(&a, &b, true, "StateSpace::new")?;
        check_shapes(&a, &c, false, "StateSpace::new")?;
        Ok(StateSpace { a, b, c })
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn inputs(&self) -> usize {
        self.b.cols()
    }

    pub fn outputs(&self) -> usize {
        self.c.rows()
    }

    /// `C (sI - A)⁻¹ B` at a rational point; `None` at an eigenvalue of `A`.
    pub fn transfer_at(&self, s: &Rat) -> Result<Option<RatMatrix>> {
        let n = self.n();
        let mut si = RatMatrix::identity(n);
        for i in 0..n {
            si.set(i, i, s.clone());
        }
        let pencil = si.sub(&self.a)?;
        let Some(x) = pencil.solve(&self.b)? else {
            return Ok(None);
        };
        Ok(Some(self.c.mul(&x)?))
    }
}

/// A left matrix fraction `D(s)⁻¹ N(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mfd {
    pub d: RatPolyMatrix,
    pub n: RatPolyMatrix,
}

impl Mfd {
    pub fn new(d: RatPolyMatrix, n: RatPolyMatrix) -> Result<Self> {
        if d.rows() != d.cols() {
            return Err(Error::NotSquare {
                op: "Mfd::new",
                rows: d.rows(),
                cols: d.cols(),
            });
        }
        if n.rows() != d.rows() || n.cols() == 0 {
            return Err(Error::DimensionMismatch {
                op: "Mfd::new",
                detail: format!(
                    "D is {}x{} but N is {}x{}",
                    d.rows(),
                    d.cols(),
                    n.rows(),
                    n.cols()
                ),
            });
        }
        Ok(Mfd { d, n })
    }

    pub fn transfer_at(&self, s: &Rat) -> Result<Option<RatMatrix>> {
        self.d.eval(s).solve(&self.n.eval(s))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    StateSpaceGiven,
    MfdGiven,
    /// MFD given, state space derived by realization.
    MfdGivenRealized,
    BothGiven,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlantModel {
    pub n: usize,
    pub m: usize,
    pub p: usize,
    pub state_space: Option<StateSpace>,
    pub mfd: Option<Mfd>,
    pub provenance: Provenance,
}

fn mfd_order(mfd: &Mfd) -> Result<usize> {
    let deg = mfd.d.det()?.degree();
    if deg < 1 {
        return Err(Error::ImproperPlant(format!(
            "det D has degree {deg}; need at least 1"
        )));
    }
    Ok(deg as usize)
}

impl PlantModel {
    pub fn from_mfd(d: RatPolyMatrix, n: RatPolyMatrix) -> Result<Self> {
        let mfd = Mfd::new(d, n)?;
        let order = mfd_order(&mfd)?;
        Ok(PlantModel {
            n: order,
            m: mfd.n.cols(),
            p: mfd.d.rows(),
            state_space: None,
            mfd: Some(mfd),
            provenance: Provenance::MfdGiven,
        })
    }

    pub fn from_state_space(ss: StateSpace) -> Result<Self> {
        if ss.n() == 0 {
            return Err(Error::ImproperPlant("state dimension is zero".into()));
        }
        Ok(PlantModel {
            n: ss.n(),
            m: ss.inputs(),
            p: ss.outputs(),
            state_space: Some(ss),
            mfd: None,
            provenance: Provenance::StateSpaceGiven,
        })
    }

    /// Both representations; they must describe the same transfer function.
    pub fn from_both(ss: StateSpace, mfd: Mfd) -> Result<Self> {
        let order = mfd_order(&mfd)?;
        if ss.n() != order || ss.inputs() != mfd.n.cols() || ss.outputs() != mfd.d.rows() {
            return Err(Error::DimensionMismatch {
                op: "PlantModel::from_both",
                detail: format!(
                    "state space (n={}, m={}, p={}) vs MFD (n={order}, m={}, p={})",
                    ss.n(),
                    ss.inputs(),
                    ss.outputs(),
                    mfd.n.cols(),
                    mfd.d.rows()
                ),
            });
        }
        let plant = PlantModel {
            n: order,
            m: ss.inputs(),
            p: ss.outputs(),
            state_space: Some(ss),
            mfd: Some(mfd),
            provenance: Provenance::BothGiven,
        };
        if !transfer_consistency(&plant)? {
            return Err(Error::InvalidArgument(
                "state space and MFD transfer functions disagree".into(),
            ));
        }
        Ok(plant)
    }

    /// Attach an observer-form realization to an MFD-only plant.
    pub fn with_realization(mut self) -> Result<Self> {
        if self.state_space.is_some() {
            return Ok(self);
        }
        let mfd = self
            .mfd
            .as_ref()
            .ok_or_else(|| Error::Internal("plant without any representation".into()))?;
        self.state_space = Some(realize_left_mfd(&mfd.d, &mfd.n)?);
        self.provenance = Provenance::MfdGivenRealized;
        Ok(self)
    }
}

/// Candidate sample points `1, -1, 2, -2, …, 1/2, -1/2, 3/2, …`.
fn sample_candidates() -> impl Iterator<Item = Rat> {
    (1..=40i64)
        .flat_map(|k| [rat_int(k), rat_int(-k)])
        .chain((1..=40i64).flat_map(|k| [rat(2 * k - 1, 2), rat(1 - 2 * k, 2)]))
        .chain((1..=200i64).map(|k| rat(k, 7919)))
}

const CONSISTENCY_SAMPLES: usize = 5;

/// Exact agreement of `C(sI-A)⁻¹B` and `D⁻¹N` at five sample points that
/// are poles of neither representation.
pub fn transfer_consistency(plant: &PlantModel) -> Result<bool> {
    let (Some(ss), Some(mfd)) = (&plant.state_space, &plant.mfd) else {
        return Err(Error::InvalidArgument(
            "transfer consistency needs both representations".into(),
        ));
    };
    if ss.outputs() != mfd.d.rows() || ss.inputs() != mfd.n.cols() {
        return Ok(false);
    }
    let mut checked = 0;
    for s in sample_candidates() {
        let (Some(g_ss), Some(g_mfd)) = (ss.transfer_at(&s)?, mfd.transfer_at(&s)?) else {
            continue;
        };
        if g_ss != g_mfd {
            return Ok(false);
        }
        checked += 1;
        if checked == CONSISTENCY_SAMPLES {
            return Ok(true);
        }
    }
    Err(Error::Internal(
        "ran out of sample points avoiding the poles".into(),
    ))
}

/// Leading row-coefficient matrix: entry `(i,j)` is the coefficient of
/// `s^{ν_i}` in `D_{ij}`, where `ν_i` is the degree of row `i`.
pub fn leading_row_coefficients(d: &RatPolyMatrix) -> RatMatrix {
    let mut hr = RatMatrix::zeros(d.rows(), d.cols());
    for i in 0..d.rows() {
        let nu = d.row_degree(i);
        if nu < 0 {
            continue;
        }
        for j in 0..d.cols() {
            hr.set(i, j, d.get(i, j).coeff(nu as usize));
        }
    }
    hr
}

/// Bring `D` to row-reduced form by unimodular row operations applied to
/// `[D N]` jointly, so the fraction `D⁻¹N` is unchanged.
pub fn row_reduce(d: &RatPolyMatrix, n: &RatPolyMatrix) -> Result<(RatPolyMatrix, RatPolyMatrix)> {
    let p = d.rows();
    let mut dn = d.hstack(n)?;
    let dcols: Vec<usize> = (0..p).collect();
    let ncols: Vec<usize> = (p..dn.cols()).collect();
    loop {
        let dpart = dn.select_columns(&dcols);
        if (0..p).any(|i| dpart.row_degree(i) < 0) {
            return Err(Error::Unsupported("D has a zero row; det D = 0".into()));
        }
        let hr = leading_row_coefficients(&dpart);
        let Some(c) = hr.left_null_vector() else {
            return Ok((dpart, dn.select_columns(&ncols)));
        };
        let degs: Vec<isize> = (0..p).map(|i| dpart.row_degree(i)).collect();
        let k = (0..p)
            .filter(|&i| !c[i].is_zero())
            .max_by_key(|&i| (degs[i], std::cmp::Reverse(i)))
            .expect("null vector is nonzero");
        let mut new_row: Vec<RatPoly> = vec![RatPoly::zero(); dn.cols()];
        for i in (0..p).filter(|&i| !c[i].is_zero()) {
            let shift = RatPoly::monomial(c[i].clone(), (degs[k] - degs[i]) as usize);
            for (j, slot) in new_row.iter_mut().enumerate() {
                *slot = &*slot + &(&shift * dn.get(i, j));
            }
        }
        for (j, v) in new_row.into_iter().enumerate() {
            dn.set(k, j, v);
        }
    }
}

/// Observer-form realization of a strictly proper left fraction `D⁻¹N`.
///
/// `D` is first row-reduced. With row degrees `ν_i ≥ 1` and the leading
/// row-coefficient matrix `D_hr` invertible, the realization is the
/// transpose of the controller form of `Nᵀ D⁻ᵀ`, of order `Σ ν_i = deg det D`,
/// and `det(sI - A) = det D / det D_hr`.
pub fn realize_left_mfd(d: &RatPolyMatrix, n: &RatPolyMatrix) -> Result<StateSpace> {
    let mfd = Mfd::new(d.clone(), n.clone())?;
    let order = {
        let deg = d.det()?.degree();
        if deg < 1 {
            return Err(Error::ImproperPlant(format!(
                "det D has degree {deg}; need at least 1"
            )));
        }
        deg as usize
    };
    let (dr, nr) = row_reduce(d, n)?;
    let p = dr.rows();
    let m = nr.cols();
    let nu: Vec<usize> = (0..p).map(|i| dr.row_degree(i) as usize).collect();
    if nu.iter().sum::<usize>() != order {
        return Err(Error::Internal(
            "row-reduced degrees do not add up to deg det D".into(),
        ));
    }
    if let Some(i) = (0..p).find(|&i| nu[i] == 0) {
        return Err(Error::Unsupported(format!(
            "row {i} of the row-reduced D is constant"
        )));
    }
    if let Some(i) = (0..p).find(|&i| nr.row_degree(i) >= nu[i] as isize) {
        return Err(Error::Unsupported(format!(
            "D⁻¹N is not strictly proper (row {i} of N has degree >= {})",
            nu[i]
        )));
    }
    let hr = leading_row_coefficients(&dr);
    let hc = hr.transpose();
    let offsets: Vec<usize> = nu
        .iter()
        .scan(0, |acc, &v| {
            let o = *acc;
            *acc += v;
            Some(o)
        })
        .collect();

    // Controller form of the right fraction Nᵀ (Dᵀ)⁻¹; state position k of
    // block i carries s^{ν_i-1-k} times the i-th pseudo-state.
    let mut lc = RatMatrix::zeros(p, order);
    let mut n_lc = RatMatrix::zeros(m, order);
    let mut a0 = RatMatrix::zeros(order, order);
    let mut b0 = RatMatrix::zeros(order, p);
    for i in 0..p {
        b0.set(offsets[i], i, Rat::one());
        for k in 0..nu[i] {
            let col = offsets[i] + k;
            let power = nu[i] - 1 - k;
            if k + 1 < nu[i] {
                a0.set(col + 1, col, Rat::one());
            }
            for r in 0..p {
                lc.set(r, col, dr.get(i, r).coeff(power));
            }
            for r in 0..m {
                n_lc.set(r, col, nr.get(i, r).coeff(power));
            }
        }
    }
    let hc_inv = hc
        .solve(&RatMatrix::identity(p))?
        .ok_or_else(|| Error::Internal("row-reduced D has singular leading coefficients".into()))?;
    let bc = b0.mul(&hc_inv)?;
    let ac = a0.sub(&bc.mul(&lc)?)?;

    let ss = StateSpace::new(ac.transpose(), n_lc.transpose(), bc.transpose())?;
    let plant = PlantModel {
        n: order,
        m,
        p,
        state_space: Some(ss.clone()),
        mfd: Some(mfd),
        provenance: Provenance::MfdGivenRealized,
    };
    if !transfer_consistency(&plant)? {
        return Err(Error::Internal(
            "realization does not reproduce D⁻¹N at the sample points".into(),
        ));
    }
    Ok(ss)
}
