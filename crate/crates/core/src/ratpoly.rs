//! Exact arithmetic over ℚ: scalars, univariate polynomials in `s`, constant
//! matrices and polynomial matrices.
//!
//! Everything symbolic in the crate (the blocks `D(s)`, `N(s)`, their minors,
//! characteristic polynomials) is computed here without rounding. The only
//! place floats enter is the explicit `to_complex_*` conversions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always stored reduced with a positive denominator.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    // Large numerators/denominators overflow f64 individually, so fall back
    // to a scaled division when the naive path fails.
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(900);
            let n = (r.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (r.denom() >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

/// Parse `"7"`, `"-3"` or `"5/12"` into a rational.
pub fn parse_rat(text: &str) -> std::result::Result<Rat, String> {
    let t = text.trim();
    let parse_int = |x: &str| {
        x.trim()
            .parse::<BigInt>()
            .map_err(|_| format!("not an integer: {x:?}"))
    };
    match t.split_once('/') {
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(format!("zero denominator in {t:?}"));
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(parse_int(t)?)),
    }
}

pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// All `k`-subsets of `{0, …, n-1}` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // rightmost position that can still advance
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Univariate polynomial over ℚ, coefficients in ascending degree order.
///
/// The zero polynomial is the empty coefficient vector and has degree `-1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `s`.
    pub fn s() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn monomial(c: Rat, degree: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// `∏ (s − r)` over the given roots.
    pub fn from_roots(roots: &[Rat]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            &acc * &Self::new(vec![-r.clone(), Rat::one()])
        })
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `s^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divide through by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lead) => {
                let inv = lead.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + rat_to_f64(c))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rat_to_f64).collect()
    }

    /// Formal derivative.
    pub fn diff(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat_int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &RatPoly) -> Option<(RatPoly, RatPoly)> {
        if divisor.is_zero() {
            return None;
        }
        let dd = divisor.degree() as usize;
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        if self.degree() < divisor.degree() {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RatPoly) -> Result<RatPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Human-readable form in the variable `var`, highest degree first.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag_s = format_rat(&mag);
            match k {
                0 => out.push_str(&mag_s),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&mag_s);
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push('^');
                        out.push_str(&k.to_string());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({})", self.pretty("s"))
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("s"))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

/// Exact interpolation through `(x_i, y_i)` by Newton divided differences.
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> RatPoly {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut poly = RatPoly::zero();
    for i in (0..n).rev() {
        let factor = RatPoly::new(vec![-xs[i].clone(), Rat::one()]);
        poly = &(&poly * &factor) + &RatPoly::constant(dd[i].clone());
    }
    poly
}

/// The interpolation nodes `0, 1, -1, 2, -2, …`.
pub fn interpolation_nodes(count: usize) -> Vec<Rat> {
    (0..count)
        .map(|i| {
            let k = i.div_ceil(2) as i64;
            if i % 2 == 1 {
                rat_int(k)
            } else {
                rat_int(-k)
            }
        })
        .collect()
}

/// Dense matrix over ℚ, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "RatMatrix::new",
                detail: format!("{} entries for {rows}x{cols}", data.len()),
            });
        }
        Ok(RatMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let data = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged integer matrix");
                row.iter().map(|&v| rat_int(v))
            })
            .collect();
        RatMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                op: "RatMatrix::from_rows",
                detail: "ragged rows".into(),
            });
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn add(&self, other: &RatMatrix) -> Result<Self> {
        self.same_shape(other, "RatMatrix::add")?;
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<Self> {
        self.same_shape(other, "RatMatrix::sub")?;
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    fn same_shape(&self, other: &RatMatrix, op: &'static str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op,
                detail: format!(
                    "{}x{} vs {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "RatMatrix::mul",
                detail: format!(
                    "{}x{} times {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Columns `cols` of `self`, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn hstack(&self, other: &RatMatrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                op: "RatMatrix::hstack",
                detail: format!("{} rows vs {} rows", self.rows, other.rows),
            });
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols,
            data,
        })
    }

    pub fn vstack(&self, other: &RatMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op: "RatMatrix::vstack",
                detail: format!("{} cols vs {} cols", self.cols, other.cols),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Row echelon form by exact Gaussian elimination. Returns the reduced
    /// matrix, the pivot columns and the parity of row swaps.
    fn echelon(&self) -> (RatMatrix, Vec<usize>, bool) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut odd = false;
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if piv != r {
                for j in 0..m.cols {
                    m.data.swap(piv * m.cols + j, r * m.cols + j);
                }
                odd = !odd;
            }
            let inv = m.get(r, c).recip();
            for i in r + 1..m.rows {
                let f = m.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let delta = &f * m.get(r, j);
                    m.data[i * m.cols + j] -= delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots, odd)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn det(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                op: "RatMatrix::det",
                rows: self.rows,
                cols: self.cols,
            });
        }
        let (m, pivots, odd) = self.echelon();
        if pivots.len() < self.rows {
            return Ok(Rat::zero());
        }
        let mut d = (0..self.rows).fold(Rat::one(), |acc, i| acc * m.get(i, i));
        if odd {
            d = -d;
        }
        Ok(d)
    }

    /// Solve `self · X = rhs` for square nonsingular `self`.
    pub fn solve(&self, rhs: &RatMatrix) -> Result<Option<RatMatrix>> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                op: "RatMatrix::solve",
                rows: self.rows,
                cols: self.cols,
            });
        }
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch {
                op: "RatMatrix::solve",
                detail: format!("{} rows vs rhs {} rows", self.rows, rhs.rows),
            });
        }
        let n = self.rows;
        let aug = self.hstack(rhs)?;
        let (mut m, pivots, _) = aug.echelon();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Ok(None);
        }
        // back substitution on the upper-triangular block
        for i in (0..n).rev() {
            let inv = m.get(i, i).recip();
            for j in 0..m.cols {
                let v = m.get(i, j) * &inv;
                m.set(i, j, v);
            }
            for k in 0..i {
                let f = m.get(k, i).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let delta = &f * m.get(i, j);
                    m.data[k * m.cols + j] -= delta;
                }
            }
        }
        let cols: Vec<usize> = (n..m.cols).collect();
        Ok(Some(m.select_columns(&cols)))
    }

    /// A nonzero `c` with `cᵀ·self = 0`, if one exists.
    pub fn left_null_vector(&self) -> Option<Vec<Rat>> {
        let t = self.transpose();
        let (m, pivots, _) = t.echelon();
        let free = (0..t.cols).find(|c| !pivots.contains(c))?;
        // back-substitute with the free variable set to 1, the rest of the free ones 0
        let mut x = vec![Rat::zero(); t.cols];
        x[free] = Rat::one();
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = Rat::zero();
            for j in pc + 1..t.cols {
                acc += m.get(r, j) * &x[j];
            }
            x[pc] = -acc / m.get(r, pc);
        }
        Some(x)
    }

    pub fn to_complex_rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|v| Complex64::new(rat_to_f64(v), 0.0))
                    .collect()
            })
            .collect()
    }
}

/// Matrix of polynomials over ℚ, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatPoly>,
}

/// One `k×k` minor together with the row and column subsets it uses.
#[derive(Clone, Debug, PartialEq)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: RatPoly,
}

impl RatPolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<RatPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "RatPolyMatrix::new",
                detail: format!("{} entries for {rows}x{cols}", entries.len()),
            });
        }
        Ok(RatPolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<RatPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                op: "RatPolyMatrix::from_rows",
                detail: "ragged rows".into(),
            });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Build from integer coefficient lists (ascending degree) per entry.
    pub fn from_int_coeffs(rows: &[&[&[i64]]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|c| RatPoly::from_ints(c)).collect())
                .collect(),
        )
    }

    pub fn from_constant(m: &RatMatrix) -> Self {
        RatPolyMatrix {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.data.iter().map(|v| RatPoly::constant(v.clone())).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_constant(&RatMatrix::identity(n))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[RatPoly] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[RatPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Largest entry degree in row `i` (`-1` for a zero row).
    pub fn row_degree(&self, i: usize) -> isize {
        self.row(i).iter().map(RatPoly::degree).max().unwrap_or(-1)
    }

    pub fn col_degree(&self, j: usize) -> isize {
        (0..self.rows)
            .map(|i| self.get(i, j).degree())
            .max()
            .unwrap_or(-1)
    }

    pub fn eval(&self, x: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.entries.iter().map(|p| p.eval(x)).collect(),
        }
    }

    pub fn eval_complex(&self, z: Complex64) -> Vec<Vec<Complex64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.eval_complex(z)).collect())
            .collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        RatPolyMatrix {
            rows: self.rows,
            cols: cols.len(),
            entries,
        }
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        RatPolyMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    pub fn hstack(&self, other: &RatPolyMatrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                op: "RatPolyMatrix::hstack",
                detail: format!("{} rows vs {} rows", self.rows, other.rows),
            });
        }
        let mut entries = Vec::with_capacity(self.rows * (self.cols + other.cols));
        for i in 0..self.rows {
            entries.extend_from_slice(self.row(i));
            entries.extend_from_slice(other.row(i));
        }
        Ok(RatPolyMatrix {
            rows: self.rows,
            cols: self.cols + other.cols,
            entries,
        })
    }

    pub fn vstack(&self, other: &RatPolyMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op: "RatPolyMatrix::vstack",
                detail: format!("{} cols vs {} cols", self.cols, other.cols),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(RatPolyMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn mul(&self, other: &RatPolyMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "RatPolyMatrix::mul",
                detail: format!(
                    "{}x{} times {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = RatPoly::zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                entries.push(acc);
            }
        }
        Ok(RatPolyMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    fn require_square(&self, op: &'static str) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                op,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// A bound on the degree of the determinant: the smaller of the summed
    /// row degrees and the summed column degrees. `None` when a row or column
    /// vanishes identically, in which case the determinant is zero.
    fn det_degree_bound(&self) -> Option<usize> {
        let mut by_rows = 0usize;
        for i in 0..self.rows {
            let d = self.row_degree(i);
            if d < 0 {
                return None;
            }
            by_rows += d as usize;
        }
        let mut by_cols = 0usize;
        for j in 0..self.cols {
            let d = self.col_degree(j);
            if d < 0 {
                return None;
            }
            by_cols += d as usize;
        }
        Some(by_rows.min(by_cols))
    }

    /// Determinant by evaluation at `bound + 1` nodes and exact interpolation.
    pub fn det_interpolated(&self) -> Result<RatPoly> {
        self.require_square("polymat_det")?;
        if self.rows == 0 {
            return Ok(RatPoly::one());
        }
        let Some(bound) = self.det_degree_bound() else {
            return Ok(RatPoly::zero());
        };
        let xs = interpolation_nodes(bound + 1);
        let ys = xs
            .iter()
            .map(|x| self.eval(x).det())
            .collect::<Result<Vec<_>>>()?;
        Ok(interpolate(&xs, &ys))
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det_cofactor(&self) -> Result<RatPoly> {
        self.require_square("polymat_det")?;
        Ok(cofactor(self, &(0..self.rows).collect::<Vec<_>>(), 0))
    }

    /// Exact determinant. Interpolation is the primary route; for dimension
    /// up to 4 the cofactor expansion is computed as well and must agree.
    pub fn det(&self) -> Result<RatPoly> {
        let d = self.det_interpolated()?;
        if self.rows <= 4 {
            let check = self.det_cofactor()?;
            if check != d {
                return Err(Error::Internal(format!(
                    "determinant routes disagree: {d} vs {check}"
                )));
            }
        }
        Ok(d)
    }

    /// All `k×k` minors, ordered by row subset then column subset, both
    /// lexicographic.
    pub fn minors(&self, k: usize) -> Result<Vec<Minor>> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::MinorSizeOutOfRange {
                k,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = Vec::new();
        for rows in combinations(self.rows, k) {
            for cols in combinations(self.cols, k) {
                let value = self.select(&rows, &cols).det_interpolated()?;
                out.push(Minor {
                    rows: rows.clone(),
                    cols,
                    value,
                });
            }
        }
        Ok(out)
    }
}

fn cofactor(m: &RatPolyMatrix, cols: &[usize], row: usize) -> RatPoly {
    if cols.is_empty() {
        return RatPoly::one();
    }
    let mut acc = RatPoly::zero();
    for (idx, &c) in cols.iter().enumerate() {
        let entry = m.get(row, c);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &cofactor(m, &rest, row + 1);
        acc = if idx % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn additive_identity_and_zero_encoding() {
        let a = p(&[3, 0, 2]);
        assert_eq!(&a + &RatPoly::zero(), a);
        assert_eq!(p(&[0, 0]).degree(), -1);
        assert!(p(&[0]).coeffs().is_empty());
        assert_eq!(&a - &a, RatPoly::zero());
    }

    #[test]
    fn target_expansion_constant_term() {
        let roots: Vec<Rat> = [-8, -6, -4, -2, 1, 2, 3, 4].iter().map(|&r| rat_int(r)).collect();
        let phi = RatPoly::from_roots(&roots);
        assert_eq!(phi.degree(), 8);
        assert!(phi.is_monic());
        // product of the negated roots
        let oracle = roots.iter().fold(rat_int(1), |acc, r| acc * -r);
        assert_eq!(oracle, rat_int(9216));
        assert_eq!(phi.coeff(0), oracle);
    }

    #[test]
    fn gcd_cases() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[1, 1])).unwrap(), RatPoly::one());
        assert_eq!(p(&[4, 2]).gcd(&RatPoly::zero()).unwrap(), p(&[2, 1]));
        assert_eq!(
            RatPoly::zero().gcd(&RatPoly::zero()),
            Err(Error::GcdOfZeros)
        );
    }

    #[test]
    fn derivatives() {
        assert_eq!(RatPoly::monomial(rat_int(1), 5).diff(), RatPoly::monomial(rat_int(5), 4));
        assert_eq!(p(&[7]).diff(), RatPoly::zero());
        assert_eq!(RatPoly::monomial(rat_int(10), 3).diff(), RatPoly::monomial(rat_int(30), 2));
    }

    #[test]
    fn combinations_are_lexicographic() {
        let c = combinations(4, 2);
        assert_eq!(c.len(), 6);
        assert_eq!(c[0], vec![0, 1]);
        assert_eq!(c[5], vec![2, 3]);
        assert_eq!(combinations(2, 1), vec![vec![0], vec![1]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn shapiro_3x3_d_block_determinant() {
        // rows: (s^5, s^4, s^3), (5s^4, 4s^3, 3s^2), (10s^3, 6s^2, 3s)
        let m = RatPolyMatrix::from_int_coeffs(&[
            &[&[0, 0, 0, 0, 0, 1], &[0, 0, 0, 0, 1], &[0, 0, 0, 1]],
            &[&[0, 0, 0, 0, 5], &[0, 0, 0, 4], &[0, 0, 3]],
            &[&[0, 0, 0, 10], &[0, 0, 6], &[0, 3]],
        ])
        .unwrap();
        let expected = RatPoly::monomial(rat_int(-1), 9);
        assert_eq!(m.det_cofactor().unwrap(), expected);
        assert_eq!(m.det().unwrap(), expected);
    }

    #[test]
    fn det_identity_and_non_square() {
        assert_eq!(RatPolyMatrix::identity(5).det().unwrap(), RatPoly::one());
        let m = RatPolyMatrix::new(1, 2, vec![p(&[1]), p(&[2])]).unwrap();
        assert!(matches!(m.det(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn minors_of_a_row_vector_and_zero_row() {
        let m = RatPolyMatrix::new(1, 2, vec![p(&[1, 1]), p(&[3])]).unwrap();
        let minors = m.minors(1).unwrap();
        assert_eq!(minors.len(), 2);
        assert_eq!(minors[0].value, p(&[1, 1]));
        assert_eq!(minors[1].value, p(&[3]));

        let z = RatPolyMatrix::new(
            2,
            3,
            vec![p(&[1]), p(&[0, 1]), p(&[2]), p(&[]), p(&[]), p(&[])],
        )
        .unwrap();
        assert!(z.minors(2).unwrap().iter().all(|m| m.value.is_zero()));
        assert!(matches!(
            z.minors(3),
            Err(Error::MinorSizeOutOfRange { .. })
        ));
    }

    #[test]
    fn rational_solve_and_rank() {
        let a = RatMatrix::from_ints(&[&[2, 1], &[1, 3]]);
        let b = RatMatrix::from_ints(&[&[3], &[5]]);
        let x = a.solve(&b).unwrap().unwrap();
        assert_eq!(a.mul(&x).unwrap(), b);
        assert_eq!(RatMatrix::from_ints(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(a.det().unwrap(), rat_int(5));
        let sing = RatMatrix::from_ints(&[&[1, 0], &[3, 0]]);
        let c = sing.left_null_vector().unwrap();
        let ct = RatMatrix::new(1, 2, c).unwrap();
        assert!(ct.mul(&sing).unwrap().row(0).iter().all(Zero::is_zero));
    }

    #[test]
    fn parse_and_format_rationals() {
        assert_eq!(parse_rat("-5/10").unwrap(), rat(-1, 2));
        assert_eq!(format_rat(&rat(6, 3)), "2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "s^2 - 1");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[0, -3]).pretty("x"), "-3x");
    }
}
