//! Sparse multivariate polynomials over ℚ, used to assemble fiber systems
//! exactly before they are handed to the floating-point solver.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::ratpoly::Rat;

pub type Exponents = Vec<u8>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatMultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, Rat>,
}

impl RatMultiPoly {
    pub fn zero(nvars: usize) -> Self {
        RatMultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rat::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Exponents, c: Rat) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn total_degree(&self) -> isize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as isize).sum())
            .max()
            .unwrap_or(-1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        RatMultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize))
            })
            .fold(Rat::zero(), |a, b| a + b)
    }
}

/// All exponent vectors in `nvars` variables with total degree `<= degree`,
/// graded then lexicographic.
pub fn monomials_up_to(nvars: usize, degree: usize) -> Vec<Exponents> {
    fn rec(nvars: usize, left: usize, prefix: &mut Exponents, out: &mut Vec<Exponents>) {
        if prefix.len() == nvars {
            out.push(prefix.clone());
            return;
        }
        for k in 0..=left {
            prefix.push(k as u8);
            rec(nvars, left - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out.sort_by_key(|e| (e.iter().map(|&x| x as usize).sum::<usize>(), std::cmp::Reverse(e.clone())));
    out
}

/// Determinant of a square matrix of multivariate polynomials by cofactor
/// expansion along the first row. Fine for the `m ≤ 6` compensator blocks.
pub fn det(rows: &[Vec<RatMultiPoly>], nvars: usize) -> RatMultiPoly {
    fn rec(rows: &[Vec<RatMultiPoly>], cols: &[usize], r: usize, nvars: usize) -> RatMultiPoly {
        if cols.is_empty() {
            return RatMultiPoly::constant(nvars, Rat::one());
        }
        let mut acc = RatMultiPoly::zero(nvars);
        for (idx, &c) in cols.iter().enumerate() {
            let entry = &rows[r][c];
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let mut term = entry.mul(&rec(rows, &rest, r + 1, nvars));
            if idx % 2 == 1 {
                term = term.scale(&-Rat::one());
            }
            acc = acc.add(&term);
        }
        acc
    }
    rec(rows, &(0..rows.len()).collect::<Vec<_>>(), 0, nvars)
}
