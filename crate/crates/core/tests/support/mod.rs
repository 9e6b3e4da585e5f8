#![allow(dead_code)]

pub mod oracle;

use polefiber::ratpoly::{rat, Rat, RatMatrix, RatPoly, RatPolyMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn small_rat(rng: &mut ChaCha8Rng, range: i64) -> Rat {
    let num = rng.random_range(-range..=range);
    let den = rng.random_range(1..=3);
    rat(num, den)
}

pub fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize, range: i64) -> RatPoly {
    let len = rng.random_range(0..=max_degree) + 1;
    RatPoly::new((0..len).map(|_| small_rat(rng, range)).collect())
}

pub fn random_poly_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, max_degree: usize) -> RatPolyMatrix {
    let entries = (0..rows * cols).map(|_| random_poly(rng, max_degree, 5)).collect();
    RatPolyMatrix::new(rows, cols, entries).unwrap()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RatMatrix {
    let data = (0..rows * cols).map(|_| small_rat(rng, 6)).collect();
    RatMatrix::new(rows, cols, data).unwrap()
}

/// Distinct integer roots drawn from `[lo, hi]`, ascending.
pub fn distinct_roots(rng: &mut ChaCha8Rng, count: usize, lo: i64, hi: i64) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(count);
    while out.len() < count {
        let r = rng.random_range(lo..=hi);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out.sort_unstable();
    out
}
