//! Static output feedback pole placement.
//!
//! Given a plant as a left matrix fraction `D(s)⁻¹N(s)` (or a state space
//! triple), this crate computes its Plücker data and the center of the
//! associated central projection, assembles the square polynomial system
//! whose solutions are the gains `K` with `det(sI - A - BKC) = φ(s)`, solves
//! it by total-degree homotopy continuation and classifies the feedback laws
//! as real or complex.
//!
//! Modules, bottom up:
//!
//! - [`ratpoly`]: exact rationals, polynomials and polynomial matrices
//! - [`plucker`]: subset indexing, `g_α`, `k_α` and the center subspace
//! - [`sysmodel`]: plants, rank tests, realization, genericity verdicts
//! - [`polemap`]: the pole placement map and fiber systems
//! - [`homotopy`]: path tracking, deduplication, real/complex classification
//! - [`experiments`]: the `m = 4, p = 2` counterexample, Shapiro plants and a
//!   seeded random search
//! - [`cli`]: file formats and report rendering shared by the binary

pub mod cli;
pub mod error;
pub mod experiments;
pub mod homotopy;
pub mod linalg;
pub mod multipoly;
pub mod plucker;
pub mod polemap;
pub mod ratpoly;
pub mod sysmodel;

pub use error::{Error, Result};
