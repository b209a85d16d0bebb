//! Exact simulation of affine torus maps `x -> A x + alpha_vec` with `A`
//! the unipotent binomial matrix, the hyperplane-family partitions of the
//! 1- and 2-torus, orbit codings, and the closed-form complexity evaluator
//! they realize.
//!
//! All geometry runs in the field `Q + Q*alpha` for a quadratic irrational
//! `alpha`, so every comparison, floor and cell-membership test is exact.

mod affine;
mod arrangement;
mod coding;
mod formula;
mod quad;

pub use affine::{binomial_matrix, power_matrix, AffineNilsystem};
pub use arrangement::{build_arrangement, Arrangement};
pub use coding::{code_orbit, empirical_complexity, OrbitCoding};
pub use formula::vandermonde_complexity;
pub use quad::{AlphaSpec, Quad};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum NilError {
    #[error("invalid quadratic irrational: {0}")]
    BadAlpha(String),

    #[error("dimension {0} is out of range for this operation")]
    BadDimension(usize),

    #[error("orbit point hits hypersurface family {family} at step {step}")]
    OnBoundary { family: usize, step: usize },

    #[error("arithmetic overflow in exact arithmetic")]
    Overflow,
}
