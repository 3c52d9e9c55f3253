//! Arbitrary-precision numerics for CM class-invariant computations.
//!
//! Provides binary floating-point reals and complexes with explicit
//! precision ([`BigFloat`], [`BigComplex`]), exact integer matrices,
//! LLL lattice basis reduction, and LLL-based integer relation /
//! minimal polynomial detection in the style of PARI's `lindep` and
//! `algdep`.
//!
//! All values are immutable after construction and all operations are
//! pure, so everything here can be shared freely across threads.

mod complex;
mod float;
mod funcs;
mod lll;
mod matrix;
mod relations;

pub use complex::BigComplex;
pub use float::BigFloat;
pub use funcs::{atan_inv_u32, cos_sin_pi, exp, pi, sqrt};
pub use lll::{lll_reduce, lovasz_holds};
pub use matrix::{IntMatrix, IntVector};
pub use relations::{algdep, integer_relation, poly_eval_complex, IntPoly};

use thiserror::Error;

/// Errors from numeric and lattice routines.
#[derive(Debug, Error)]
pub enum MpError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of negative number")]
    NegativeSqrt,
    #[error("rank-deficient basis: row {0} is dependent on earlier rows")]
    RankDeficient(usize),
    #[error("inconclusive at this precision; retry with more bits")]
    Inconclusive,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, MpError>;
