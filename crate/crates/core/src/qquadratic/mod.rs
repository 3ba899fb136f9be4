//! Quadratic irrationals and their q-deformations.
//!
//! A real quadratic irrational has an eventually periodic negative
//! continued fraction `[[b_1, .., b_l, (c_1, .., c_k) repeated]]`. Its
//! q-deformation is the fixed point of `M_q(c)` moved across `M_q(b)`, a
//! closed form `(R ± sqrt P) / S` with `P` a palindrome.

mod abc;
mod qsurd;
mod surd;

use num_bigint::BigInt;
use thiserror::Error;

pub use abc::{abc, desnanot_jacobi_check, prs, Abc, Prs};
pub use qsurd::{mobius_apply_qsurd, q_quadratic, qsurd_series, QSurd};
pub use surd::{cf_stream, periodic_negative_cf, surd_compare, PeriodicCF, Surd};

use crate::series::SeriesError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuadError {
    #[error("{0} is not a positive non-square")]
    NotIrrational(BigInt),
    #[error("zero or negative denominator")]
    ZeroDenominator,
    #[error("zero radicand")]
    ZeroRadicand,
    #[error("empty word")]
    EmptyWord,
    #[error("word is not hyperbolic: trace {trace} at q = 1")]
    NotHyperbolic { trace: BigInt },
    #[error("no period found after {steps} steps")]
    NoCycle { steps: usize },
    #[error("neither branch matches the classical value")]
    BranchMismatch,
    #[error("cannot parse surd: {0}")]
    Parse(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
