//! q-rationals and their continued fractions.
//!
//! `[r/s]_q` is computed from either continued fraction expansion of `r/s`
//! through the matrices `M_q^+(a)` and `M_q(c)`. Real numbers are reached as
//! limits of series: [`q_series_from_cf`] consumes a continued fraction
//! stream until the series of successive convergents stabilize.

mod cf;
mod qrational;
mod stream;

use thiserror::Error;

pub use cf::{
    eval_cf_classical, eval_cf_q, eval_negative_cf_q, eval_regular_cf_q, negative_cf, regular_cf,
    CFWord, Flavor,
};
pub use qrational::{q_int, q_rational, q_transform, CanonicalQRational, Transform};
pub use stream::{q_series_from_cf, q_series_from_rationals, StreamOptions};

use crate::series::SeriesError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QArithError {
    #[error("denominator must be positive")]
    NonPositiveDenominator,
    #[error("{0}/{1} is not in lowest terms")]
    NotCoprime(i64, i64),
    #[error("ill-defined word: zero denominator")]
    IllDefined,
    #[error("regular continued fraction of odd length {0}")]
    OddLength(usize),
    #[error("zero input")]
    ZeroInput,
    #[error("stream exhausted after {terms} terms before the series stabilized")]
    Exhausted { terms: usize },
    #[error("series not stable after {terms} terms")]
    NotStabilized { terms: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}
