//! The q-deformed modular group `PSL_q(2, Z)`.
//!
//! Matrices over `Z[q, q^-1]` ([`QMat2`]) and their classes modulo `±q^N`
//! ([`ProjClass`]); the generators `R_q`, `S_q`, `L_q` and words in them;
//! the continued-fraction matrices `M_q(c)` and `M_q^+(a)`; q-continuants,
//! traces and the word reductions used to study them; the Möbius action on
//! series.

mod continuant;
mod group;
mod mat;
mod reduce;

use std::str::FromStr;

pub use continuant::{
    continuant, m_neg_word, m_neg_word_naive, m_pos_word, m_pos_word_generators, weight, OddLength,
};
pub(crate) use continuant::continuant_range;
pub use group::{
    classical_word_matrix, decompose_sl2, gen_power, generator, q_deform_word, Gen, GroupError,
    GroupWord,
};
pub use mat::{int_mat, int_mat_mul, IntMat2, ProjClass, QMat2};
pub use reduce::{reversal_combinations, reversal_identity_holds, trace_reduce, trace_word, word_reduce};

use crate::series::{QSeries, SeriesError};

/// `M . f = (a f + b) / (c f + d)` on truncated series. The result carries
/// the order through which it is exact.
pub fn mobius_series(m: &QMat2, f: &QSeries) -> Result<QSeries, SeriesError> {
    let num = f.mul_poly(&m.a).add_poly(&m.b);
    let den = f.mul_poly(&m.c).add_poly(&m.d);
    num.div(&den)
}

/// A coefficient-matrix literal `M[c1,c2,...]` or `M+[a1,...]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatSpec {
    Neg(Vec<i64>),
    Pos(Vec<i64>),
}

impl MatSpec {
    pub fn matrix(&self) -> Result<QMat2, OddLength> {
        match self {
            MatSpec::Neg(c) => Ok(m_neg_word(c)),
            MatSpec::Pos(a) => m_pos_word(a),
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        match self {
            MatSpec::Neg(c) | MatSpec::Pos(c) => c,
        }
    }
}

/// Parses a bracketed list of integers `[1, -2, 3]`.
pub(crate) fn parse_int_list(s: &str) -> Option<Vec<i64>> {
    let inner = s.trim().strip_prefix('[')?.strip_suffix(']')?;
    if inner.trim().is_empty() {
        return Some(Vec::new());
    }
    inner.split(',').map(|t| t.trim().parse().ok()).collect()
}

impl FromStr for MatSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || format!("expected M[c1,...] or M+[a1,...], got {s:?}");
        if let Some(rest) = t.strip_prefix("M+") {
            parse_int_list(rest).map(MatSpec::Pos).ok_or_else(bad)
        } else if let Some(rest) = t.strip_prefix('M') {
            parse_int_list(rest).map(MatSpec::Neg).ok_or_else(bad)
        } else {
            Err(bad())
        }
    }
}
