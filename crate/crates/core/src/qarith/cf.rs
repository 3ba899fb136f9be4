//! Finite continued fractions of both flavors and their q-deformations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::QArithError;
use crate::poly::LaurentPoly;
use crate::qmodular::{m_neg_word, m_pos_word, parse_int_list, IntMat2};
use crate::ratfn::{ratfn_from_coprime, RatFn, Unit};

/// `[a_1, ..., a_2m]` (regular, `+` signs) or `[[c_1, ..., c_k]]`
/// (negative, Hirzebruch-Jung, `-` signs).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Regular,
    Negative,
}

impl FromStr for Flavor {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "reg" | "regular" => Ok(Flavor::Regular),
            "neg" | "negative" => Ok(Flavor::Negative),
            _ => Err(format!("unknown flavor {s:?}, expected reg or neg")),
        }
    }
}

/// A finite continued fraction word. Any integers are allowed;
/// [`CFWord::is_canonical`] tells whether it is the normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CFWord {
    pub flavor: Flavor,
    pub coeffs: Vec<i64>,
}

impl CFWord {
    pub fn regular(coeffs: Vec<i64>) -> Self {
        CFWord {
            flavor: Flavor::Regular,
            coeffs,
        }
    }

    pub fn negative(coeffs: Vec<i64>) -> Self {
        CFWord {
            flavor: Flavor::Negative,
            coeffs,
        }
    }

    /// Regular: even length and `a_i >= 1` for `i >= 2`.
    /// Negative: nonempty and `c_i >= 2` for `i >= 2`.
    pub fn is_canonical(&self) -> bool {
        let tail = self.coeffs.iter().skip(1);
        match self.flavor {
            Flavor::Regular => {
                !self.coeffs.is_empty() && self.coeffs.len().is_multiple_of(2) && tail.clone().all(|&a| a >= 1)
            }
            Flavor::Negative => !self.coeffs.is_empty() && tail.clone().all(|&c| c >= 2),
        }
    }

    /// The classical matrix `M^+(a)` or `M(c)`.
    pub fn int_matrix(&self) -> IntMat2 {
        let one = BigInt::from(1);
        let mut m: IntMat2 = [[one.clone(), BigInt::zero()], [BigInt::zero(), one]];
        let y = BigInt::from(match self.flavor {
            Flavor::Regular => 1,
            Flavor::Negative => -1,
        });
        for &x in &self.coeffs {
            let x = BigInt::from(x);
            // [[A, B], [C, D]] * [[x, y], [1, 0]]
            let [[a, b], [c, d]] = m;
            m = [[&a * &x + b, &a * &y], [&c * &x + d, &c * &y]];
        }
        m
    }
}

impl fmt::Display for CFWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .coeffs
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(",");
        match self.flavor {
            Flavor::Regular => write!(f, "[{body}]"),
            Flavor::Negative => write!(f, "[[{body}]]"),
        }
    }
}

/// Parses `[a1,a2,...]` as regular and `[[c1,c2,...]]` as negative.
impl FromStr for CFWord {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || format!("expected [a1,...] or [[c1,...]], got {s:?}");
        if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let inner = inner.trim();
            if inner.starts_with('[') {
                return parse_int_list(inner).map(CFWord::negative).ok_or_else(bad);
            }
            return parse_int_list(t).map(CFWord::regular).ok_or_else(bad);
        }
        Err(bad())
    }
}

fn check_fraction(r: i64, s: i64) -> Result<(), QArithError> {
    if s <= 0 {
        return Err(QArithError::NonPositiveDenominator);
    }
    if r.gcd(&s) != 1 {
        return Err(QArithError::NotCoprime(r, s));
    }
    Ok(())
}

/// The canonical regular expansion `[a_1, ..., a_2m]` of `r/s`.
pub fn regular_cf(r: i64, s: i64) -> Result<CFWord, QArithError> {
    check_fraction(r, s)?;
    let (mut r, mut s) = (r as i128, s as i128);
    let mut out = Vec::new();
    loop {
        let a = Integer::div_floor(&r, &s);
        out.push(a as i64);
        let rem = r - a * s;
        if rem == 0 {
            break;
        }
        (r, s) = (s, rem);
    }
    if out.len() % 2 == 1 {
        let last = out.pop().expect("nonempty");
        out.push(last - 1);
        out.push(1);
    }
    Ok(CFWord::regular(out))
}

/// The canonical negative expansion `[[c_1, ..., c_k]]` of `r/s`:
/// `c = ceil(x)`, `x -> 1 / (c - x)`.
pub fn negative_cf(r: i64, s: i64) -> Result<CFWord, QArithError> {
    check_fraction(r, s)?;
    let (mut r, mut s) = (r as i128, s as i128);
    let mut out = Vec::new();
    loop {
        let c = Integer::div_ceil(&r, &s);
        out.push(c as i64);
        let rem = c * s - r;
        if rem == 0 {
            break;
        }
        (r, s) = (s, rem);
    }
    Ok(CFWord::negative(out))
}

/// The classical value `r/s` of a word, read off the first column of its
/// matrix (`s > 0`, reduced). A zero denominator means the word is ill
/// defined.
pub fn eval_cf_classical(w: &CFWord) -> Result<(BigInt, BigInt), QArithError> {
    let m = w.int_matrix();
    let (mut r, mut s) = (m[0][0].clone(), m[1][0].clone());
    if s.is_zero() {
        return Err(QArithError::IllDefined);
    }
    if s < BigInt::zero() {
        r = -r;
        s = -s;
    }
    Ok((r, s))
}

fn first_column_ratio(a: &LaurentPoly, c: &LaurentPoly) -> Result<(Unit, RatFn), QArithError> {
    if c.is_zero() {
        return Err(QArithError::IllDefined);
    }
    // The determinant is a unit, so the first column has no common factor.
    Ok(ratfn_from_coprime(a, c))
}

/// `[a_1, ..., a_2m]_q` for arbitrary integers, via `M_q^+(a)`.
pub fn eval_regular_cf_q(a: &[i64]) -> Result<(Unit, RatFn), QArithError> {
    let m = m_pos_word(a).map_err(|e| QArithError::OddLength(e.0))?;
    first_column_ratio(&m.a, &m.c)
}

/// `[[c_1, ..., c_k]]_q` for arbitrary integers, via `M_q(c)`.
pub fn eval_negative_cf_q(c: &[i64]) -> Result<(Unit, RatFn), QArithError> {
    let m = m_neg_word(c);
    first_column_ratio(&m.a, &m.c)
}

/// Evaluates a word of either flavor.
pub fn eval_cf_q(w: &CFWord) -> Result<(Unit, RatFn), QArithError> {
    match w.flavor {
        Flavor::Regular => eval_regular_cf_q(&w.coeffs),
        Flavor::Negative => eval_negative_cf_q(&w.coeffs),
    }
}
