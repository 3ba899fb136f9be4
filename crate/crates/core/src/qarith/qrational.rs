//! The canonical form `±q^{-N} R/S` of a q-rational.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::cf::regular_cf;
use super::QArithError;
use crate::poly::LaurentPoly;
use crate::qmodular::m_pos_word_generators;
use crate::ratfn::{ratfn_from_coprime, ratfn_make, unit_fraction, RatFn, Unit};
use crate::series::{series_expand, QSeries, SeriesError};

/// `[r/s]_q = sign * q^exponent * R / S` with `R`, `S` coprime ordinary
/// polynomials with constant term 1.
///
/// The exponent is signed: `[3/5]_q = q (1+q+q^2)/(1+2q+q^2+q^3)` has
/// exponent 1. In the usual notation `±q^{-N} R/S` this is `N = -exponent`,
/// see [`CanonicalQRational::n`]. Zero is stored as `R = 0, S = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalQRational {
    pub sign: i8,
    pub exponent: i64,
    pub r: LaurentPoly,
    pub s: LaurentPoly,
}

impl CanonicalQRational {
    pub fn zero() -> Self {
        CanonicalQRational {
            sign: 1,
            exponent: 0,
            r: LaurentPoly::zero(),
            s: LaurentPoly::one(),
        }
    }

    pub fn from_parts(unit: Unit, f: RatFn) -> Self {
        if f.is_zero() {
            return Self::zero();
        }
        CanonicalQRational {
            sign: unit.sign,
            exponent: unit.exp,
            r: f.num().clone(),
            s: f.den().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    pub fn unit(&self) -> Unit {
        Unit::new(self.sign, self.exponent)
    }

    /// `N` in `±q^{-N} R/S`.
    pub fn n(&self) -> i64 {
        -self.exponent
    }

    /// The classical value `(r, s)`, read off at `q = 1`.
    pub fn classical(&self) -> (BigInt, BigInt) {
        let r = self.r.eval_one();
        (if self.sign < 0 { -r } else { r }, self.s.eval_one())
    }

    /// `(sign * q^exponent * R, S)`.
    pub fn fraction(&self) -> (LaurentPoly, LaurentPoly) {
        let f = ratfn_make(&self.r, &self.s).expect("nonzero denominator").1;
        unit_fraction(self.unit(), &f)
    }

    pub fn series(&self, order: i64) -> Result<QSeries, SeriesError> {
        let f = ratfn_make(&self.r, &self.s).expect("nonzero denominator").1;
        series_expand(self.unit(), &f, order)
    }

    /// Checks the structural properties of the canonical form against the
    /// classical value `r/s`: positive coefficients, constant and leading
    /// coefficients 1, `R(1) = |r|`, `S(1) = s`, coprimality, and the
    /// bracketing of `N`: `N = 0` for `r/s >= 1`, `-N <= r/s < 1 - N` for
    /// negative values and `1/(1-N) <= r/s < 1/(-N)` in between.
    pub fn check(&self, r: i64, s: i64) -> Result<(), String> {
        if r == 0 {
            return if self.is_zero() {
                Ok(())
            } else {
                Err("zero expected".into())
            };
        }
        for (name, p) in [("R", &self.r), ("S", &self.s)] {
            if !p.is_ordinary() || p.min_deg() != Some(0) {
                return Err(format!("{name} must have nonzero constant term"));
            }
            if !p.coeff_vec().iter().all(|c| c.is_positive() || c.is_zero()) {
                return Err(format!("{name} has a negative coefficient"));
            }
            if !p.lowest_coeff().is_some_and(One::is_one) || !p.leading_coeff().is_some_and(One::is_one) {
                return Err(format!("{name} must have constant and leading coefficient 1"));
            }
        }
        if self.r.eval_one() != BigInt::from(r.unsigned_abs()) || self.s.eval_one() != BigInt::from(s) {
            return Err("R(1), S(1) do not match |r|, s".into());
        }
        if (self.sign < 0) != (r < 0) {
            return Err("sign mismatch".into());
        }
        if self.r.gcd(&self.s).span() != 1 || !self.r.gcd(&self.s).is_one() {
            return Err("R and S are not coprime".into());
        }
        let n = self.n();
        let (r, s) = (r as i128, s as i128);
        let n128 = n as i128;
        let ok = if r >= s {
            n == 0
        } else if r < 0 {
            // -N <= r/s < -N + 1
            -n128 * s <= r && r < (1 - n128) * s
        } else {
            // 1/(1-N) <= r/s < 1/(-N); the endpoint 1/n has N = 1 - n
            n < 0 && s <= r * (1 - n128) && r * (-n128) < s
        };
        if !ok {
            return Err(format!("N = {n} does not bracket the value"));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let (r, s) = self.classical();
        json!({
            "value": format!("{r}/{s}"),
            "sign": self.sign,
            "N": self.n(),
            "R": self.r.to_json(),
            "S": self.s.to_json(),
        })
    }
}

fn paren(p: &LaurentPoly) -> String {
    if p.span() > 1 || p.terms().count() > 1 {
        format!("({p:#})")
    } else {
        format!("{p:#}")
    }
}

/// `q^2 * (1+2q+q^2+q^3)/(1+2q+3q^2+3q^3+2q^4+q^5)`, `-q^-1 * 1/(1+q+q^2+q^3)`.
impl fmt::Display for CanonicalQRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let u = self.unit();
        if u == Unit::new(-1, 0) {
            f.write_str("-")?;
        } else if u != Unit::ONE {
            write!(f, "{:#} * ", u.to_poly())?;
        }
        f.write_str(&paren(&self.r))?;
        if !self.s.is_one() {
            write!(f, "/{}", paren(&self.s))?;
        }
        Ok(())
    }
}

/// `[r/s]_q` in canonical form. Computed from the regular expansion through
/// the generators, `R_q^{a_1} L_q^{a_2} ...`.
pub fn q_rational(r: i64, s: i64) -> Result<CanonicalQRational, QArithError> {
    let w = regular_cf(r, s)?;
    if r == 0 {
        return Ok(CanonicalQRational::zero());
    }
    let m = m_pos_word_generators(&w.coeffs).map_err(|e| QArithError::OddLength(e.0))?;
    let (u, f) = ratfn_from_coprime(&m.a, &m.c);
    Ok(CanonicalQRational::from_parts(u, f))
}

/// `[n]_q`: `1 + q + ... + q^{n-1}`, `-q^{-1} - ... - q^{-n}` for negative
/// `n`, and 0.
pub fn q_int(n: i64) -> LaurentPoly {
    LaurentPoly::one().mul_qint(n)
}

/// Transformations with known effect on q-rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    /// `[x + n]_q = q^n [x]_q + [n]_q`
    Shift(i64),
    /// `[-x]_q = -q^{-1} [x]_{q^{-1}}`
    Negate,
    /// `[1/x]_q = 1 / [x]_{q^{-1}}`
    Invert,
}

/// Applies a transform through its closed formula on `(R, S)`.
pub fn q_transform(x: &CanonicalQRational, t: Transform) -> Result<CanonicalQRational, QArithError> {
    let (num, den) = x.fraction();
    let (num, den) = match t {
        Transform::Shift(n) => (&num.shift(n) + &(&q_int(n) * &den), den),
        Transform::Negate => {
            if x.is_zero() {
                return Ok(CanonicalQRational::zero());
            }
            (-num.reverse().shift(-1), den.reverse())
        }
        Transform::Invert => {
            if x.is_zero() {
                return Err(QArithError::ZeroInput);
            }
            (den.reverse(), num.reverse())
        }
    };
    let (u, f) = ratfn_make(&num, &den).map_err(|_| QArithError::IllDefined)?;
    Ok(CanonicalQRational::from_parts(u, f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(3), p("1+q+q^2"));
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(-2), p("-q^-1-q^-2"));
        for n in -5..=5 {
            let x = q_rational(n, 1).unwrap();
            let (num, den) = x.fraction();
            assert!(den.is_one());
            assert_eq!(num, q_int(n), "{n}");
        }
    }

    #[test]
    fn canonical_forms() {
        let x = q_rational(-5, 3).unwrap();
        assert_eq!((x.sign, x.n()), (-1, 2));
        assert_eq!(x.r, p("1+2q+q^2+q^3"));
        assert_eq!(x.s, p("1+q+q^2"));
        let x = q_rational(3, 5).unwrap();
        assert_eq!((x.sign, x.n()), (1, -1));
        assert_eq!(x.r, p("1+q+q^2"));
        assert_eq!(x.s, p("1+2q+q^2+q^3"));
        let x = q_rational(5, 4).unwrap();
        assert_eq!((x.r.clone(), x.s.clone()), (q_int(5), q_int(4)));
        assert!(q_rational(0, 1).unwrap().is_zero());
        assert_eq!(q_rational(1, 0), Err(QArithError::NonPositiveDenominator));
    }

    #[test]
    fn invariants_hold() {
        for s in 1..15 {
            for r in -30..30 {
                if num_integer::Integer::gcd(&r, &s) == 1 {
                    q_rational(r, s).unwrap().check(r, s).unwrap();
                }
            }
        }
    }

    #[test]
    fn unit_fractions() {
        // [1/n]_q = 1/[n]_{q^-1} = q^{n-1} / [n]_q
        for n in 2..12 {
            let x = q_rational(1, n).unwrap();
            assert_eq!((x.exponent, x.n()), (n - 1, 1 - n));
            assert!(x.r.is_one());
            assert_eq!(x.s, q_int(n));
        }
    }

    #[test]
    fn display() {
        assert_eq!(
            q_rational(5, 12).unwrap().to_string(),
            "q^2 * (1+2q+q^2+q^3)/(1+2q+3q^2+3q^3+2q^4+q^5)"
        );
        assert_eq!(q_rational(-1, 4).unwrap().to_string(), "-q^-1 * 1/(1+q+q^2+q^3)");
        assert_eq!(q_rational(5, 3).unwrap().to_string(), "(1+q+2q^2+q^3)/(1+q+q^2)");
        assert_eq!(q_rational(2, 1).unwrap().to_string(), "(1+q)");
    }

    #[test]
    fn transforms() {
        let x = q_rational(5, 3).unwrap();
        assert_eq!(q_transform(&x, Transform::Shift(1)).unwrap(), q_rational(8, 3).unwrap());
        assert_eq!(q_transform(&x, Transform::Negate).unwrap(), q_rational(-5, 3).unwrap());
        assert_eq!(q_transform(&x, Transform::Invert).unwrap(), q_rational(3, 5).unwrap());
        assert_eq!(q_transform(&x, Transform::Shift(-4)).unwrap(), q_rational(-7, 3).unwrap());
        assert_eq!(
            q_transform(&CanonicalQRational::zero(), Transform::Invert),
            Err(QArithError::ZeroInput)
        );
    }
}
