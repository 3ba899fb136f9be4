//! Truncated Laurent series in `q`.
//!
//! A [`QSeries`] stores the exact coefficients of a Laurent series for every
//! exponent up to and including its `order`. Nothing beyond the order is
//! known, and reading there is an error. Every operation computes the
//! largest order through which its result is still exact.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::poly::LaurentPoly;
use crate::ratfn::{RatFn, Unit};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("coefficient of q^{exp} requested but the series is only known through q^{order}")]
    BeyondOrder { exp: i64, order: i64 },
    #[error("square root of a series with odd valuation {0}")]
    OddValuation(i64),
    #[error("square root of a series whose lowest coefficient {0} is not a perfect square")]
    NonSquareLeading(BigInt),
    #[error("result does not have integer coefficients")]
    NotIntegral,
    #[error("division by a series that vanishes through its order")]
    DivisionByZero,
}

/// A Laurent series known exactly through `q^order`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QSeries {
    poly: LaurentPoly,
    order: i64,
}

fn truncate_poly(p: &LaurentPoly, order: i64) -> LaurentPoly {
    match p.max_deg() {
        Some(hi) if hi > order => {
            LaurentPoly::from_terms(p.terms().filter(|(e, _)| *e <= order).map(|(e, c)| (e, c.clone())))
        }
        _ => p.clone(),
    }
}

impl QSeries {
    /// The series of an exact polynomial, kept through `order`.
    pub fn from_poly(p: &LaurentPoly, order: i64) -> Self {
        QSeries {
            poly: truncate_poly(p, order),
            order,
        }
    }

    pub fn zero(order: i64) -> Self {
        QSeries {
            poly: LaurentPoly::zero(),
            order,
        }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// The known part as a polynomial (all exponents `<= order`).
    pub fn truncated(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn coeff(&self, exp: i64) -> Result<BigInt, SeriesError> {
        if exp > self.order {
            return Err(SeriesError::BeyondOrder {
                exp,
                order: self.order,
            });
        }
        Ok(self.poly.coeff(exp))
    }

    /// Coefficients of `q^from ..= q^to`.
    pub fn coeffs(&self, from: i64, to: i64) -> Result<Vec<BigInt>, SeriesError> {
        (from..=to).map(|e| self.coeff(e)).collect()
    }

    /// Lowest exponent with a nonzero coefficient, or `None` if the series
    /// vanishes through its order.
    pub fn valuation(&self) -> Option<i64> {
        self.poly.min_deg()
    }

    /// Valuation, or a lower bound `order + 1` when nothing nonzero is known.
    fn valuation_bound(&self) -> i64 {
        self.valuation().unwrap_or(self.order + 1)
    }

    pub fn is_zero_through_order(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        QSeries::from_poly(&self.poly, order)
    }

    pub fn shift(&self, n: i64) -> Self {
        QSeries {
            poly: self.poly.shift(n),
            order: self.order + n,
        }
    }

    pub fn neg(&self) -> Self {
        QSeries {
            poly: -&self.poly,
            order: self.order,
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        QSeries {
            poly: self.poly.scale(k),
            order: self.order,
        }
    }

    pub fn add(&self, other: &QSeries) -> Self {
        let order = self.order.min(other.order);
        QSeries::from_poly(&(&self.poly + &other.poly), order)
    }

    pub fn sub(&self, other: &QSeries) -> Self {
        let order = self.order.min(other.order);
        QSeries::from_poly(&(&self.poly - &other.poly), order)
    }

    pub fn add_poly(&self, p: &LaurentPoly) -> Self {
        QSeries::from_poly(&(&self.poly + p), self.order)
    }

    pub fn mul(&self, other: &QSeries) -> Self {
        let (va, vb) = (self.valuation_bound(), other.valuation_bound());
        let order = (self.order + vb).min(other.order + va);
        let a = truncate_poly(&self.poly, order - vb);
        let b = truncate_poly(&other.poly, order - va);
        QSeries::from_poly(&(&a * &b), order)
    }

    /// Product with an exact polynomial.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        match p.min_deg() {
            None => QSeries::zero(i64::MAX / 4),
            Some(v) => {
                let order = self.order + v;
                QSeries::from_poly(&(&self.poly * p), order)
            }
        }
    }

    /// Exact quotient `self / d`. The coefficients of the quotient must be
    /// integers; each division step is checked.
    pub fn div(&self, d: &QSeries) -> Result<QSeries, SeriesError> {
        let vd = d.valuation().ok_or(SeriesError::DivisionByZero)?;
        let Some(vn) = self.valuation() else {
            return Ok(QSeries::zero(self.order - vd));
        };
        let vq = vn - vd;
        let order = (self.order - vd).min(d.order - vd + vq);
        if order < vq {
            return Ok(QSeries::zero(order));
        }
        let len = (order - vq + 1) as usize;
        let d0 = d.poly.lowest_coeff().expect("nonzero").clone();
        let dc: Vec<BigInt> = (0..len as i64).map(|i| d.poly.coeff(vd + i)).collect();
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        for j in 0..len {
            let mut t = self.poly.coeff(vn + j as i64);
            for i in 1..=j {
                if !dc[i].is_zero() {
                    t -= &dc[i] * &out[j - i];
                }
            }
            let (quo, rem) = t.div_rem(&d0);
            if !rem.is_zero() {
                return Err(SeriesError::NotIntegral);
            }
            out.push(quo);
        }
        Ok(QSeries {
            poly: LaurentPoly::from_dense(vq, out),
            order,
        })
    }

    /// `1 / self`, exact through `order - 2 v` for valuation `v`.
    pub fn inverse(&self) -> Result<QSeries, SeriesError> {
        let v = self.valuation().ok_or(SeriesError::DivisionByZero)?;
        QSeries::from_poly(&LaurentPoly::one(), self.order - v).div(self)
    }

    /// Square root with positive lowest coefficient.
    pub fn sqrt(&self) -> Result<QSeries, SeriesError> {
        let Some(v) = self.valuation() else {
            return Ok(QSeries::zero(self.order.div_euclid(2)));
        };
        if v.rem_euclid(2) != 0 {
            return Err(SeriesError::OddValuation(v));
        }
        let c0 = self.poly.lowest_coeff().expect("nonzero");
        if c0.is_negative() {
            return Err(SeriesError::NonSquareLeading(c0.clone()));
        }
        let s0 = c0.sqrt();
        if &(&s0 * &s0) != c0 {
            return Err(SeriesError::NonSquareLeading(c0.clone()));
        }
        let half = v / 2;
        let order = self.order - half;
        let len = (order - half + 1).max(0) as usize;
        let two_s0 = &s0 * 2;
        let mut s: Vec<BigInt> = Vec::with_capacity(len);
        if len > 0 {
            s.push(s0);
        }
        for j in 1..len {
            let mut t = self.poly.coeff(v + j as i64);
            for i in 1..j {
                t -= &s[i] * &s[j - i];
            }
            let (quo, rem) = t.div_rem(&two_s0);
            if !rem.is_zero() {
                return Err(SeriesError::NotIntegral);
            }
            s.push(quo);
        }
        Ok(QSeries {
            poly: LaurentPoly::from_dense(half, s),
            order,
        })
    }

    /// True when both series are known through `q^k` and agree there.
    pub fn agrees_through(&self, other: &QSeries, k: i64) -> bool {
        self.order >= k
            && other.order >= k
            && truncate_poly(&self.poly, k) == truncate_poly(&other.poly, k)
    }

    /// Largest `k` through which the two series are known to agree, bounded
    /// by the smaller order.
    pub fn agreement_order(&self, other: &QSeries) -> i64 {
        let order = self.order.min(other.order);
        let diff = truncate_poly(&(&self.poly - &other.poly), order);
        match diff.min_deg() {
            None => order,
            Some(v) => v - 1,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "order": self.order, "terms": self.poly.to_json() })
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let order = v.get("order")?.as_i64()?;
        let poly = LaurentPoly::from_json(v.get("terms")?)?;
        Some(QSeries::from_poly(&poly, order))
    }
}

/// Prints the known terms followed by `O(q^{order+1})`.
impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tail = self.order + 1;
        let big_o = if tail == 1 {
            "O(q)".to_string()
        } else {
            format!("O(q^{tail})")
        };
        if self.poly.is_zero() {
            return write!(f, "{big_o}");
        }
        if f.alternate() {
            write!(f, "{:#}+{big_o}", self.poly)
        } else {
            write!(f, "{} + {big_o}", self.poly)
        }
    }
}

/// Series of `num / den` through `order`.
pub fn ratio(num: &LaurentPoly, den: &LaurentPoly, order: i64) -> Result<QSeries, SeriesError> {
    let vd = den.min_deg().ok_or(SeriesError::DivisionByZero)?;
    let Some(vn) = num.min_deg() else {
        return Ok(QSeries::zero(order));
    };
    let vq = vn - vd;
    if vq > order {
        return Ok(QSeries::zero(order));
    }
    let n = QSeries::from_poly(num, order + vd);
    let d = QSeries::from_poly(den, order + vd - vq);
    n.div(&d)
}

/// Series of `unit * R / S` through `order`.
pub fn series_expand(unit: Unit, f: &RatFn, order: i64) -> Result<QSeries, SeriesError> {
    let num = if unit.sign < 0 { -f.num() } else { f.num().clone() };
    ratio(&num.shift(unit.exp), f.den(), order)
}

/// Square root of an exact polynomial through `order`.
pub fn series_sqrt(p: &LaurentPoly, order: i64) -> Result<QSeries, SeriesError> {
    let half = p.min_deg().map_or(0, |v| v.div_euclid(2));
    QSeries::from_poly(p, order + half).sqrt()
}

/// Helper for tests and tables: the coefficients as machine integers.
pub fn small_coeffs(s: &QSeries, from: i64, to: i64) -> Result<Vec<i64>, SeriesError> {
    s.coeffs(from, to).map(|v| {
        v.iter()
            .map(|c| i64::try_from(c).expect("coefficient fits in i64"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfn::ratfn_make;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn geometric_series() {
        let s = ratio(&p("1"), &p("1-q"), 3).unwrap();
        assert_eq!(s.order(), 3);
        assert_eq!(s.truncated(), &p("1+q+q^2+q^3"));
        assert_eq!(
            s.coeff(4),
            Err(SeriesError::BeyondOrder { exp: 4, order: 3 })
        );
        let s = ratio(&p("1"), &p("1+q"), 2).unwrap();
        assert_eq!(s.truncated(), &p("1-q+q^2"));
    }

    #[test]
    fn product_orders() {
        let a = QSeries::from_poly(&p("1+q"), 5);
        let b = QSeries::from_poly(&p("1-q"), 5);
        assert_eq!(a.mul(&b).truncated(), &p("1-q^2"));
        assert_eq!(a.mul(&b).order(), 5);
        let c = QSeries::from_poly(&p("q^2+q^3"), 4);
        let d = QSeries::from_poly(&p("q^-1"), 6);
        let e = c.mul(&d);
        assert_eq!(e.order(), 3);
        assert_eq!(e.truncated(), &p("q+q^2"));
    }

    #[test]
    fn division_is_exact_or_fails() {
        let n = QSeries::from_poly(&p("1"), 10);
        let d = QSeries::from_poly(&p("2+q"), 10);
        assert_eq!(n.div(&d), Err(SeriesError::NotIntegral));
        let n = QSeries::from_poly(&p("2+4q"), 10);
        let d = QSeries::from_poly(&p("2"), 10);
        assert_eq!(n.div(&d).unwrap().truncated(), &p("1+2q"));
        assert_eq!(
            n.div(&QSeries::zero(3)),
            Err(SeriesError::DivisionByZero)
        );
    }

    #[test]
    fn twelve_fifths() {
        let (u, f) = ratfn_make(&p("1+2q+3q^2+3q^3+2q^4+q^5"), &p("1+q+2q^2+q^3")).unwrap();
        let s = series_expand(u, &f, 12).unwrap();
        assert_eq!(
            small_coeffs(&s, 0, 12).unwrap(),
            vec![1, 1, 0, 0, 1, 0, -2, 1, 3, -3, -4, 7, 4]
        );
    }

    #[test]
    fn square_roots() {
        assert_eq!(series_sqrt(&p("1+2q+q^2"), 6).unwrap().truncated(), &p("1+q"));
        let s = series_sqrt(&p("q^2+2q^3+q^4"), 6).unwrap();
        assert_eq!(s.truncated(), &p("q+q^2"));
        assert_eq!(s.order(), 6);
        assert_eq!(
            series_sqrt(&p("q+q^2"), 4),
            Err(SeriesError::OddValuation(1))
        );
        assert!(matches!(
            series_sqrt(&p("2+q"), 4),
            Err(SeriesError::NonSquareLeading(_))
        ));
        let r = p("1+2q-q^2+2q^3+q^4");
        let s = series_sqrt(&r, 8).unwrap();
        assert_eq!(small_coeffs(&s, 0, 4).unwrap(), vec![1, 1, -1, 2, -2]);
        assert!(s.mul(&s).agrees_through(&QSeries::from_poly(&r, 8), 8));
    }

    #[test]
    fn display() {
        let s = ratio(&p("1"), &p("1-q"), 2).unwrap();
        assert_eq!(s.to_string(), "1 + q + q^2 + O(q^3)");
        assert_eq!(format!("{s:#}"), "1+q+q^2+O(q^3)");
    }

    #[test]
    fn json_round_trip() {
        let s = ratio(&p("1"), &p("1-q-q^2"), 9).unwrap();
        assert_eq!(QSeries::from_json(&s.to_json()), Some(s));
    }

    #[test]
    fn high_valuation() {
        let s = ratio(&p("q^31"), &p("1+q"), 30).unwrap();
        assert!(s.is_zero_through_order());
        assert_eq!(s.order(), 30);
        let f = QSeries::from_poly(&p("q^2+q^3"), 10);
        let g = f.inverse().unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.mul(&f).agrees_through(&QSeries::from_poly(&p("1"), 4), 4));
    }
}
