//! Rational functions in `q`, split into a unit `±q^k` and a reduced
//! fraction of ordinary polynomials.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::poly::LaurentPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RatFnError {
    #[error("zero denominator")]
    ZeroDenominator,
}

/// A unit `sign * q^exp` of `Z[q, q^-1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Unit {
    pub sign: i8,
    pub exp: i64,
}

impl Unit {
    pub const ONE: Unit = Unit { sign: 1, exp: 0 };

    pub fn new(sign: i8, exp: i64) -> Self {
        Unit {
            sign: if sign < 0 { -1 } else { 1 },
            exp,
        }
    }

    pub fn to_poly(self) -> LaurentPoly {
        LaurentPoly::monomial(self.sign, self.exp)
    }

    pub fn inverse(self) -> Unit {
        Unit::new(self.sign, -self.exp)
    }

    /// Recognizes `±q^k` among Laurent polynomials.
    pub fn from_poly(p: &LaurentPoly) -> Option<Unit> {
        if p.span() != 1 {
            return None;
        }
        let c = p.lowest_coeff()?;
        if c.abs().is_one() {
            Some(Unit::new(if c.is_negative() { -1 } else { 1 }, p.min_deg()?))
        } else {
            None
        }
    }
}

impl std::ops::Mul for Unit {
    type Output = Unit;
    fn mul(self, rhs: Unit) -> Unit {
        Unit::new(self.sign * rhs.sign, self.exp + rhs.exp)
    }
}

/// Prints `1`, `-1`, `q`, `-q^-2`, ...
impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// A reduced fraction `num / den` of ordinary polynomials, both with nonzero
/// constant term and positive lowest coefficient, coprime over `Q` and with
/// coprime integer contents. Zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFn {
    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn zero() -> Self {
        RatFn {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }
}

/// Factors `num / den` as `unit * (R / S)` with `R / S` canonical.
pub fn ratfn_make(num: &LaurentPoly, den: &LaurentPoly) -> Result<(Unit, RatFn), RatFnError> {
    if den.is_zero() {
        return Err(RatFnError::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok((Unit::ONE, RatFn::zero()));
    }
    let g = num.gcd(den);
    let num = num.exact_divide(&g).ok().flatten().expect("gcd divides");
    let den = den.exact_divide(&g).ok().flatten().expect("gcd divides");
    Ok(ratfn_from_coprime(&num, &den))
}

/// Like [`ratfn_make`] for inputs already known to be coprime in
/// `Z[q, q^-1]` up to integer content, e.g. the first column of a matrix
/// with unit determinant. Only units and integer content are normalized.
pub fn ratfn_from_coprime(num: &LaurentPoly, den: &LaurentPoly) -> (Unit, RatFn) {
    assert!(!den.is_zero(), "zero denominator");
    if num.is_zero() {
        return (Unit::ONE, RatFn::zero());
    }
    let (sn, en, mut n) = num.split_unit();
    let (sd, ed, mut d) = den.split_unit();
    let content = n.content().gcd(&d.content());
    if !content.is_one() {
        n = n.div_scalar(&content).expect("content divides");
        d = d.div_scalar(&content).expect("content divides");
    }
    (Unit::new(sn * sd, en - ed), RatFn { num: n, den: d })
}

/// Rebuilds the pair `(unit * num, den)`.
pub fn unit_fraction(unit: Unit, f: &RatFn) -> (LaurentPoly, LaurentPoly) {
    let num = if unit.sign < 0 { -f.num() } else { f.num().clone() };
    (num.shift(unit.exp), f.den().clone())
}

/// Exact equality of two fractions of Laurent polynomials by cross-multiplication.
pub fn fractions_equal(a: (&LaurentPoly, &LaurentPoly), b: (&LaurentPoly, &LaurentPoly)) -> bool {
    a.0 * b.1 == b.0 * a.1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn strips_units() {
        let (u, f) = ratfn_make(&p("q+q^3"), &p("q^2")).unwrap();
        assert_eq!(u, Unit::new(1, -1));
        assert_eq!(f.num(), &p("1+q^2"));
        assert!(f.den().is_one());
    }

    #[test]
    fn negative_quarter() {
        let (u, f) = ratfn_make(&p("-1"), &p("q+q^2+q^3+q^4")).unwrap();
        assert_eq!(u, Unit::new(-1, -1));
        assert!(f.num().is_one());
        assert_eq!(f.den(), &p("1+q+q^2+q^3"));
    }

    #[test]
    fn reduces_gcd() {
        let num = p("1+q") * p("1+q+q^2");
        let (u, f) = ratfn_make(&num, &p("1+q")).unwrap();
        assert_eq!(u, Unit::ONE);
        assert_eq!(f.num(), &p("1+q+q^2"));
        assert!(f.den().is_one());
    }

    #[test]
    fn integer_content_and_signs() {
        let (u, f) = ratfn_make(&p("-2-2q"), &p("-4q")).unwrap();
        assert_eq!(u, Unit::new(1, -1));
        assert_eq!(f.num(), &p("1+q"));
        assert_eq!(f.den(), &p("2"));
        assert_eq!(
            ratfn_make(&p("1"), &LaurentPoly::zero()),
            Err(RatFnError::ZeroDenominator)
        );
        let (u, f) = ratfn_make(&LaurentPoly::zero(), &p("3+q")).unwrap();
        assert_eq!(u, Unit::ONE);
        assert!(f.is_zero());
    }

    #[test]
    fn unit_fraction_round_trip() {
        let (n, d) = (p("-q^-3-q^-2"), p("q+2q^2"));
        let (u, f) = ratfn_make(&n, &d).unwrap();
        let (n2, d2) = unit_fraction(u, &f);
        assert!(fractions_equal((&n, &d), (&n2, &d2)));
    }
}
