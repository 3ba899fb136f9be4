//! q-deformed quadratic irrationals `(R ± sqrt P) / S`.
//!
//! The square root is always the series branch with positive lowest
//! coefficient, so `branch` is a sign relative to that root. Pulling a
//! factor `t` out of the radical, `sqrt(t^2 P) = ± t sqrt P`, flips the branch
//! when the lowest coefficient of `t` is negative.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::abc::{prs, Abc};
use super::surd::{periodic_negative_cf, Surd};
use super::QuadError;
use crate::poly::LaurentPoly;
use crate::qmodular::{m_neg_word, QMat2};
use crate::series::{series_sqrt, QSeries, SeriesError};

/// `(R + branch * sqrt P) / S` in canonical form: `P` of valuation 0 or 1,
/// no nonunit `t` with `t | R`, `t | S`, `t^2 | P`, and `S` with positive
/// leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSurd {
    pub r: LaurentPoly,
    pub p: LaurentPoly,
    pub s: LaurentPoly,
    pub branch: i8,
}

fn lowest_sign(p: &LaurentPoly) -> i8 {
    if p.lowest_coeff().is_some_and(Signed::is_negative) {
        -1
    } else {
        1
    }
}

/// Largest `m` with `m^2 | n`, by trial division.
fn int_square_part(n: &BigInt) -> BigInt {
    let mut rest = n.abs();
    let mut m = BigInt::one();
    let mut d = BigInt::from(2);
    while &d * &d <= rest && d < BigInt::from(1_000_000) {
        let dd = &d * &d;
        while rest.is_multiple_of(&dd) {
            rest /= &dd;
            m *= &d;
        }
        if rest.is_multiple_of(&d) {
            rest /= &d;
        }
        d += 1;
    }
    m
}

/// The largest `F` (up to units) with `F^2 | P`.
fn square_root_part(p: &LaurentPoly) -> LaurentPoly {
    let (_, _, base) = p.split_unit();
    let base = if base.leading_coeff().is_some_and(Signed::is_negative) {
        -base
    } else {
        base
    };
    let (f, _) = base.square_free_split();
    f.scale(&int_square_part(&p.content()))
}

impl QSurd {
    /// Canonicalizes `(r + branch * sqrt p) / s`.
    pub fn new(r: LaurentPoly, p: LaurentPoly, s: LaurentPoly, branch: i8) -> Result<QSurd, QuadError> {
        if s.is_zero() {
            return Err(QuadError::ZeroDenominator);
        }
        if p.is_zero() {
            return Err(QuadError::ZeroRadicand);
        }
        let mut branch = if branch < 0 { -1 } else { 1 };
        // sqrt(q^{2k} P) = q^k sqrt(P)
        let k = p.min_deg().expect("nonzero").div_euclid(2);
        let (mut r, mut p, mut s) = (r.shift(-k), p.shift(-2 * k), s.shift(-k));
        let t = r.gcd(&s).gcd(&square_root_part(&p));
        if !t.is_one() {
            let div = |x: &LaurentPoly, d: &LaurentPoly| {
                x.exact_divide(d).ok().flatten().expect("common factor divides")
            };
            r = div(&r, &t);
            s = div(&s, &t);
            p = div(&p, &(&t * &t));
            branch *= lowest_sign(&t);
        }
        if s.leading_coeff().is_some_and(Signed::is_negative) {
            r = -r;
            s = -s;
            branch = -branch;
        }
        Ok(QSurd { r, p, s, branch })
    }

    /// The root `(R + sqrt P) / S` of the quadratic of `M_q(c)`.
    pub fn fixed_point(c: &[i64]) -> Result<QSurd, QuadError> {
        let f = prs(c)?;
        QSurd::new(f.r, f.p, f.s, 1)
    }

    /// The other root of the same quadratic.
    pub fn conjugate(&self) -> QSurd {
        QSurd {
            branch: -self.branch,
            ..self.clone()
        }
    }

    /// `A X^2 - B X + C = 0`, separated into its rational and radical parts:
    /// `A (R^2 + P) - B R S + C S^2 = 0` and `2 A R - B S = 0`.
    pub fn satisfies(&self, e: &Abc) -> bool {
        let (r, p, s) = (&self.r, &self.p, &self.s);
        let rational = &(&(&e.a * &(&(r * r) + p)) - &(&(&e.b * r) * s)) + &(&e.c * &(s * s));
        let radical = &(&e.a * r).scale(&BigInt::from(2)) - &(&e.b * s);
        rational.is_zero() && radical.is_zero()
    }

    /// `(R(1), P(1), S(1))`.
    pub fn eval_one(&self) -> (BigInt, BigInt, BigInt) {
        (self.r.eval_one(), self.p.eval_one(), self.s.eval_one())
    }

    /// True when `(R(1) + branch sqrt P(1)) / S(1)` is the classical `x`.
    pub fn classical_matches(&self, x: &Surd) -> bool {
        let (r1, p1, s1) = self.eval_one();
        if s1.is_zero() || !p1.is_positive() {
            return false;
        }
        let sign = if s1.is_negative() { -self.branch } else { self.branch };
        &r1 * &x.s == &x.r * &s1 && &x.s * &x.s * &p1 == &s1 * &s1 * &x.p && sign == x.sign
    }

    /// `(R + branch sqrt P) / S` as a series through `order`.
    pub fn series(&self, order: i64) -> Result<QSeries, SeriesError> {
        let vs = self.s.min_deg().expect("nonzero");
        let den = QSeries::from_poly(&self.s, i64::MAX / 4);
        let mut extra = vs.max(0) + 2;
        loop {
            let root = series_sqrt(&self.p, order + extra)?;
            let root = if self.branch < 0 { root.neg() } else { root };
            let y = root.add_poly(&self.r).div(&den)?;
            if y.order() >= order {
                return Ok(y.truncate(order));
            }
            extra += 4 + (order - y.order());
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "R": self.r.to_json(),
            "P": self.p.to_json(),
            "S": self.s.to_json(),
            "branch": if self.branch < 0 { "-" } else { "+" },
        })
    }
}

/// `(R ± sqrt(P)) / S` with compact polynomials.
impl fmt::Display for QSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.branch < 0 { '-' } else { '+' };
        if self.r.is_zero() {
            let lead = if self.branch < 0 { "-" } else { "" };
            write!(f, "({lead}sqrt({:#}))", self.p)?;
        } else {
            write!(f, "({:#} {op} sqrt({:#}))", self.r, self.p)?;
        }
        if self.s.terms().count() > 1 {
            write!(f, " / ({:#})", self.s)
        } else {
            write!(f, " / {:#}", self.s)
        }
    }
}

/// `(a y + b) / (c y + d)`, rationalized with the conjugate:
/// numerator `N D - a c P + branch S det sqrt P`, denominator `D^2 - c^2 P`
/// where `N = a R + b S`, `D = c R + d S`.
pub fn mobius_apply_qsurd(m: &QMat2, y: &QSurd) -> Result<QSurd, QuadError> {
    let n1 = &(&m.a * &y.r) + &(&m.b * &y.s);
    let d1 = &(&m.c * &y.r) + &(&m.d * &y.s);
    let r = &(&n1 * &d1) - &(&(&m.a * &m.c) * &y.p);
    let s = &(&d1 * &d1) - &(&(&m.c * &m.c) * &y.p);
    if s.is_zero() {
        return Err(QuadError::ZeroDenominator);
    }
    let k = &y.s * &m.det();
    let p = &(&k * &k) * &y.p;
    QSurd::new(r, p, s, y.branch * lowest_sign(&k))
}

/// `[x]_q` in closed form: the fixed point of `M_q` of the period, moved
/// across the preperiod, with the branch fixed by the classical value.
pub fn q_quadratic(x: &Surd) -> Result<QSurd, QuadError> {
    let cf = periodic_negative_cf(x)?;
    let mut y = QSurd::fixed_point(&cf.period)?;
    if !cf.preperiod.is_empty() {
        y = mobius_apply_qsurd(&m_neg_word(&cf.preperiod), &y)?;
    }
    if y.classical_matches(x) {
        Ok(y)
    } else if y.conjugate().classical_matches(x) {
        Ok(y.conjugate())
    } else {
        Err(QuadError::BranchMismatch)
    }
}

/// Series of a q-surd through `order`.
pub fn qsurd_series(y: &QSurd, order: i64) -> Result<QSeries, QuadError> {
    Ok(y.series(order)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::{q_int, q_series_from_cf, Flavor, StreamOptions};
    use crate::qquadratic::abc::abc;
    use crate::qquadratic::surd::cf_stream;
    use crate::series::small_coeffs;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn surd(t: &str) -> Surd {
        t.parse().unwrap()
    }

    #[test]
    fn canonical_scaling() {
        let y = QSurd::new(p("2q^3"), p("4q^6+8q^7"), p("4q^3"), 1).unwrap();
        assert_eq!(y, QSurd::new(p("1"), p("1+2q"), p("2"), 1).unwrap());
        let y = QSurd::new(p("-1-q"), p("1+2q"), p("-2"), 1).unwrap();
        assert_eq!((y.r.clone(), y.s.clone(), y.branch), (p("1+q"), p("2"), -1));
        // t = 1 - q has negative lowest coefficient after normalization
        let t = p("1-q");
        let y = QSurd::new(&t * &p("3"), &(&t * &t) * &p("5+q"), &t * &p("2"), 1).unwrap();
        assert_eq!((y.r.clone(), y.p.clone(), y.s.clone(), y.branch), (p("3"), p("5+q"), p("2"), 1));
        let t = p("q-1");
        let y = QSurd::new(&t * &p("3"), &(&t * &t) * &p("5+q"), &t * &p("2"), 1).unwrap();
        assert_eq!(y.branch, -1);
    }

    #[test]
    fn period_three() {
        let y = QSurd::fixed_point(&[3]).unwrap();
        assert_eq!(y.r, q_int(3));
        assert_eq!(y.p, p("1+2q-q^2+2q^3+q^4"));
        assert_eq!(y.s, p("2"));
        assert_eq!(y.to_string(), "(1+q+q^2 + sqrt(1+2q-q^2+2q^3+q^4)) / 2");
        assert!(y.satisfies(&abc(&[3]).unwrap()));
        assert_eq!(mobius_apply_qsurd(&m_neg_word(&[3]), &y).unwrap(), y);
        assert_eq!(mobius_apply_qsurd(&QMat2::identity(), &y).unwrap(), y);
    }

    #[test]
    fn golden_ratio() {
        let y3 = QSurd::fixed_point(&[3]).unwrap();
        let y = mobius_apply_qsurd(&m_neg_word(&[2]), &y3).unwrap();
        let expect = QSurd::new(p("q^2+q-1"), &p("1-q+q^2") * &p("1+3q+q^2"), p("2q"), 1).unwrap();
        assert_eq!(y, expect);
        assert_eq!(q_quadratic(&surd("(1+sqrt(5))/2")).unwrap(), expect);
    }

    #[test]
    fn known_closed_forms() {
        let y = q_quadratic(&surd("1+sqrt(2)")).unwrap();
        assert_eq!(y.r, p("q^3+2q-1"));
        assert_eq!(y.p, p("q^6+4q^4-2q^3+4q^2+1"));
        assert_eq!(y.p, &p("1-q+q^2") * &p("1+q+4q^2+q^3+q^4"));
        assert_eq!(y.s, p("2q"));
        let y = q_quadratic(&surd("sqrt(2)")).unwrap();
        assert_eq!(y.p, &p("q^2-q+1") * &p("q^4+q^3+4q^2+q+1"));
        let y = q_quadratic(&surd("(3+sqrt(13))/2")).unwrap();
        assert_eq!(y.r, p("q^4+q^2+2q-1"));
        assert_eq!(y.p, &p("1-q+q^2") * &p("1+q+2q^2+5q^3+2q^4+q^5+q^6"));
    }

    #[test]
    fn one_plus_sqrt2_series() {
        let y = q_quadratic(&surd("1+sqrt(2)")).unwrap();
        let s = qsurd_series(&y, 10).unwrap();
        assert_eq!(
            small_coeffs(&s, 0, 10).unwrap(),
            vec![1, 1, 0, 0, 1, 0, -2, 1, 4, -5, -7]
        );
    }

    #[test]
    fn series_matches_streams() {
        for t in [
            "(1+sqrt(5))/2",
            "(3+sqrt(5))/2",
            "sqrt(2)",
            "sqrt(3)",
            "-sqrt(7)",
            "(1+sqrt(3))/2",
            "(5-sqrt(17))/4",
            "(-3+sqrt(11))/5",
        ] {
            let x = surd(t);
            let y = q_quadratic(&x).unwrap();
            let direct = qsurd_series(&y, 20).unwrap();
            for flavor in [Flavor::Regular, Flavor::Negative] {
                let s = q_series_from_cf(cf_stream(&x, flavor), flavor, 20, StreamOptions::default())
                    .unwrap();
                assert!(direct.agrees_through(&s, 20), "{t} {flavor:?}: {direct} vs {s}");
            }
        }
    }
}
