//! 2x2 matrices over `Z[q, q^-1]` and their projective classes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::poly::LaurentPoly;
use crate::ratfn::Unit;

/// The matrix `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QMat2 {
    pub a: LaurentPoly,
    pub b: LaurentPoly,
    pub c: LaurentPoly,
    pub d: LaurentPoly,
}

/// An integer matrix `[[a, b], [c, d]]`, e.g. a `q = 1` specialization.
pub type IntMat2 = [[BigInt; 2]; 2];

pub fn int_mat(a: i64, b: i64, c: i64, d: i64) -> IntMat2 {
    [[a.into(), b.into()], [c.into(), d.into()]]
}

pub fn int_mat_mul(x: &IntMat2, y: &IntMat2) -> IntMat2 {
    let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

impl QMat2 {
    pub fn new(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly, d: LaurentPoly) -> Self {
        QMat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        QMat2::new(
            LaurentPoly::one(),
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            LaurentPoly::one(),
        )
    }

    /// The scalar matrix `u * Id`.
    pub fn scalar(u: Unit) -> Self {
        QMat2::new(u.to_poly(), LaurentPoly::zero(), LaurentPoly::zero(), u.to_poly())
    }

    pub fn from_ints(m: &IntMat2) -> Self {
        let p = |x: &BigInt| LaurentPoly::constant(x.clone());
        QMat2::new(p(&m[0][0]), p(&m[0][1]), p(&m[1][0]), p(&m[1][1]))
    }

    pub fn entries(&self) -> [&LaurentPoly; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn mul(&self, o: &QMat2) -> QMat2 {
        QMat2::new(
            &(&self.a * &o.a) + &(&self.b * &o.c),
            &(&self.a * &o.b) + &(&self.b * &o.d),
            &(&self.c * &o.a) + &(&self.d * &o.c),
            &(&self.c * &o.b) + &(&self.d * &o.d),
        )
    }

    /// Right multiplication by `[[x, y], [1, 0]]` where `x = [n]_q * q^s`
    /// and `y = sign * q^e`, without a general polynomial product.
    pub(crate) fn mul_cf_step(&self, n: i64, s: i64, sign: i8, e: i64) -> QMat2 {
        let y = |p: &LaurentPoly| {
            let p = p.shift(e);
            if sign < 0 {
                -p
            } else {
                p
            }
        };
        QMat2::new(
            &self.a.mul_qint(n).shift(s) + &self.b,
            y(&self.a),
            &self.c.mul_qint(n).shift(s) + &self.d,
            y(&self.c),
        )
    }

    pub fn det(&self) -> LaurentPoly {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// The determinant as a unit `±q^k`, if it is one.
    pub fn det_unit(&self) -> Option<Unit> {
        Unit::from_poly(&self.det())
    }

    pub fn trace(&self) -> LaurentPoly {
        &self.a + &self.d
    }

    pub fn scale_unit(&self, u: Unit) -> QMat2 {
        let f = |p: &LaurentPoly| {
            let p = p.shift(u.exp);
            if u.sign < 0 {
                -p
            } else {
                p
            }
        };
        QMat2::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }

    pub fn transpose(&self) -> QMat2 {
        QMat2::new(self.a.clone(), self.c.clone(), self.b.clone(), self.d.clone())
    }

    /// Entrywise substitution `q -> q^{-1}`.
    pub fn reverse(&self) -> QMat2 {
        QMat2::new(self.a.reverse(), self.b.reverse(), self.c.reverse(), self.d.reverse())
    }

    /// Entrywise specialization at `q = 1`.
    pub fn eval_one(&self) -> IntMat2 {
        [
            [self.a.eval_one(), self.b.eval_one()],
            [self.c.eval_one(), self.d.eval_one()],
        ]
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    /// `self = u * other` for some unit `u`; returns `u`.
    pub fn unit_ratio(&self, other: &QMat2) -> Option<Unit> {
        let (p, sp) = ProjClass::with_unit(self);
        let (o, so) = ProjClass::with_unit(other);
        (p == o).then(|| sp * so.inverse())
    }

    pub fn to_json(&self) -> Value {
        json!([
            [self.a.to_json(), self.b.to_json()],
            [self.c.to_json(), self.d.to_json()]
        ])
    }
}

/// Two rows of polynomial strings, columns aligned.
impl fmt::Display for QMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries().iter().map(|p| p.to_string()).collect();
        let w0 = cells[0].len().max(cells[2].len());
        let w1 = cells[1].len().max(cells[3].len());
        writeln!(f, "[ {:<w0$}  {:<w1$} ]", cells[0], cells[1])?;
        write!(f, "[ {:<w0$}  {:<w1$} ]", cells[2], cells[3])
    }
}

/// A matrix modulo the scalars `±q^N`.
///
/// The stored representative has smallest exponent 0 over all entries, and
/// the first nonzero entry (in the order a, b, c, d) has positive lowest
/// coefficient, so class equality is structural equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjClass {
    rep: QMat2,
}

impl ProjClass {
    pub fn new(m: &QMat2) -> Self {
        Self::with_unit(m).0
    }

    /// The class together with the unit `u` such that `m = u * rep`.
    pub fn with_unit(m: &QMat2) -> (Self, Unit) {
        let low = m.entries().iter().filter_map(|p| p.min_deg()).min().unwrap_or(0);
        let first = m.entries().into_iter().find(|p| !p.is_zero());
        let sign = match first.and_then(|p| p.lowest_coeff()) {
            Some(c) if c < &BigInt::zero() => -1,
            _ => 1,
        };
        let u = Unit::new(sign, low);
        (
            ProjClass {
                rep: m.scale_unit(u.inverse()),
            },
            u,
        )
    }

    pub fn rep(&self) -> &QMat2 {
        &self.rep
    }

    pub fn is_identity(&self) -> bool {
        self.rep.is_identity()
    }

    /// The trace of the representative, normalized to valuation 0 with
    /// positive lowest coefficient.
    pub fn trace(&self) -> LaurentPoly {
        self.rep.trace().split_unit().2
    }
}

impl fmt::Display for ProjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn determinant_and_trace() {
        let m = QMat2::new(p("q+q^2"), p("1"), p("q"), p("1"));
        assert_eq!(m.det(), p("q^2"));
        assert_eq!(m.det_unit(), Some(Unit::new(1, 2)));
        assert_eq!(m.trace(), p("1+q+q^2"));
        let m = QMat2::new(p("2"), p("1"), p("1"), p("1"));
        assert_eq!(m.det_unit(), Some(Unit::ONE));
        let m = QMat2::new(p("2"), p("0"), p("0"), p("1"));
        assert_eq!(m.det_unit(), None);
    }

    #[test]
    fn projective_normalization() {
        let m = QMat2::new(p("-q^-2"), p("0"), p("0"), p("-q^-2"));
        assert!(ProjClass::new(&m).is_identity());
        let (c, u) = ProjClass::with_unit(&m);
        assert_eq!(u, Unit::new(-1, -2));
        assert_eq!(c.rep().scale_unit(u), m);
        let n = QMat2::new(p("q"), p("1"), p("0"), p("1"));
        let k = n.scale_unit(Unit::new(-1, 5));
        assert_eq!(k.unit_ratio(&n), Some(Unit::new(-1, 5)));
    }

    #[test]
    fn display_block() {
        let m = QMat2::new(p("q+q^2"), p("1"), p("q"), p("1"));
        assert_eq!(m.to_string(), "[ q + q^2  1 ]\n[ q        1 ]");
    }
}
