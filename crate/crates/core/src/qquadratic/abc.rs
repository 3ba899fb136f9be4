//! The quadratic equation satisfied by the fixed point of `M_q(c)`.
//!
//! Writing `M_q(c) = [[a, b], [c, d]]`, a fixed point `X` satisfies
//! `A X^2 - B X + C = 0` with `A = c`, `B = a - d`, `C = -b`; in
//! q-continuants
//! `A = E_{k-1}(c_2..c_k)`,
//! `B = E_k(c_1..c_k) + q^{c_k - 1} E_{k-2}(c_2..c_{k-1})`,
//! `C = q^{c_k - 1} E_{k-1}(c_1..c_{k-1})`.
//! Solving gives `X = (R ± sqrt P) / S` with `R = B`, `S = 2A` and
//! `P = B^2 - 4AC = Tr^2 - 4 q^{sum (c_i - 1)}`.

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use super::QuadError;
use crate::poly::LaurentPoly;
use crate::qmodular::{continuant, continuant_range, trace_word, weight};

/// The coefficients of `A X^2 - B X + C = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abc {
    pub a: LaurentPoly,
    pub b: LaurentPoly,
    pub c: LaurentPoly,
}

impl Abc {
    /// `B^2 - 4 A C`.
    pub fn discriminant(&self) -> LaurentPoly {
        &(&self.b * &self.b) - &(&self.a * &self.c).scale(&BigInt::from(4))
    }

    pub fn to_json(&self) -> Value {
        json!({ "A": self.a.to_json(), "B": self.b.to_json(), "C": self.c.to_json() })
    }
}

/// `(P, R, S)` with fixed points `(R ± sqrt P) / S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prs {
    pub p: LaurentPoly,
    pub r: LaurentPoly,
    pub s: LaurentPoly,
}

impl Prs {
    pub fn to_json(&self) -> Value {
        json!({ "P": self.p.to_json(), "R": self.r.to_json(), "S": self.s.to_json() })
    }
}

/// Rejects words whose classical matrix is not hyperbolic (`|Tr| <= 2`).
fn check_hyperbolic(c: &[i64]) -> Result<LaurentPoly, QuadError> {
    if c.is_empty() {
        return Err(QuadError::EmptyWord);
    }
    let tr = trace_word(c);
    let t1 = tr.eval_one();
    if t1.abs() <= BigInt::from(2) {
        return Err(QuadError::NotHyperbolic { trace: t1 });
    }
    Ok(tr)
}

fn abc_unchecked(c: &[i64]) -> Abc {
    let k = c.len();
    let ck = c[k - 1];
    Abc {
        a: continuant(&c[1..]),
        b: &continuant(c) + &continuant_range(c, 1, k - 1).shift(ck - 1),
        c: continuant(&c[..k - 1]).shift(ck - 1),
    }
}

/// `A, B, C` for a hyperbolic word.
pub fn abc(c: &[i64]) -> Result<Abc, QuadError> {
    check_hyperbolic(c)?;
    Ok(abc_unchecked(c))
}

/// `P, R, S` for a hyperbolic word.
pub fn prs(c: &[i64]) -> Result<Prs, QuadError> {
    let tr = check_hyperbolic(c)?;
    let e = abc_unchecked(c);
    let p = &(&tr * &tr) - &LaurentPoly::monomial(4, weight(c));
    Ok(Prs {
        p,
        r: e.b,
        s: e.a.scale(&BigInt::from(2)),
    })
}

/// `E_{k-1}(c_2..c_k) q^{c_k-1} E_{k-1}(c_1..c_{k-1})
///  - E_k(c) q^{c_k-1} E_{k-2}(c_2..c_{k-1}) = q^{sum (c_i - 1)}`.
pub fn desnanot_jacobi_check(c: &[i64]) -> bool {
    let k = c.len();
    if k == 0 {
        return false;
    }
    let ck = c[k - 1];
    let lhs = &(&continuant(&c[1..]) * &continuant(&c[..k - 1]).shift(ck - 1))
        - &(&continuant(c) * &continuant_range(c, 1, k - 1).shift(ck - 1));
    lhs == LaurentPoly::q_power(weight(c))
}
