//! Shortening words of `M_q(c)` and trace identities.
//!
//! Interior letters 1, -1 and 0 can be removed exactly:
//! `M(.., c, 1, d, ..) = q M(.., c-1, d-1, ..)`,
//! `M(.., c, -1, d, ..) = -q^-2 M(.., c+1, d+1, ..)` and, since
//! `S_q R_q^0 S_q = -q^-1 Id`, `M(.., c, 0, d, ..) = -q^-1 M(.., c+d, ..)`.
//! On traces the word is cyclic, which gives
//! `Tr M(c_1, .., c_k, 0) = -q^-1 Tr M(c_1 + c_k, c_2, .., c_{k-1})`.

use super::continuant::{continuant, m_neg_word, weight};
use super::mat::QMat2;
use crate::poly::LaurentPoly;
use crate::ratfn::Unit;

/// Applies one interior rule at position `i` (`0 < i < len - 1`).
fn apply_rule(c: &mut Vec<i64>, i: usize) -> Option<Unit> {
    let (l, r) = (c[i - 1], c[i + 1]);
    let (unit, merged): (Unit, Vec<i64>) = match c[i] {
        1 => (Unit::new(1, 1), vec![l - 1, r - 1]),
        -1 => (Unit::new(-1, -2), vec![l + 1, r + 1]),
        0 => (Unit::new(-1, -1), vec![l + r]),
        _ => return None,
    };
    c.splice(i - 1..=i + 1, merged);
    Some(unit)
}

/// Matrix-level reduction: returns `(u, c')` with `M_q(c) = u * M_q(c')`
/// and no 1, -1 or 0 left strictly inside `c'`. End letters are kept.
pub fn word_reduce(c: &[i64]) -> (Unit, Vec<i64>) {
    let mut w = c.to_vec();
    let mut unit = Unit::ONE;
    loop {
        let pos = (1..w.len().saturating_sub(1)).find(|&i| matches!(w[i], -1..=1));
        match pos {
            Some(i) => unit = unit * apply_rule(&mut w, i).expect("rule applies"),
            None => return (unit, w),
        }
    }
}

/// Trace-level reduction on the cyclic word: returns `(u, c')` with
/// `Tr M_q(c) = u * Tr M_q(c')`. Stops at length 2.
pub fn trace_reduce(c: &[i64]) -> (Unit, Vec<i64>) {
    let mut w = c.to_vec();
    let mut unit = Unit::ONE;
    while w.len() >= 3 {
        let Some(j) = w.iter().position(|x| matches!(x, -1..=1)) else {
            break;
        };
        // Rotate so that the letter sits at index 1.
        let k = w.len();
        w.rotate_left((j + k - 1) % k);
        unit = unit * apply_rule(&mut w, 1).expect("rule applies");
    }
    (unit, w)
}

/// `Tr M_q(c)`.
pub fn trace_word(c: &[i64]) -> LaurentPoly {
    m_neg_word(c).trace()
}

/// `M_q(c_k, .., c_1)^T = q^w D M_{q^-1}(c_1, .., c_k) D` with
/// `D = diag(1, -1)` and `w = sum (c_i - 1)`.
pub fn reversal_identity_holds(c: &[i64]) -> bool {
    let rev: Vec<i64> = c.iter().rev().copied().collect();
    let lhs = m_neg_word(&rev).transpose();
    let m = m_neg_word(c).reverse();
    let conj = QMat2::new(m.a, -m.b, -m.c, m.d);
    lhs == conj.scale_unit(Unit::new(1, weight(c)))
}

/// The two continuant combinations that are invariant under reversal of
/// the word:
/// `E_k(c) - q^{c_k - 1} E_{k-2}(c_2..c_{k-1})` (the trace) and
/// `E_{k-1}(c_2..c_k) + q^{c_k} E_{k-1}(c_1..c_{k-1})`.
/// Requires `k >= 2`.
pub fn reversal_combinations(c: &[i64]) -> (LaurentPoly, LaurentPoly) {
    let k = c.len();
    assert!(k >= 2, "word of length at least 2 required");
    let ck = c[k - 1];
    let first = &continuant(c) - &continuant(&c[1..k - 1]).shift(ck - 1);
    let second = &continuant(&c[1..]) + &continuant(&c[..k - 1]).shift(ck);
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_matrix(c: &[i64]) {
        let (u, w) = word_reduce(c);
        assert_eq!(m_neg_word(c), m_neg_word(&w).scale_unit(u), "{c:?}");
    }

    #[test]
    fn interior_rules() {
        assert_eq!(word_reduce(&[4, 1, 5]), (Unit::new(1, 1), vec![3, 4]));
        assert_eq!(word_reduce(&[4, -1, 5]), (Unit::new(-1, -2), vec![5, 6]));
        assert_eq!(word_reduce(&[4, 0, 5]), (Unit::new(-1, -1), vec![9]));
        assert_eq!(word_reduce(&[2, 2, 2]), (Unit::ONE, vec![2, 2, 2]));
        assert_eq!(word_reduce(&[1, 3, 1]), (Unit::ONE, vec![1, 3, 1]));
        for c in [
            vec![4, 1, 5],
            vec![4, -1, 5],
            vec![3, 0, -2, 1, 1, 4],
            vec![1, 1, 1],
            vec![2, 1, 1, 2, -1, 0, 3],
        ] {
            check_matrix(&c);
        }
    }

    #[test]
    fn trace_rules() {
        for c in [
            vec![3, 4, 0],
            vec![0, 2, 5, 3],
            vec![1, 1, 1],
            vec![2, 1, 4, -1, 3, 0],
            vec![5, 2, 1],
        ] {
            let (u, w) = trace_reduce(&c);
            assert_eq!(
                trace_word(&c),
                &trace_word(&w) * &u.to_poly(),
                "{c:?} -> {w:?}"
            );
        }
    }

    #[test]
    fn zero_rule_as_stated() {
        let c = [3, 5, 2, 4];
        let mut with_zero = c.to_vec();
        with_zero.push(0);
        let merged = [3 + 4, 5, 2];
        assert_eq!(
            trace_word(&with_zero),
            -trace_word(&merged).shift(-1)
        );
    }

    #[test]
    fn reversal() {
        for c in [vec![3], vec![2, 5], vec![-1, 4, 0, 2], vec![3, 3, 2, 7, 1]] {
            assert!(reversal_identity_holds(&c), "{c:?}");
        }
    }

    #[test]
    fn combinations_are_reversal_invariant() {
        for c in [vec![2, 2], vec![3, 2, 5], vec![4, 1, 2, 3]] {
            let rev: Vec<i64> = c.iter().rev().copied().collect();
            let (a, b) = reversal_combinations(&c);
            let (ra, rb) = reversal_combinations(&rev);
            assert_eq!(a, ra);
            assert_eq!(b, rb);
            assert!(a.is_palindrome() && b.is_palindrome());
            assert!(a.has_nonneg_coeffs() && b.has_nonneg_coeffs());
        }
    }
}
