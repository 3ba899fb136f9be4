//! The matrices `M_q(c)` and `M_q^+(a)` of continued fractions, and
//! q-continuants.

use super::group::{gen_power, Gen};
use super::mat::QMat2;
use crate::poly::LaurentPoly;

/// `M_q(c_1, ..., c_k) = prod [[ [c_i]_q, -q^(c_i - 1) ], [1, 0]]` for
/// arbitrary integers. Runs of 2 use the closed form
/// `M_q(2)^t = [[ [t+1], -q[t] ], [ [t], -q[t-1] ]]`.
pub fn m_neg_word(c: &[i64]) -> QMat2 {
    let mut m = QMat2::identity();
    let mut i = 0;
    while i < c.len() {
        if c[i] == 2 {
            let mut t = 0i64;
            while i < c.len() && c[i] == 2 {
                t += 1;
                i += 1;
            }
            if t == 1 {
                m = m.mul_cf_step(2, 0, -1, 1);
            } else {
                m = m.mul(&two_run(t));
            }
        } else {
            m = m.mul_cf_step(c[i], 0, -1, c[i] - 1);
            i += 1;
        }
    }
    m
}

fn two_run(t: i64) -> QMat2 {
    let qint = |n: i64| LaurentPoly::one().mul_qint(n);
    QMat2::new(
        qint(t + 1),
        -qint(t).shift(1),
        qint(t),
        -qint(t - 1).shift(1),
    )
}

/// The matrix `M_q(c)` multiplied factor by factor, with no shortcuts.
pub fn m_neg_word_naive(c: &[i64]) -> QMat2 {
    c.iter().fold(QMat2::identity(), |m, &ci| {
        let f = QMat2::new(
            LaurentPoly::one().mul_qint(ci),
            -LaurentPoly::q_power(ci - 1),
            LaurentPoly::one(),
            LaurentPoly::zero(),
        );
        m.mul(&f)
    })
}

/// Error for regular words of odd length.
#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
#[error("regular continued fraction words must have even length, got {0}")]
pub struct OddLength(pub usize);

/// `M_q^+(a_1, ..., a_2m)`: alternating factors
/// `[[ [a]_q, q^a ], [1, 0]]` and `[[ [a]_{q^-1}, q^-a ], [1, 0]]`.
pub fn m_pos_word(a: &[i64]) -> Result<QMat2, OddLength> {
    if a.len() % 2 == 1 {
        return Err(OddLength(a.len()));
    }
    let mut m = QMat2::identity();
    for pair in a.chunks(2) {
        let (x, y) = (pair[0], pair[1]);
        m = m.mul_cf_step(x, 0, 1, x);
        // [y]_{q^-1} = q^(1-y) [y]_q
        m = m.mul_cf_step(y, 1 - y, 1, -y);
    }
    Ok(m)
}

/// `R_q^{a_1} L_q^{a_2} ... R_q^{a_{2m-1}} L_q^{a_{2m}}`, the deformation of
/// `M^+(a)` through the generators. It equals
/// `q^{a_2 + a_4 + ... + a_2m} M_q^+(a)`.
pub fn m_pos_word_generators(a: &[i64]) -> Result<QMat2, OddLength> {
    if a.len() % 2 == 1 {
        return Err(OddLength(a.len()));
    }
    Ok(a.chunks(2).fold(QMat2::identity(), |m, pair| {
        m.mul(&gen_power(Gen::R, pair[0]))
            .mul(&gen_power(Gen::L, pair[1]))
    }))
}

/// The q-continuant `E_k(c_1, ..., c_k)`, the upper-left entry of
/// `M_q(c)`. `E_0() = 1`.
pub fn continuant(c: &[i64]) -> LaurentPoly {
    m_neg_word(c).a
}

/// `E` of a subword `c[i..j]`, with the convention that a subword of
/// length -1 (`j + 1 == i`) has continuant 0.
pub(crate) fn continuant_range(c: &[i64], i: usize, j: usize) -> LaurentPoly {
    if j + 1 == i {
        LaurentPoly::zero()
    } else {
        continuant(&c[i..j])
    }
}

/// `sum (c_i - 1)`, the exponent of `det M_q(c)`.
pub fn weight(c: &[i64]) -> i64 {
    c.iter().map(|x| x - 1).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfn::Unit;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn single_factor() {
        assert_eq!(
            m_neg_word(&[3]),
            QMat2::new(p("1+q+q^2"), p("-q^2"), p("1"), p("0"))
        );
    }

    #[test]
    fn five_thirds() {
        let m = m_neg_word(&[2, 3]);
        assert_eq!(m.a, p("1+q+2q^2+q^3"));
        assert_eq!(m.c, p("1+q+q^2"));
    }

    #[test]
    fn one_one_one_is_minus_identity() {
        assert_eq!(m_neg_word(&[1, 1, 1]), QMat2::scalar(Unit::new(-1, 0)));
    }

    #[test]
    fn runs_of_two_agree_with_naive_product() {
        for w in [
            vec![2, 2, 2, 2],
            vec![3, 2, 2, 5, 2],
            vec![2],
            vec![-1, 2, 2, 0, 2, 2, 2, 1],
            vec![],
        ] {
            assert_eq!(m_neg_word(&w), m_neg_word_naive(&w), "{w:?}");
        }
    }

    #[test]
    fn determinant() {
        for w in [vec![3, 2, 5], vec![-2, 0, 4, 1], vec![2, 2]] {
            assert_eq!(m_neg_word(&w).det_unit(), Some(Unit::new(1, weight(&w))));
        }
    }

    #[test]
    fn regular_matrices() {
        let m = m_pos_word(&[1, 1, 1, 1]).unwrap();
        assert_eq!(m.a, p("1+q+2q^2+q^3").shift(-1));
        assert_eq!(m.c, p("1+q+q^2").shift(-1));
        let g = m_pos_word_generators(&[1, 1, 1, 1]).unwrap();
        assert_eq!(g, m.scale_unit(Unit::new(1, 2)));
        let g = m_pos_word_generators(&[2, -1, -1, 2]).unwrap();
        let m = m_pos_word(&[2, -1, -1, 2]).unwrap();
        assert_eq!(g, m.scale_unit(Unit::new(1, 1)));
        assert_eq!(m_pos_word(&[1, 2, 3]), Err(OddLength(3)));
    }

    #[test]
    fn continuants() {
        assert_eq!(continuant(&[3]), p("1+q+q^2"));
        assert_eq!(continuant(&[2, 3]), p("1+q+2q^2+q^3"));
        assert!(continuant(&[]).is_one());
        assert!(continuant_range(&[4, 5], 1, 0).is_zero());
    }
}
