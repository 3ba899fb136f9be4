//! Generators of the q-deformed modular group and words in them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::mat::{int_mat_mul, IntMat2, ProjClass, QMat2};
use crate::poly::LaurentPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("determinant is {0}, expected 1")]
    BadDeterminant(BigInt),
    #[error("entry too large for a word exponent")]
    Overflow,
    #[error("cannot parse word at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("reconstruction check failed")]
    Reconstruction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    R,
    S,
    L,
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Gen::R => "R",
            Gen::S => "S",
            Gen::L => "L",
        };
        f.write_str(c)
    }
}

/// `R_q`, `S_q` or `L_q = R_q S_q R_q`.
pub fn generator(g: Gen) -> QMat2 {
    gen_power(g, 1)
}

/// Closed forms for powers of a generator:
/// `R^n = [[q^n, [n]], [0, 1]]`, `L^n = [[q^n, 0], [q[n], 1]]`,
/// `S^n = (-q^-1)^floor(n/2) S^(n mod 2)`.
pub fn gen_power(g: Gen, n: i64) -> QMat2 {
    let z = LaurentPoly::zero;
    let one = LaurentPoly::one;
    match g {
        Gen::R => QMat2::new(LaurentPoly::q_power(n), LaurentPoly::one().mul_qint(n), z(), one()),
        Gen::L => QMat2::new(
            LaurentPoly::q_power(n),
            z(),
            LaurentPoly::q_power(1).mul_qint(n),
            one(),
        ),
        Gen::S => {
            let (half, odd) = n.div_mod_floor(&2);
            let sign = if half.is_odd() { -1 } else { 1 };
            let u = LaurentPoly::monomial(sign, -half);
            if odd == 0 {
                QMat2::new(u.clone(), z(), z(), u)
            } else {
                QMat2::new(z(), -u.shift(-1), u, z())
            }
        }
    }
}

/// A word `g1^e1 g2^e2 ...` with nonzero exponents and no two adjacent
/// letters on the same generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GroupWord {
    letters: Vec<(Gen, i64)>,
}

impl GroupWord {
    pub fn new(letters: impl IntoIterator<Item = (Gen, i64)>) -> Self {
        let mut out: Vec<(Gen, i64)> = Vec::new();
        for (g, e) in letters {
            match out.last_mut() {
                Some((h, f)) if *h == g => {
                    *f += e;
                    if *f == 0 {
                        out.pop();
                    }
                }
                _ if e != 0 => out.push((g, e)),
                _ => {}
            }
        }
        GroupWord { letters: out }
    }

    pub fn letters(&self) -> &[(Gen, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The product of the deformed generator powers.
    pub fn matrix(&self) -> QMat2 {
        self.letters
            .iter()
            .fold(QMat2::identity(), |m, &(g, e)| m.mul(&gen_power(g, e)))
    }

    /// The classical matrix (the deformation at `q = 1`).
    pub fn int_matrix(&self) -> IntMat2 {
        self.matrix().eval_one()
    }
}

/// The projective class of the deformed word.
pub fn q_deform_word(w: &GroupWord) -> ProjClass {
    ProjClass::new(&w.matrix())
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses `R^2 S R^-1 L^3`, `RSR`, `R^(-2)`; `1` is the empty word.
impl FromStr for GroupWord {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let b = s.as_bytes();
        let err = |pos: usize, msg: &str| GroupError::Parse {
            pos,
            msg: msg.to_string(),
        };
        let mut i = 0;
        let mut letters = Vec::new();
        let skip = |i: &mut usize| {
            while *i < b.len() && (b[*i].is_ascii_whitespace() || b[*i] == b'*') {
                *i += 1;
            }
        };
        if s.trim() == "1" {
            return Ok(GroupWord::default());
        }
        loop {
            skip(&mut i);
            if i >= b.len() {
                break;
            }
            let g = match b[i] {
                b'R' => Gen::R,
                b'S' => Gen::S,
                b'L' => Gen::L,
                _ => return Err(err(i, "expected R, S or L")),
            };
            i += 1;
            let mut e = 1i64;
            if i < b.len() && b[i] == b'^' {
                i += 1;
                let paren = i < b.len() && b[i] == b'(';
                if paren {
                    i += 1;
                }
                let start = i;
                if i < b.len() && (b[i] == b'-' || b[i] == b'+') {
                    i += 1;
                }
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                e = s[start..i].parse().map_err(|_| err(start, "bad exponent"))?;
                if paren {
                    if i >= b.len() || b[i] != b')' {
                        return Err(err(i, "expected ')'"));
                    }
                    i += 1;
                }
            }
            letters.push((g, e));
        }
        if letters.is_empty() {
            return Err(err(0, "empty word"));
        }
        Ok(GroupWord::new(letters))
    }
}

/// Writes an integer matrix of determinant 1 as a word in `R`, `L`, `S`
/// whose classical matrix is `±M`.
///
/// Column Euclid on `(a, c)`: subtracting multiples of one entry from the
/// other peels off `R^k` and `L^k` on the left. When `c` reaches 0 the rest
/// is `±R^b'`; when `a` reaches 0 it is `±S R^k`.
pub fn decompose_sl2(m: &IntMat2) -> Result<GroupWord, GroupError> {
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    if !det.is_one() {
        return Err(GroupError::BadDeterminant(det));
    }
    let [[mut a, mut b], [mut c, mut d]] = m.clone();
    let mut letters: Vec<(Gen, i64)> = Vec::new();
    let to_i64 = |x: &BigInt| x.to_i64().ok_or(GroupError::Overflow);
    while !a.is_zero() && !c.is_zero() {
        if a.abs() >= c.abs() {
            let k = &a / &c;
            a -= &k * &c;
            b -= &k * &d;
            letters.push((Gen::R, to_i64(&k)?));
        } else {
            let k = &c / &a;
            c -= &k * &a;
            d -= &k * &b;
            letters.push((Gen::L, to_i64(&k)?));
        }
    }
    if c.is_zero() {
        // [[a, b], [0, d]] with a = d = ±1 is ±R^(a b).
        letters.push((Gen::R, to_i64(&(&a * &b))?));
    } else {
        // [[0, b], [c, d]] with b c = -1 is ±S R^(c d).
        letters.push((Gen::S, 1));
        letters.push((Gen::R, to_i64(&(&c * &d))?));
    }
    let w = GroupWord::new(letters);
    let back = w.int_matrix();
    let neg: IntMat2 = [
        [-&m[0][0], -&m[0][1]],
        [-&m[1][0], -&m[1][1]],
    ];
    if &back != m && back != neg {
        return Err(GroupError::Reconstruction);
    }
    Ok(w)
}

/// Product of integer matrices of a word, computed without deformation.
pub fn classical_word_matrix(w: &GroupWord) -> IntMat2 {
    let gen = |g: Gen| -> IntMat2 {
        let m = |a: i64, b: i64, c: i64, d: i64| [[a.into(), b.into()], [c.into(), d.into()]];
        match g {
            Gen::R => m(1, 1, 0, 1),
            Gen::S => m(0, -1, 1, 0),
            Gen::L => m(1, 0, 1, 1),
        }
    };
    let mut acc: IntMat2 = [[1.into(), 0.into()], [0.into(), 1.into()]];
    for &(g, e) in w.letters() {
        let base = gen(g);
        let inv = [
            [base[1][1].clone(), -&base[0][1]],
            [-&base[1][0], base[0][0].clone()],
        ];
        let step = if e > 0 { &base } else { &inv };
        for _ in 0..e.unsigned_abs() {
            acc = int_mat_mul(&acc, step);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmodular::mat::int_mat;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(generator(Gen::R), QMat2::new(p("q"), p("1"), p("0"), p("1")));
        assert_eq!(generator(Gen::S), QMat2::new(p("0"), p("-q^-1"), p("1"), p("0")));
        assert_eq!(generator(Gen::L), QMat2::new(p("q"), p("0"), p("q"), p("1")));
    }

    #[test]
    fn powers_match_repeated_products() {
        for g in [Gen::R, Gen::S, Gen::L] {
            let m = generator(g);
            let mut acc = QMat2::identity();
            for n in 0..7 {
                assert_eq!(gen_power(g, n), acc, "{g}^{n}");
                acc = acc.mul(&m);
            }
            for n in 1..7 {
                assert!(gen_power(g, -n).mul(&gen_power(g, n)).is_identity(), "{g}^-{n}");
            }
        }
    }

    #[test]
    fn relations() {
        let rsr: GroupWord = "R S R".parse().unwrap();
        assert_eq!(rsr.matrix(), generator(Gen::L));
        assert!(q_deform_word(&"S^2".parse().unwrap()).is_identity());
        assert!(q_deform_word(&"RSRSRS".parse().unwrap()).is_identity());
        assert!(q_deform_word(&"R^0".parse().unwrap_or_default()).is_identity());
    }

    #[test]
    fn word_syntax() {
        let w: GroupWord = "R^2 S R^-1 L^3".parse().unwrap();
        assert_eq!(w.to_string(), "R^2 S R^-1 L^3");
        let w: GroupWord = "R R^(-1) S".parse().unwrap();
        assert_eq!(w.to_string(), "S");
        assert!("R^x".parse::<GroupWord>().is_err());
        assert!("X".parse::<GroupWord>().is_err());
    }

    #[test]
    fn decomposition() {
        for m in [
            int_mat(1, 1, 0, 1),
            int_mat(2, 1, 1, 1),
            int_mat(5, 2, 2, 1),
            int_mat(0, -1, 1, 0),
            int_mat(-1, 0, 0, -1),
            int_mat(-7, 3, 2, -1),
            int_mat(-13, 5, 18, -7),
        ] {
            let w = decompose_sl2(&m).unwrap();
            let back = classical_word_matrix(&w);
            let neg = [[-&m[0][0], -&m[0][1]], [-&m[1][0], -&m[1][1]]];
            assert!(back == m || back == neg, "{w}");
        }
        assert_eq!(decompose_sl2(&int_mat(1, 1, 0, 1)).unwrap().to_string(), "R");
        assert!(matches!(
            decompose_sl2(&int_mat(2, 0, 0, 1)),
            Err(GroupError::BadDeterminant(_))
        ));
    }
}
