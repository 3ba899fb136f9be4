//! Cohn matrices `A = [[2,1],[1,1]]`, `B = [[5,2],[2,1]]` and divisibility
//! of polynomials by candidate factors.

use serde_json::{json, Value};

use super::LabError;
use crate::poly::LaurentPoly;
use crate::qmodular::{m_neg_word, ProjClass, QMat2};

/// `A = -M(2,2,1,1)`.
pub const COHN_A: [i64; 4] = [2, 2, 1, 1];
/// `B = -M(3,2,2,1,1)`.
pub const COHN_B: [i64; 5] = [3, 2, 2, 1, 1];

/// The canonical representative of `[W]_q` for a word `W` in `A` and `B`,
/// such as `AAB`. The letters may carry exponents: `A^2B`.
pub fn cohn_matrix(word: &str) -> Result<QMat2, LabError> {
    let letters = parse_cohn_word(word)?;
    let m = letters.iter().fold(QMat2::identity(), |m, &l| {
        let c: &[i64] = if l == 'A' { &COHN_A } else { &COHN_B };
        m.mul(&m_neg_word(c))
    });
    Ok(ProjClass::new(&m).rep().clone())
}

fn parse_cohn_word(word: &str) -> Result<Vec<char>, LabError> {
    let bad = || LabError::Parse(format!("expected a word in A and B, got {word:?}"));
    let t: Vec<char> = word.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < t.len() {
        let l = t[i];
        if l != 'A' && l != 'B' {
            return Err(bad());
        }
        i += 1;
        let mut n = 1;
        if i < t.len() && t[i] == '^' {
            let start = i + 1;
            i = start;
            while i < t.len() && t[i].is_ascii_digit() {
                i += 1;
            }
            n = t[start..i].iter().collect::<String>().parse().map_err(|_| bad())?;
        }
        out.extend(std::iter::repeat_n(l, n));
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

/// One cell of a divisibility table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivEntry {
    pub target: usize,
    pub candidate: usize,
    /// The exact quotient, if the candidate divides the target.
    pub quotient: Option<LaurentPoly>,
}

impl DivEntry {
    pub fn quotient_nonneg(&self) -> bool {
        self.quotient.as_ref().is_some_and(LaurentPoly::has_nonneg_coeffs)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "target": self.target,
            "candidate": self.candidate,
            "divides": self.quotient.is_some(),
            "quotient": self.quotient.as_ref().map(LaurentPoly::to_json),
            "quotient_nonneg": self.quotient_nonneg(),
        })
    }
}

/// Exact division of every target by every candidate. Quotients are
/// reported up to the unit that makes them ordinary with positive lowest
/// coefficient.
pub fn divisibility_report(
    targets: &[LaurentPoly],
    candidates: &[LaurentPoly],
) -> Result<Vec<DivEntry>, LabError> {
    if candidates.iter().any(LaurentPoly::is_zero) {
        return Err(LabError::ZeroCandidate);
    }
    let mut out = Vec::new();
    for (i, t) in targets.iter().enumerate() {
        for (j, c) in candidates.iter().enumerate() {
            let quotient = t
                .exact_divide(c)
                .expect("nonzero candidate")
                .map(|q| q.split_unit().2);
            out.push(DivEntry {
                target: i,
                candidate: j,
                quotient,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::q_int;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(cohn_matrix("A").unwrap(), QMat2::new(p("q+q^2"), p("1"), p("q"), p("1")));
        assert_eq!(
            cohn_matrix("B").unwrap(),
            QMat2::new(p("q+2q^2+q^3+q^4"), p("1+q"), p("q+q^2"), p("1"))
        );
        assert_eq!(cohn_matrix("A^2B").unwrap(), cohn_matrix("AAB").unwrap());
        assert!(cohn_matrix("AC").is_err());
        assert!(cohn_matrix("").is_err());
    }

    #[test]
    fn products() {
        let ab = cohn_matrix("AB").unwrap();
        assert_eq!(ab.trace(), &q_int(3) * &q_int(5));
        let aab = cohn_matrix("AAB").unwrap();
        assert_eq!(aab.b, p("1+2q+3q^2+3q^3+3q^4+q^5"));
    }

    #[test]
    fn divisibility() {
        let sqrt2 = p("q^6+4q^4-2q^3+4q^2+1");
        let sqrt3 = p("q^6+2q^5+3q^4+3q^2+2q+1");
        let rows = divisibility_report(&[sqrt2, sqrt3], &[p("1-q+q^2")]).unwrap();
        assert_eq!(rows[0].quotient, Some(p("q^4+q^3+4q^2+q+1")));
        assert!(rows[0].quotient_nonneg());
        assert_eq!(rows[1].quotient, None);
        assert_eq!(divisibility_report(&[p("1")], &[p("0")]), Err(LabError::ZeroCandidate));
    }
}
