//! Series of `[x]_q` for real `x` given by a stream of approximations.
//!
//! The series of successive convergents stabilize coefficientwise. There is
//! no effective bound on how fast, so the stopping rule is empirical: stop
//! once `guard` consecutive convergents agree with their predecessor through
//! the requested order. Each comparison is exact.

use super::cf::Flavor;
use super::qrational::q_rational;
use super::QArithError;
use crate::qmodular::QMat2;
use crate::ratfn::ratfn_from_coprime;
use crate::series::{series_expand, QSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StreamOptions {
    /// Number of consecutive stable steps required.
    pub guard: usize,
    /// Give up after this many stream items.
    pub max_terms: usize,
    /// The stream is a complete finite expansion: when it ends, the last
    /// convergent is the exact value.
    pub finite: bool,
}

impl Default for StreamOptions {
    fn default() -> Self {
        StreamOptions {
            guard: 2,
            max_terms: 10_000,
            finite: false,
        }
    }
}

fn convergent_series(m: &QMat2, order: i64) -> Result<Option<QSeries>, QArithError> {
    if m.c.is_zero() {
        return Ok(None);
    }
    let (u, f) = ratfn_from_coprime(&m.a, &m.c);
    Ok(Some(series_expand(u, &f, order)?))
}

/// Tracks successive approximations and decides when to stop.
struct Stabilizer {
    order: i64,
    guard: usize,
    last: Option<QSeries>,
    stable: usize,
}

impl Stabilizer {
    fn push(&mut self, s: Option<QSeries>) -> Option<QSeries> {
        let Some(s) = s else {
            self.stable = 0;
            return None;
        };
        match &self.last {
            Some(prev) if prev.agreement_order(&s) >= self.order => self.stable += 1,
            _ => self.stable = 0,
        }
        self.last = Some(s);
        (self.stable >= self.guard).then(|| self.last.clone().expect("just set"))
    }
}

/// `[x]_q` through `order` from the coefficients of a continued fraction of
/// `x`. Regular streams are consumed in pairs `(a_{2i-1}, a_{2i})`.
pub fn q_series_from_cf(
    coeffs: impl IntoIterator<Item = i64>,
    flavor: Flavor,
    order: i64,
    opts: StreamOptions,
) -> Result<QSeries, QArithError> {
    let mut st = Stabilizer {
        order,
        guard: opts.guard,
        last: None,
        stable: 0,
    };
    let mut m = QMat2::identity();
    let mut pending: Option<i64> = None;
    let mut terms = 0;
    let mut it = coeffs.into_iter();
    loop {
        if terms >= opts.max_terms {
            return Err(QArithError::NotStabilized { terms });
        }
        let Some(x) = it.next() else {
            if !opts.finite || terms == 0 {
                return Err(QArithError::Exhausted { terms });
            }
            if let Some(a) = pending {
                // [.., a] = [.., a - 1, 1]
                m = m.mul_cf_step(a - 1, 0, 1, a - 1).mul_cf_step(1, 0, 1, -1);
            }
            return convergent_series(&m, order)?.ok_or(QArithError::IllDefined);
        };
        terms += 1;
        match flavor {
            Flavor::Negative => m = m.mul_cf_step(x, 0, -1, x - 1),
            Flavor::Regular => match pending.take() {
                None => {
                    pending = Some(x);
                    continue;
                }
                Some(a) => m = m.mul_cf_step(a, 0, 1, a).mul_cf_step(x, 1 - x, 1, -x),
            },
        }
        if let Some(s) = st.push(convergent_series(&m, order)?) {
            return Ok(s);
        }
    }
}

/// `[x]_q` through `order` from a sequence of rationals `r/s` converging to
/// `x`, with the same stopping rule.
pub fn q_series_from_rationals(
    approx: impl IntoIterator<Item = (i64, i64)>,
    order: i64,
    opts: StreamOptions,
) -> Result<QSeries, QArithError> {
    let mut st = Stabilizer {
        order,
        guard: opts.guard,
        last: None,
        stable: 0,
    };
    let mut terms = 0;
    for (r, s) in approx {
        if terms >= opts.max_terms {
            return Err(QArithError::NotStabilized { terms });
        }
        terms += 1;
        let g = num_integer::Integer::gcd(&r, &s);
        let x = q_rational(r / g, s / g)?;
        if let Some(out) = st.push(Some(x.series(order)?)) {
            return Ok(out);
        }
    }
    if opts.finite {
        if let Some(s) = st.last {
            return Ok(s);
        }
    }
    Err(QArithError::Exhausted { terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::small_coeffs;

    #[test]
    fn one_plus_sqrt2() {
        let s = q_series_from_cf(std::iter::repeat(2), Flavor::Regular, 10, StreamOptions::default())
            .unwrap();
        assert_eq!(
            small_coeffs(&s, 0, 10).unwrap(),
            vec![1, 1, 0, 0, 1, 0, -2, 1, 4, -5, -7]
        );
    }

    #[test]
    fn finite_stream_is_exact() {
        let opts = StreamOptions {
            finite: true,
            ..Default::default()
        };
        let s = q_series_from_cf([1, 1, 1, 1], Flavor::Regular, 12, opts).unwrap();
        let expect = q_rational(5, 3).unwrap().series(12).unwrap();
        assert_eq!(s, expect);
        // Odd length: 12/5 = [2, 2, 2].
        let s = q_series_from_cf([2, 2, 2], Flavor::Regular, 12, opts).unwrap();
        assert_eq!(s, q_rational(12, 5).unwrap().series(12).unwrap());
        let s = q_series_from_cf([3, 2, 3], Flavor::Negative, 12, opts).unwrap();
        assert_eq!(s, q_rational(12, 5).unwrap().series(12).unwrap());
        assert!(matches!(
            q_series_from_cf([1, 1], Flavor::Regular, 5, StreamOptions::default()),
            Err(QArithError::Exhausted { .. })
        ));
    }

    #[test]
    fn negative_stream_for_golden_ratio_conjugate() {
        // [[3, 3, 3, ...]] = (3 + sqrt 5) / 2 = [2, 1, 1, 1, ...]
        let neg = q_series_from_cf(std::iter::repeat(3), Flavor::Negative, 12, Default::default()).unwrap();
        let reg = q_series_from_cf(
            std::iter::once(2).chain(std::iter::repeat(1)),
            Flavor::Regular,
            12,
            Default::default(),
        )
        .unwrap();
        assert!(neg.agrees_through(&reg, 12));
    }
}
