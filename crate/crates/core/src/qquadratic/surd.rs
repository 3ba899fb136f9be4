//! Real quadratic irrationals `(r ± sqrt p) / s` and their continued
//! fraction expansions, computed exactly.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::QuadError;
use crate::qarith::Flavor;

/// `(r + sign * sqrt p) / s` with `p > 0` not a square and `s > 0`.
///
/// Stored as given; `==` compares values.
#[derive(Clone, Debug)]
pub struct Surd {
    pub r: BigInt,
    pub sign: i8,
    pub p: BigInt,
    pub s: BigInt,
}

fn is_perfect_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let t = n.sqrt();
        &(&t * &t) == n
    }
}

impl Surd {
    pub fn new(
        r: impl Into<BigInt>,
        sign: i8,
        p: impl Into<BigInt>,
        s: impl Into<BigInt>,
    ) -> Result<Surd, QuadError> {
        let (r, p, s) = (r.into(), p.into(), s.into());
        if !p.is_positive() || is_perfect_square(&p) {
            return Err(QuadError::NotIrrational(p));
        }
        if !s.is_positive() {
            return Err(QuadError::ZeroDenominator);
        }
        Ok(Surd {
            r,
            sign: if sign < 0 { -1 } else { 1 },
            p,
            s,
        })
    }

    /// `sqrt(n)`.
    pub fn sqrt(n: i64) -> Result<Surd, QuadError> {
        Surd::new(0, 1, n, 1)
    }

    /// The other root of the same quadratic.
    pub fn conjugate(&self) -> Surd {
        Surd {
            sign: -self.sign,
            ..self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let f = |x: &BigInt| x.to_f64().unwrap_or(f64::NAN);
        (f(&self.r) + f64::from(self.sign) * f(&self.p).sqrt()) / f(&self.s)
    }
}

impl PartialEq for Surd {
    fn eq(&self, o: &Surd) -> bool {
        &self.r * &o.s == &o.r * &self.s
            && self.sign == o.sign
            && &self.p * &o.s * &o.s == &o.p * &self.s * &self.s
    }
}

impl Eq for Surd {}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.sign < 0 { '-' } else { '+' };
        let body = if self.r.is_zero() {
            let lead = if self.sign < 0 { "-" } else { "" };
            format!("{lead}sqrt({})", self.p)
        } else {
            format!("{}{op}sqrt({})", self.r, self.p)
        };
        if self.s.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "({body})/{}", self.s)
        }
    }
}

/// True when the whole string is one parenthesized group.
fn wraps(s: &str) -> bool {
    let mut depth = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return i == s.len() - 1 && s.starts_with('(');
                }
            }
            _ => {}
        }
    }
    false
}

/// Parses `(r+sqrt(p))/s`, `(r-sqrt(p))/s`, `sqrt(p)`, `a+sqrt(p)`,
/// `sqrt(p)+a`, `(1+3sqrt(5))/2` and `sqrt(2)/2`. A coefficient `k` in front
/// of the root is folded into the radicand.
impl FromStr for Surd {
    type Err = QuadError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = |m: &str| QuadError::Parse(format!("{m} in {text:?}"));
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let int = |s: &str| s.parse::<BigInt>().map_err(|_| bad("bad integer"));
        let (mut inner, s): (String, BigInt) = match t.rsplit_once('/') {
            Some((num, den)) => (num.to_string(), int(den)?),
            None => (t.clone(), BigInt::one()),
        };
        if wraps(&inner) {
            inner = inner[1..inner.len() - 1].to_string();
        }
        let at = inner.find("sqrt(").ok_or_else(|| bad("missing sqrt"))?;
        let close = inner[at..].find(')').ok_or_else(|| bad("unclosed sqrt"))? + at;
        let p = int(&inner[at + 5..close])?;
        let mut pre = inner[..at].trim_end_matches('*');
        let digits = pre.len() - pre.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        let k = if digits > 0 {
            let k = int(&pre[pre.len() - digits..])?;
            pre = &pre[..pre.len() - digits];
            k
        } else {
            BigInt::one()
        };
        let (r_text, sign) = match pre.chars().last() {
            None => ("", 1),
            Some('+') => (&pre[..pre.len() - 1], 1),
            Some('-') => (&pre[..pre.len() - 1], -1),
            Some(_) => return Err(bad("expected + or - before sqrt")),
        };
        let mut r = if r_text.is_empty() {
            BigInt::zero()
        } else {
            int(r_text)?
        };
        let post = &inner[close + 1..];
        if !post.is_empty() {
            if !post.starts_with(['+', '-']) {
                return Err(bad("unexpected text after sqrt"));
            }
            r += int(post.trim_start_matches('+'))?;
        }
        if k.is_zero() {
            return Err(bad("zero coefficient"));
        }
        Surd::new(r, sign, &k * &k * p, s)
    }
}

/// Exact sign of `x - n/d` (`d > 0`). Never `Equal`, since `x` is
/// irrational.
pub fn surd_compare(x: &Surd, n: &BigInt, d: &BigInt) -> Ordering {
    // sign of (r d - n s) + sign * d sqrt(p), all over s d > 0
    let u = &x.r * d - n * &x.s;
    let rad = d * d * &x.p;
    let uu = &u * &u;
    if x.sign > 0 {
        if !u.is_negative() || rad > uu {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    } else if !u.is_positive() || rad > uu {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// `(m + sqrt D) / Q` with `Q | D - m^2`, the state of the expansion maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct SurdState {
    m: BigInt,
    q: BigInt,
    d: BigInt,
}

impl SurdState {
    fn new(x: &Surd) -> Self {
        let (mut m, mut q, mut d) = if x.sign > 0 {
            (x.r.clone(), x.s.clone(), x.p.clone())
        } else {
            (-&x.r, -&x.s, x.p.clone())
        };
        if !(&d - &m * &m).is_multiple_of(&q) {
            let aq = q.abs();
            m *= &aq;
            d = d * &q * &q;
            q *= &aq;
        }
        SurdState { m, q, d }
    }

    fn floor(&self) -> BigInt {
        let s = self.d.sqrt();
        if self.q.is_positive() {
            (&self.m + s).div_floor(&self.q)
        } else {
            (-&self.m - s - 1i32).div_floor(&-&self.q)
        }
    }

    /// `x -> 1 / (x - a)` for the regular map, written through
    /// `x - a = (m' + sqrt D) / Q`.
    fn step_regular(&mut self, a: &BigInt) {
        let m1 = &self.m - a * &self.q;
        self.q = (&self.d - &m1 * &m1) / &self.q;
        self.m = -m1;
    }

    /// `x -> 1 / (c - x)`.
    fn step_negative(&mut self, c: &BigInt) {
        let m1 = &self.m - c * &self.q;
        self.q = (&m1 * &m1 - &self.d) / &self.q;
        self.m = -m1;
    }
}

fn to_i64(x: BigInt) -> i64 {
    x.to_i64().expect("partial quotient fits in i64")
}

/// The (infinite) continued fraction expansion of a surd, as a stream.
pub fn cf_stream(x: &Surd, flavor: Flavor) -> impl Iterator<Item = i64> {
    let mut st = SurdState::new(x);
    std::iter::from_fn(move || {
        Some(match flavor {
            Flavor::Regular => {
                let a = st.floor();
                st.step_regular(&a);
                to_i64(a)
            }
            Flavor::Negative => {
                let c = st.floor() + 1;
                st.step_negative(&c);
                to_i64(c)
            }
        })
    })
}

/// `[[b_1, ..., b_l, (c_1, ..., c_k) repeated]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicCF {
    pub preperiod: Vec<i64>,
    pub period: Vec<i64>,
}

impl PeriodicCF {
    /// The full coefficient stream.
    pub fn coeffs(&self) -> impl Iterator<Item = i64> + '_ {
        self.preperiod
            .iter()
            .copied()
            .chain(self.period.iter().copied().cycle())
    }
}

impl fmt::Display for PeriodicCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| {
            v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
        };
        f.write_str("[[")?;
        if !self.preperiod.is_empty() {
            write!(f, "{},", join(&self.preperiod))?;
        }
        write!(f, "({})]]", join(&self.period))
    }
}

/// Iteration cap for the cycle search.
const MAX_STEPS: usize = 1_000_000;

/// The eventually periodic negative expansion `c = ceil(x)`,
/// `x -> 1 / (c - x)`, with the minimal period found by state recurrence.
pub fn periodic_negative_cf(x: &Surd) -> Result<PeriodicCF, QuadError> {
    let mut st = SurdState::new(x);
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut out = Vec::new();
    for i in 0..MAX_STEPS {
        if let Some(&j) = seen.get(&(st.m.clone(), st.q.clone())) {
            let period = out.split_off(j);
            return Ok(PeriodicCF {
                preperiod: out,
                period,
            });
        }
        seen.insert((st.m.clone(), st.q.clone()), i);
        let c = st.floor() + 1;
        st.step_negative(&c);
        out.push(to_i64(c));
    }
    Err(QuadError::NoCycle { steps: MAX_STEPS })
}
