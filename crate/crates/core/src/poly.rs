//! Laurent polynomials in `q` with arbitrary-precision integer coefficients.
//!
//! Every polynomial object of the crate (q-integers, continuants, traces,
//! radicands, numerators and denominators of q-rationals) is a [`LaurentPoly`].
//! Storage is a coefficient window `[low, low + len)` whose first and last
//! entries are nonzero, so shifting by a power of `q` is O(1) and the zero
//! polynomial is the empty window.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse polynomial at byte {pos}: {msg}")]
pub struct PolyParseError {
    pub pos: usize,
    pub msg: String,
}

/// A Laurent polynomial `sum c_e q^e` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial<T: Into<BigInt>>(c: T, e: i64) -> Self {
        Self::from_dense(e, vec![c.into()])
    }

    /// `q^e`.
    pub fn q_power(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// Builds `sum_i coeffs[i] q^(low + i)`; zeros at both ends are trimmed.
    pub fn from_dense<T: Into<BigInt>>(low: i64, coeffs: Vec<T>) -> Self {
        let mut p = LaurentPoly {
            low,
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<T: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap_or(lo);
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    fn trim(&mut self) {
        let end = self
            .coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .map_or(0, |i| i + 1);
        self.coeffs.truncate(end);
        let start = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if start > 0 {
            self.coeffs.drain(..start);
            self.low += start as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (the q-valuation).
    pub fn min_deg(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_deg(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Number of coefficients between `min_deg` and `max_deg`, inclusive.
    pub fn span(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn lowest_coeff(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Dense coefficient list from `min_deg` to `max_deg`, interior zeros included.
    pub fn coeff_vec(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// True when no exponent is negative.
    pub fn is_ordinary(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    /// Multiplies by `q^n`.
    pub fn shift(&self, n: i64) -> Self {
        let mut p = self.clone();
        if !p.is_zero() {
            p.low += n;
        }
        p
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Exact division of every coefficient by `k`, or `None` if some
    /// coefficient is not a multiple of `k`.
    pub fn div_scalar(&self, k: &BigInt) -> Option<Self> {
        if k.is_zero() {
            return None;
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (quo, rem) = c.div_rem(k);
            if !rem.is_zero() {
                return None;
            }
            coeffs.push(quo);
        }
        Some(LaurentPoly { low: self.low, coeffs })
    }

    /// Value at `q = 1`, i.e. the sum of the coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn reverse(&self) -> Self {
        match self.max_deg() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPoly { low: -hi, coeffs }
            }
        }
    }

    /// `p(q) = q^N p(1/q)` for some `N`.
    pub fn is_palindrome(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Coefficients between the extreme degrees (zeros included) weakly rise
    /// and then weakly fall.
    pub fn is_unimodal(&self) -> bool {
        let mut falling = false;
        for w in self.coeffs.windows(2) {
            match w[0].cmp(&w[1]) {
                Ordering::Greater => falling = true,
                Ordering::Less if falling => return false,
                _ => {}
            }
        }
        true
    }

    /// Some coefficient strictly between `min_deg` and `max_deg` is zero.
    pub fn has_interior_zeros(&self) -> bool {
        self.coeffs.iter().any(Zero::is_zero)
    }

    pub fn has_nonneg_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies by the q-integer `[n]_q`, in time linear in the output size.
    pub fn mul_qint(&self, n: i64) -> Self {
        match n.cmp(&0) {
            Ordering::Equal => Self::zero(),
            Ordering::Less => -self.mul_qint(-n).shift(n),
            Ordering::Greater => {
                if self.is_zero() {
                    return Self::zero();
                }
                let len = self.coeffs.len();
                let n = n as usize;
                let out_len = len + n - 1;
                let mut out = Vec::with_capacity(out_len);
                let mut window = BigInt::zero();
                for k in 0..out_len {
                    if k < len {
                        window += &self.coeffs[k];
                    }
                    if k >= n && k - n < len {
                        window -= &self.coeffs[k - n];
                    }
                    out.push(window.clone());
                }
                Self::from_dense(self.low, out)
            }
        }
    }

    /// gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content; the sign is kept.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_scalar(&c).unwrap_or_default()
    }

    /// Factors `self = sign * q^k * p` with `p` of valuation 0 and positive
    /// lowest coefficient. Returns `(sign, k, p)`; the zero polynomial gives
    /// `(1, 0, 0)`.
    pub fn split_unit(&self) -> (i8, i64, LaurentPoly) {
        if self.is_zero() {
            return (1, 0, Self::zero());
        }
        let sign = if self.coeffs[0].is_negative() { -1 } else { 1 };
        let mut p = self.shift(-self.low);
        if sign < 0 {
            p = -p;
        }
        (sign, self.low, p)
    }

    /// Formal derivative of an ordinary polynomial (Laurent terms are
    /// differentiated the same way).
    pub fn derivative(&self) -> Self {
        LaurentPoly::from_terms(
            self.terms()
                .filter(|(e, _)| *e != 0)
                .map(|(e, c)| (e - 1, c * BigInt::from(e))),
        )
    }

    /// Exact quotient in `Z[q, q^-1]`: returns `Some(t)` with `self = d * t`,
    /// or `None` when `d` does not divide `self`.
    pub fn exact_divide(&self, d: &LaurentPoly) -> Result<Option<LaurentPoly>, PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        let n = &self.coeffs;
        let m = &d.coeffs;
        if n.len() < m.len() {
            return Ok(None);
        }
        // Long division from the top, both operands normalized to valuation 0.
        let mut rem: Vec<BigInt> = n.clone();
        let qlen = n.len() - m.len() + 1;
        let mut quo = vec![BigInt::zero(); qlen];
        let lead = m.last().expect("nonzero divisor");
        for i in (0..qlen).rev() {
            let top = &rem[i + m.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (t, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Ok(None);
            }
            for (j, mj) in m.iter().enumerate() {
                rem[i + j] -= &t * mj;
            }
            quo[i] = t;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        Ok(Some(LaurentPoly::from_dense(self.low - d.low, quo)))
    }

    /// Greatest common divisor in `Z[q, q^-1]`, normalized to valuation 0
    /// with positive leading coefficient. Units `±q^k` are invisible to it.
    /// Computed from images modulo word-sized primes, combined by CRT and
    /// confirmed by trial division.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.normalize_gcd();
        }
        if other.is_zero() {
            return self.normalize_gcd();
        }
        let cg = self.content().gcd(&other.content());
        let a = self.shift(-self.low).primitive_part();
        let b = other.shift(-other.low).primitive_part();
        let g = LaurentPoly::from_dense(0, modular_gcd(&a, &b));
        g.scale(&cg).normalize_gcd()
    }

    fn normalize_gcd(&self) -> LaurentPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let p = self.shift(-self.low);
        if p.leading_coeff().is_some_and(Signed::is_negative) {
            -p
        } else {
            p
        }
    }

    /// Splits an ordinary polynomial `p` of valuation 0 with positive leading
    /// coefficient into `(f, r)` with `p = f^2 * r` and `r` square-free over
    /// `Q` (Yun's algorithm). The integer content is left in `r`.
    pub fn square_free_split(&self) -> (LaurentPoly, LaurentPoly) {
        let content = self.content();
        let prim = self.primitive_part();
        if prim.span() <= 1 {
            return (LaurentPoly::one(), self.clone());
        }
        // Yun: prim = prod a_i^i.
        let mut factors: Vec<LaurentPoly> = Vec::new();
        let deriv = prim.derivative();
        let mut a = prim.gcd(&deriv);
        let mut b = prim.exact_divide(&a).ok().flatten().unwrap_or_default();
        let mut c = deriv.exact_divide(&a).ok().flatten().unwrap_or_default();
        let mut d = &c - &b.derivative();
        while !(b.span() <= 1 && b.min_deg() == Some(0)) {
            let ai = b.gcd(&d);
            factors.push(ai.clone());
            b = b.exact_divide(&ai).ok().flatten().unwrap_or_default();
            c = d.exact_divide(&ai).ok().flatten().unwrap_or_default();
            d = &c - &b.derivative();
            if factors.len() > prim.span() {
                break;
            }
        }
        a = LaurentPoly::one();
        let mut free = LaurentPoly::one();
        for (i, f) in factors.iter().enumerate() {
            let mult = i + 1;
            for _ in 0..mult / 2 {
                a = &a * f;
            }
            if mult % 2 == 1 {
                free = &free * f;
            }
        }
        // Recover the exact sign/unit of the square-free part.
        let rest = prim
            .exact_divide(&(&a * &a))
            .ok()
            .flatten()
            .unwrap_or(free);
        (a, rest.scale(&content))
    }

    /// JSON rendering as a list of `[exponent, coefficient]` pairs.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(e, c)| {
                    Value::Array(vec![
                        Value::from(e),
                        Value::Number(c.to_string().parse().expect("integer literal")),
                    ])
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let mut terms = Vec::new();
        for t in v.as_array()? {
            let pair = t.as_array()?;
            if pair.len() != 2 {
                return None;
            }
            let e = pair[0].as_i64()?;
            let c: BigInt = match &pair[1] {
                Value::Number(n) => n.to_string().parse().ok()?,
                _ => return None,
            };
            terms.push((e, c));
        }
        Some(Self::from_terms(terms))
    }
}

/// Primes just below `2^31`, largest first, so products fit in `u64`.
fn gcd_primes() -> impl Iterator<Item = u64> {
    (3..1u64 << 31).rev().step_by(2).filter(|&n| {
        let mut d = 3;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 2;
        }
        true
    })
}

fn reduce_mod(coeffs: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = coeffs
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("reduced below p"))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Monic gcd over `F_p` of two nonzero dense polynomials.
fn gcd_mod(mut x: Vec<u64>, mut y: Vec<u64>, p: u64) -> Vec<u64> {
    while !y.is_empty() {
        let inv = pow_mod(*y.last().expect("nonzero"), p - 2, p);
        while x.len() >= y.len() {
            let t = x.last().expect("nonzero") * inv % p;
            let off = x.len() - y.len();
            for (j, &yj) in y.iter().enumerate() {
                x[off + j] = (x[off + j] + p - t * yj % p) % p;
            }
            while x.last() == Some(&0) {
                x.pop();
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    let inv = pow_mod(*x.last().expect("nonzero"), p - 2, p);
    x.iter().map(|c| c * inv % p).collect()
}

/// Gcd of two primitive polynomials of valuation 0, as dense coefficients.
/// Each image is scaled to the gcd of the leading coefficients, so the CRT
/// lift is a multiple of the true gcd; it is accepted once it is stable
/// across one more prime and divides both inputs.
fn modular_gcd(a: &LaurentPoly, b: &LaurentPoly) -> Vec<BigInt> {
    let (la, lb) = (a.coeffs.last().expect("nonzero"), b.coeffs.last().expect("nonzero"));
    let lead = la.gcd(lb);
    let mut deg = usize::MAX;
    let mut lift: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last: Option<LaurentPoly> = None;
    for p in gcd_primes() {
        let pb = BigInt::from(p);
        if la.is_multiple_of(&pb) || lb.is_multiple_of(&pb) {
            continue;
        }
        let g = gcd_mod(reduce_mod(&a.coeffs, p), reduce_mod(&b.coeffs, p), p);
        if g.len() == 1 {
            return vec![BigInt::one()];
        }
        if g.len() > deg {
            continue;
        }
        let lp = lead.mod_floor(&pb).to_u64().expect("reduced below p");
        let g: Vec<u64> = g.iter().map(|c| c * lp % p).collect();
        if g.len() < deg {
            deg = g.len();
            lift = g.iter().map(|&c| BigInt::from(c)).collect();
            modulus = pb;
            last = None;
        } else {
            // lift + modulus * ((g - lift) / modulus mod p)
            let inv = pow_mod(modulus.mod_floor(&pb).to_u64().expect("reduced"), p - 2, p);
            for (h, &c) in lift.iter_mut().zip(&g) {
                let hp = h.mod_floor(&pb).to_u64().expect("reduced");
                let k = (c + p - hp) % p * inv % p;
                *h += &modulus * k;
            }
            modulus *= &pb;
        }
        let half = &modulus >> 1;
        let sym: Vec<BigInt> = lift
            .iter()
            .map(|c| if c > &half { c - &modulus } else { c.clone() })
            .collect();
        let cand = LaurentPoly::from_dense(0, sym).primitive_part();
        if last.as_ref() == Some(&cand) {
            let divides = |x: &LaurentPoly| matches!(x.exact_divide(&cand), Ok(Some(_)));
            if divides(a) && divides(b) {
                return cand.coeffs;
            }
        }
        last = Some(cand);
    }
    unreachable!("prime supply exhausted")
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        let lo = self.low.min(rhs.low);
        let hi = self.max_deg().max(rhs.max_deg()).expect("nonzero");
        if lo < self.low {
            let pad = (self.low - lo) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = lo;
        }
        self.coeffs.resize((hi - lo + 1) as usize, BigInt::zero());
        let off = (rhs.low - lo) as usize;
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[off + i] += c;
        }
        self.trim();
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self += &(-rhs);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.coeffs.len() == 1 {
            return self.scale(&rhs.coeffs[0]).shift(rhs.low);
        }
        if self.coeffs.len() == 1 {
            return rhs.scale(&self.coeffs[0]).shift(self.low);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

fn write_poly(p: &LaurentPoly, f: &mut fmt::Formatter<'_>, compact: bool) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (idx, (e, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        match (idx, neg, compact) {
            (0, true, _) => f.write_str("-")?,
            (0, false, _) => {}
            (_, true, true) => f.write_str("-")?,
            (_, false, true) => f.write_str("+")?,
            (_, true, false) => f.write_str(" - ")?,
            (_, false, false) => f.write_str(" + ")?,
        }
        if e == 0 {
            write!(f, "{mag}")?;
            continue;
        }
        if !mag.is_one() {
            write!(f, "{mag}")?;
            if !compact {
                f.write_str("*")?;
            }
        }
        f.write_str("q")?;
        if e != 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// `1 + 2*q + q^2`; the alternate form `{:#}` prints `1+2q+q^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(self, f, f.alternate())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

struct PolyParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl PolyParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> PolyParseError {
        PolyParseError {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn digits(&mut self) -> Option<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn term(&mut self, negative: bool) -> Result<(i64, BigInt), PolyParseError> {
        let digits = self.digits().map(str::to_owned);
        let had_digits = digits.is_some();
        let mut coeff = match digits {
            Some(d) => d.parse::<BigInt>().map_err(|_| self.err("bad integer"))?,
            None => BigInt::one(),
        };
        if negative {
            coeff = -coeff;
        }
        if self.peek() == Some(b'*') {
            self.pos += 1;
            if self.peek() != Some(b'q') {
                return Err(self.err("expected 'q' after '*'"));
            }
        }
        if self.peek() != Some(b'q') {
            if !had_digits {
                return Err(self.err("expected a coefficient or 'q'"));
            }
            return Ok((0, coeff));
        }
        self.pos += 1;
        let mut exp = 1i64;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let mut sign = 1;
            let mut paren = false;
            if self.peek() == Some(b'(') {
                self.pos += 1;
                paren = true;
            }
            if self.peek() == Some(b'-') {
                self.pos += 1;
                sign = -1;
            } else if self.peek() == Some(b'+') {
                self.pos += 1;
            }
            let parsed = self.digits().map(|d| d.parse::<i64>());
            exp = match parsed {
                None => return Err(self.err("expected exponent")),
                Some(Err(_)) => return Err(self.err("exponent out of range")),
                Some(Ok(d)) => sign * d,
            };
            if paren {
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
            }
        }
        Ok((exp, coeff))
    }

    fn poly(&mut self) -> Result<LaurentPoly, PolyParseError> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                None if first => return Err(self.err("empty polynomial")),
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            };
            first = false;
            terms.push(self.term(negative)?);
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl FromStr for LaurentPoly {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PolyParser {
            src: s.as_bytes(),
            pos: 0,
        }
        .poly()
    }
}
