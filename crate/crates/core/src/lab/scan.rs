//! Exhaustive and sampled scans of traces `Tr M_q(c)`.
//!
//! Palindromicity and positivity are checked on the trace divided by its
//! unit `±q^N`. Unimodality is a conjecture and is only reported.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::LabError;
use crate::poly::LaurentPoly;
use crate::qmodular::trace_word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Palindrome,
    Positive,
    Reversal,
    Unimodal,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Palindrome, Check::Positive, Check::Reversal, Check::Unimodal];

    /// Proved properties; a violation is a bug. Unimodality is conjectural.
    pub fn is_theorem(self) -> bool {
        self != Check::Unimodal
    }

    pub fn name(self) -> &'static str {
        match self {
            Check::Palindrome => "palindrome",
            Check::Positive => "positive",
            Check::Reversal => "reversal",
            Check::Unimodal => "unimodal",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

/// Parses `all` or a comma-separated list of check names.
pub fn parse_checks(s: &str) -> Result<Vec<Check>, String> {
    if s == "all" {
        return Ok(Check::ALL.to_vec());
    }
    let mut v = s.split(',').map(|t| t.trim().parse()).collect::<Result<Vec<Check>, _>>()?;
    v.sort();
    v.dedup();
    Ok(v)
}

/// Which words are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    All,
    /// `c_1, ..., c_{k-1} >= 2` and `c_k >= 1`.
    InteriorAtLeast2,
}

impl FromStr for Hypothesis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Hypothesis::All),
            "interior" | "interior>=2" => Ok(Hypothesis::InteriorAtLeast2),
            _ => Err(format!("unknown hypothesis {s:?}, expected all or interior")),
        }
    }
}

/// Words satisfying the positivity hypothesis.
pub fn positivity_applies(c: &[i64]) -> bool {
    match c.split_last() {
        Some((&last, init)) => last >= 1 && init.iter().all(|&x| x >= 2),
        None => false,
    }
}

/// Default enumeration cap.
pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanSpec {
    pub k_min: usize,
    pub k_max: usize,
    pub c_min: i64,
    pub c_max: i64,
    pub hypothesis: Hypothesis,
    pub checks: Vec<Check>,
    pub cap: u64,
    /// `Some((seed, count))` samples `count` words instead of enumerating.
    pub sample: Option<(u64, u64)>,
}

impl ScanSpec {
    pub fn exhaustive(k_max: usize, c_min: i64, c_max: i64) -> ScanSpec {
        ScanSpec {
            k_min: 1,
            k_max,
            c_min,
            c_max,
            hypothesis: Hypothesis::All,
            checks: Check::ALL.to_vec(),
            cap: DEFAULT_CAP,
            sample: None,
        }
    }

    fn radix(&self) -> u64 {
        (self.c_max - self.c_min + 1) as u64
    }

    /// Number of words in the ranges, or `None` on overflow.
    pub fn total(&self) -> Option<u64> {
        (self.k_min..=self.k_max).try_fold(0u64, |acc, k| {
            acc.checked_add(self.radix().checked_pow(u32::try_from(k).ok()?)?)
        })
    }

    fn validate(&self) -> Result<u64, LabError> {
        if self.k_min == 0 || self.k_min > self.k_max || self.c_min > self.c_max {
            return Err(LabError::EmptyRange);
        }
        if self.checks.is_empty() {
            return Err(LabError::NoChecks);
        }
        let total = self.total().ok_or(LabError::CapExceeded { total: u64::MAX, cap: self.cap })?;
        let n = self.sample.map_or(total, |(_, count)| count);
        if n > self.cap {
            return Err(LabError::CapExceeded { total: n, cap: self.cap });
        }
        Ok(total)
    }

    /// The `i`-th word in the order (k, c_1, ..., c_k).
    fn word(&self, mut i: u64) -> Vec<i64> {
        let b = self.radix();
        for k in self.k_min..=self.k_max {
            let n = b.pow(k as u32);
            if i < n {
                let mut w = vec![0; k];
                for slot in w.iter_mut().rev() {
                    *slot = self.c_min + (i % b) as i64;
                    i /= b;
                }
                return w;
            }
            i -= n;
        }
        unreachable!("index within total")
    }

    fn includes(&self, c: &[i64]) -> bool {
        match self.hypothesis {
            Hypothesis::All => true,
            Hypothesis::InteriorAtLeast2 => positivity_applies(c),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": [self.k_min, self.k_max],
            "range": [self.c_min, self.c_max],
            "hypothesis": match self.hypothesis {
                Hypothesis::All => "all",
                Hypothesis::InteriorAtLeast2 => "interior",
            },
            "checks": self.checks.iter().map(|c| c.name()).collect::<Vec<_>>(),
            "cap": self.cap,
            "sample": self.sample.map(|(seed, count)| json!({ "seed": seed, "count": count })),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub word: Vec<i64>,
    pub check: Check,
    pub trace: LaurentPoly,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanReport {
    pub words_checked: u64,
    /// Positivity-checked words satisfying `c_1..c_{k-1} >= 2`, `c_k >= 1`.
    pub positivity_checked: u64,
    /// Traces with a zero strictly inside their coefficient range; these are
    /// kept apart from unimodality counterexamples.
    pub interior_zero_traces: u64,
    pub interior_zero_examples: Vec<Vec<i64>>,
    pub violations: Vec<Violation>,
    pub elapsed: Duration,
}

const EXAMPLES_KEPT: usize = 10;

impl ScanReport {
    pub fn theorem_violations(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(|v| v.check.is_theorem())
    }

    pub fn count(&self, check: Check) -> usize {
        self.violations.iter().filter(|v| v.check == check).count()
    }

    /// Deterministic: timing is left out.
    pub fn to_json(&self, spec: &ScanSpec) -> Value {
        json!({
            "spec": spec.to_json(),
            "counts": {
                "words": self.words_checked,
                "positivity_hypothesis": self.positivity_checked,
                "interior_zero_traces": self.interior_zero_traces,
                "violations": Check::ALL.iter().map(|&c| (c.name().to_string(), json!(self.count(c)))).collect::<serde_json::Map<_, _>>(),
            },
            "interior_zero_examples": self.interior_zero_examples,
            "violations": self.violations.iter().map(|v| json!({
                "word": v.word,
                "check": v.check.name(),
                "theorem": v.check.is_theorem(),
                "trace": v.trace.to_json(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "words checked        {}", self.words_checked)?;
        writeln!(f, "hypothesis words     {}", self.positivity_checked)?;
        writeln!(f, "interior-zero traces {}", self.interior_zero_traces)?;
        for c in Check::ALL {
            let kind = if c.is_theorem() { "theorem" } else { "conjecture" };
            writeln!(f, "{:<12} {:<10} violations {}", c.name(), kind, self.count(c))?;
        }
        for v in &self.violations {
            writeln!(f, "  {:?} {}: {}", v.word, v.check, v.trace)?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct WordOutcome {
    positivity: bool,
    interior_zero: bool,
    violations: Vec<Violation>,
}

/// Runs the checks on one word.
pub fn check_word(c: &[i64], checks: &[Check]) -> Vec<Violation> {
    check_word_full(c, checks).violations
}

fn check_word_full(c: &[i64], checks: &[Check]) -> WordOutcome {
    let tr = trace_word(c);
    // Traces are defined up to a unit.
    let (_, _, norm) = tr.split_unit();
    let mut out = WordOutcome::default();
    let mut fail = |check| {
        out.violations.push(Violation {
            word: c.to_vec(),
            check,
            trace: tr.clone(),
        })
    };
    let mut interior_zero = false;
    let mut positivity = false;
    for &check in checks {
        match check {
            Check::Palindrome => {
                if !norm.is_palindrome() {
                    fail(check);
                }
            }
            Check::Positive => {
                positivity = positivity_applies(c);
                if !norm.has_nonneg_coeffs() {
                    fail(check);
                }
            }
            Check::Reversal => {
                let rev: Vec<i64> = c.iter().rev().copied().collect();
                if trace_word(&rev) != tr {
                    fail(check);
                }
            }
            Check::Unimodal => {
                if norm.has_interior_zeros() {
                    interior_zero = true;
                } else if !norm.is_unimodal() {
                    fail(check);
                }
            }
        }
    }
    out.positivity = positivity;
    out.interior_zero = interior_zero;
    out
}

/// Scans every word described by `spec` (or a seeded sample), in parallel. The
/// report does not depend on the thread count.
pub fn scan_traces(spec: &ScanSpec) -> Result<ScanReport, LabError> {
    let total = spec.validate()?;
    let start = Instant::now();
    let indices: Vec<u64> = match spec.sample {
        None => (0..total).collect(),
        Some((seed, count)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count).map(|_| rng.gen_range(0..total)).collect()
        }
    };
    let outcomes: Vec<(Vec<i64>, WordOutcome)> = indices
        .par_iter()
        .filter_map(|&i| {
            let w = spec.word(i);
            spec.includes(&w).then(|| {
                let o = check_word_full(&w, &spec.checks);
                (w, o)
            })
        })
        .collect();
    let mut report = ScanReport::default();
    for (w, o) in outcomes {
        report.words_checked += 1;
        report.positivity_checked += u64::from(o.positivity);
        if o.interior_zero {
            report.interior_zero_traces += 1;
            if report.interior_zero_examples.len() < EXAMPLES_KEPT {
                report.interior_zero_examples.push(w);
            }
        }
        report.violations.extend(o.violations);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_order() {
        let spec = ScanSpec::exhaustive(2, 2, 3);
        assert_eq!(spec.total(), Some(6));
        let words: Vec<_> = (0..6).map(|i| spec.word(i)).collect();
        assert_eq!(words, vec![vec![2], vec![3], vec![2, 2], vec![2, 3], vec![3, 2], vec![3, 3]]);
    }

    #[test]
    fn small_exhaustive_scan_is_clean() {
        let r = scan_traces(&ScanSpec::exhaustive(4, 2, 4)).unwrap();
        assert_eq!(r.words_checked, 3 + 9 + 27 + 81);
        assert_eq!(r.theorem_violations().count(), 0, "{r}");
        assert!(r.interior_zero_traces > 0);
        // The conjecture fails already for (3,3).
        assert!(r.violations.iter().any(|v| v.word == [3, 3] && v.check == Check::Unimodal));
    }

    #[test]
    fn single_words() {
        assert_eq!(trace_word(&[3, 3]), "1+2q+q^2+2q^3+q^4".parse().unwrap());
        let v = check_word(&[3, 3], &Check::ALL);
        assert_eq!(v.iter().map(|v| v.check).collect::<Vec<_>>(), vec![Check::Unimodal]);
        assert!(!positivity_applies(&[1, 3, 1]));
        assert!(positivity_applies(&[2, 2, 1]));
        // -q is positive up to the unit.
        assert!(check_word(&[2, 2, 1], &[Check::Positive]).is_empty());
    }

    #[test]
    fn deterministic_and_capped() {
        let mut spec = ScanSpec::exhaustive(3, -2, 3);
        spec.sample = Some((7, 100));
        let a = scan_traces(&spec).unwrap();
        let b = scan_traces(&spec).unwrap();
        assert_eq!(a.to_json(&spec), b.to_json(&spec));
        spec.cap = 10;
        assert!(matches!(scan_traces(&spec), Err(LabError::CapExceeded { .. })));
    }

    #[test]
    fn all_integers_small_range() {
        let r = scan_traces(&ScanSpec::exhaustive(4, -3, 3)).unwrap();
        assert_eq!(r.theorem_violations().count(), 0, "{r}");
    }
}
