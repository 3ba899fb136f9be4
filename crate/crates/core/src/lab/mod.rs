//! Batch verification: trace scans, Cohn matrices and divisibility tables.

mod cohn;
mod scan;

use thiserror::Error;

pub use cohn::{cohn_matrix, divisibility_report, DivEntry, COHN_A, COHN_B};
pub use scan::{
    check_word, parse_checks, positivity_applies, scan_traces, Check, Hypothesis, ScanReport,
    ScanSpec, Violation, DEFAULT_CAP,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabError {
    #[error("empty range")]
    EmptyRange,
    #[error("no checks selected")]
    NoChecks,
    #[error("{total} words exceed the cap of {cap}")]
    CapExceeded { total: u64, cap: u64 },
    #[error("zero candidate divisor")]
    ZeroCandidate,
    #[error("{0}")]
    Parse(String),
}
