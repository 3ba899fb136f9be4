//! Exhaustive scan of traces of `M_q(c_1, ..., c_k)`: palindromicity and
//! positivity always hold; unimodality is only a conjecture, and fails.

use qdeform::lab::{check_word, scan_traces, Check, ScanSpec};
use qdeform::qmodular::trace_word;

fn main() {
    let spec = ScanSpec::exhaustive(5, 2, 4);
    let report = scan_traces(&spec).unwrap();
    println!("{report}");
    assert_eq!(report.theorem_violations().count(), 0);

    let t = trace_word(&[3, 3]);
    println!("Tr M_q(3,3) = {t:#}");
    for v in check_word(&[3, 3], &Check::ALL) {
        println!("(3,3) fails {}", v.check);
    }
}
