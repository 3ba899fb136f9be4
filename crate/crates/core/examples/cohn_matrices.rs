//! Cohn matrices in `A` and `B`, their traces and divisibility by `[3]_q`.

use qdeform::lab::{cohn_matrix, divisibility_report};
use qdeform::qarith::q_int;

fn main() {
    let words = ["A", "B", "AB", "A^2B", "AB^2", "A^3B"];
    let mut traces = Vec::new();
    for w in words {
        let m = cohn_matrix(w).unwrap();
        let t = m.trace().split_unit().2;
        println!("[{w}]_q =\n{m}\ntrace {t:#}  (at q = 1: {})\n", t.eval_one());
        traces.push(t);
    }
    let three = q_int(3);
    for (w, e) in words.iter().zip(divisibility_report(&traces, &[three]).unwrap()) {
        match &e.quotient {
            Some(q) => println!("Tr[{w}]_q / [3]_q = {q:#} (nonnegative: {})", e.quotient_nonneg()),
            None => println!("Tr[{w}]_q is not divisible by [3]_q"),
        }
    }
}
