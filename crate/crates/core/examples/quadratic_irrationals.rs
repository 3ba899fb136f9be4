//! Closed forms `(R + sqrt P) / S` of q-deformed quadratic irrationals.

use qdeform::qquadratic::{abc, periodic_negative_cf, q_quadratic, QSurd, Surd};

fn main() {
    for n in [2, 3, 5, 7, 10] {
        let x = Surd::sqrt(n).unwrap();
        let y = q_quadratic(&x).unwrap();
        println!("[sqrt({n})]_q = {y}");
    }

    let x: Surd = "(1+sqrt(5))/2".parse().unwrap();
    let cf = periodic_negative_cf(&x).unwrap();
    println!("\n{x} has negative continued fraction {cf}");
    let y = q_quadratic(&x).unwrap();
    println!("[{x}]_q = {y}\n        = {}", y.series(12).unwrap());

    // The fixed point of M_q(3) solves its quadratic.
    let f = QSurd::fixed_point(&[3]).unwrap();
    assert!(f.satisfies(&abc(&[3]).unwrap()));
    println!("\nfixed point of M_q(3): {f}");
}
