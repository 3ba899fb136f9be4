//! q-rationals: canonical forms, the unit exponent N, and the three
//! transformations that generate them.

use qdeform::qarith::{q_int, q_rational, q_transform, Transform};

fn main() {
    for n in [1, 2, 3, 5] {
        println!("[{n}]_q = {:#}", q_int(n));
    }
    println!();
    for (r, s) in [(5, 12), (3, 5), (5, 3), (-1, 4), (7, 2)] {
        let x = q_rational(r, s).expect("positive denominator");
        println!("[{r}/{s}]_q = {x}   (N = {})", x.n());
    }

    // [5/3]_q from [2/3]_q by a shift, and its inverse from the inversion rule.
    let two_thirds = q_rational(2, 3).unwrap();
    let shifted = q_transform(&two_thirds, Transform::Shift(1)).unwrap();
    assert_eq!(shifted, q_rational(5, 3).unwrap());
    let inverted = q_transform(&shifted, Transform::Invert).unwrap();
    assert_eq!(inverted, q_rational(3, 5).unwrap());
    println!("\n[2/3 + 1]_q = {shifted}\n[1/(5/3)]_q = {inverted}");

    let s = q_rational(5, 12).unwrap().series(12).unwrap();
    println!("\n[5/12]_q = {s}");
}
