//! q-deformed irrationals as limits of q-rationals: the coefficients of
//! `[x_n]_q` stabilize as `x_n -> x`.

use qdeform::qarith::{q_rational, q_series_from_cf, Flavor, StreamOptions};
use qdeform::qquadratic::{cf_stream, q_quadratic, qsurd_series, Surd};

const ORDER: i64 = 16;

fn main() {
    // Convergents of 1 + sqrt(2): 2, 5/2, 12/5, 29/12, 70/29, ...
    let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0i64, 2i64, 1i64);
    for _ in 0..8 {
        let s = q_rational(p1, q1).unwrap().series(ORDER).unwrap();
        println!("[{p1}/{q1}]_q = {s}");
        (p0, q0, p1, q1) = (p1, q1, 2 * p1 + p0, 2 * q1 + q0);
    }

    let x: Surd = "1+sqrt(2)".parse().unwrap();
    let closed = qsurd_series(&q_quadratic(&x).unwrap(), ORDER).unwrap();
    let streamed = q_series_from_cf(cf_stream(&x, Flavor::Regular), Flavor::Regular, ORDER, StreamOptions::default()).unwrap();
    assert!(closed.agrees_through(&streamed, ORDER));
    println!("\n[1+sqrt(2)]_q = {closed}");

    // The golden ratio needs no closed form to stream.
    let phi: Surd = "(1+sqrt(5))/2".parse().unwrap();
    let s = q_series_from_cf(cf_stream(&phi, Flavor::Negative), Flavor::Negative, ORDER, StreamOptions::default()).unwrap();
    println!("[(1+sqrt(5))/2]_q = {s}");
}
