//! Regular and negative continued fractions of a rational number, and their
//! q-deformations, which always agree.

use qdeform::qarith::{eval_cf_classical, eval_cf_q, negative_cf, regular_cf, CFWord, CanonicalQRational};

fn main() {
    for (r, s) in [(5, 12), (3, 5), (7, 2), (-1, 4)] {
        let reg = regular_cf(r, s).unwrap();
        let neg = negative_cf(r, s).unwrap();
        let (u1, f1) = eval_cf_q(&reg).unwrap();
        let (u2, f2) = eval_cf_q(&neg).unwrap();
        let a = CanonicalQRational::from_parts(u1, f1);
        let b = CanonicalQRational::from_parts(u2, f2);
        assert_eq!(a, b);
        println!("{r}/{s}: regular {reg}, negative {neg}");
        println!("    q-value {a}");
    }

    // Any word can be evaluated, canonical or not.
    let w: CFWord = "[[2,2,3]]".parse().unwrap();
    let (n, d) = eval_cf_classical(&w).unwrap();
    let (u, f) = eval_cf_q(&w).unwrap();
    println!("\n{w} = {n}/{d}, q-deformed {}", CanonicalQRational::from_parts(u, f));
}
