//! The q-deformed modular group: generators, relations, words and the
//! Mobius action on series.

use qdeform::qarith::q_rational;
use qdeform::qmodular::{decompose_sl2, generator, int_mat, m_neg_word, mobius_series, q_deform_word, Gen, GroupWord, ProjClass};

fn main() {
    let (r, s) = (generator(Gen::R), generator(Gen::S));
    println!("R_q =\n{r}\nS_q =\n{s}");

    // S^2 = 1 and (S R)^3 = 1, both up to a unit.
    let s2 = ProjClass::new(&s.mul(&s));
    let sr = s.mul(&r);
    let sr3 = ProjClass::new(&sr.mul(&sr).mul(&sr));
    println!("\nS^2 trivial: {}, (SR)^3 trivial: {}", s2.is_identity(), sr3.is_identity());

    let m = int_mat(5, 2, 2, 1);
    let w = decompose_sl2(&m).unwrap();
    println!("\n[[5,2],[2,1]] = +-{w}\n[M]_q =\n{}", q_deform_word(&w));

    // M_q(c) maps [x]_q to [M.x]_q.
    let word: GroupWord = "R^2 S".parse().unwrap();
    let x = q_rational(2, 3).unwrap().series(30).unwrap();
    let image = mobius_series(q_deform_word(&word).rep(), &x).unwrap();
    // R^2 S . x = 2 - 1/x
    let expected = q_rational(1, 2).unwrap().series(image.order()).unwrap();
    assert!(image.agrees_through(&expected, image.order()));
    println!("\n({word}) . [2/3]_q = [1/2]_q = {image}");

    println!("\nM_q(3,3) =\n{}", m_neg_word(&[3, 3]));
}
