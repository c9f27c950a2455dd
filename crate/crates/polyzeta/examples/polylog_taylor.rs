//! Local Taylor data of polylogarithms: coefficients of Li_P and of
//! Li_P/(1-z), the shuffle morphism on Taylor series, and the Hadamard
//! product identity that realizes the stuffle on the X side.
//!
//! Run with: cargo run --example polylog_taylor

use polyzeta::harmonic::{hadamard, li_coeffs, li_over_1mz_coeffs};
use polyzeta::ncalg::{shuffle, stuffle, GradedSeries, NCPolynomial};
use polyzeta::scalar::Rat;
use polyzeta::words::{pi_x, pi_y, Alphabet, Word};

fn main() {
    // Li_2 = Li_{x0 x1}: coefficients 1/n^2.
    let dilog = NCPolynomial::<Rat>::from_word(Word::x_word(&[0, 1]));
    println!("Li_2:        {}", li_coeffs(&dilog, 6).unwrap());

    // Li of a combination, and the quotient by 1-z (partial sums).
    let p = NCPolynomial::from_terms(
        Alphabet::X,
        vec![
            (Word::x_word(&[0, 1]), Rat::new(3.into(), 2.into())),
            (Word::x_word(&[1, 1]), Rat::new((-1).into(), 1.into())),
        ],
    )
    .unwrap();
    println!("Li_P:        {}", li_coeffs(&p, 5).unwrap());
    let s = GradedSeries::from_poly(&p, 2);
    println!("Li_P/(1-z):  {}", li_over_1mz_coeffs(&s, 5).unwrap());

    // eq1: Li is a shuffle morphism on Taylor data.
    let a = NCPolynomial::<Rat>::from_word(Word::x_word(&[1]));
    let lhs = li_coeffs(&shuffle(&a, &a).unwrap(), 8).unwrap();
    let la = li_coeffs(&a, 8).unwrap();
    let rhs = la.mul(&la).unwrap();
    println!("\nLi(x1 sh x1) == Li(x1)^2 to order 8: {}", lhs == rhs);

    // eq3: the Hadamard product of two quotients is the quotient of the
    // image of the stuffle.
    let u = NCPolynomial::<Rat>::from_word(Word::x_word(&[0, 1]));
    let v = NCPolynomial::<Rat>::from_word(Word::x_word(&[1]));
    let hu = li_over_1mz_coeffs(&GradedSeries::from_poly(&u, 2), 10).unwrap();
    let hv = li_over_1mz_coeffs(&GradedSeries::from_poly(&v, 2), 10).unwrap();
    let left = hadamard(&hu, &hv).unwrap();
    let st = stuffle(
        &NCPolynomial::<Rat>::from_word(pi_y(&Word::x_word(&[0, 1])).unwrap()),
        &NCPolynomial::<Rat>::from_word(pi_y(&Word::x_word(&[1])).unwrap()),
    )
    .unwrap();
    let mut img = NCPolynomial::<Rat>::zero_poly(Alphabet::X);
    for (w, c) in st.terms() {
        img.insert_add(pi_x(w), c.clone());
    }
    let right = li_over_1mz_coeffs(&GradedSeries::from_poly(&img, 3), 10).unwrap();
    println!("Hadamard identity to order 10:       {}", left == right);
}
