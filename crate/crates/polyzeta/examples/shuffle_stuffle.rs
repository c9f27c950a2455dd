//! The two commutative products on words: shuffle (interleavings) and
//! stuffle (interleavings plus index-adding overlaps), and the morphism
//! that makes harmonic sums multiplicative under stuffle.
//!
//! Run with: cargo run --example shuffle_stuffle

use polyzeta::harmonic::{hsum, hsum_poly};
use polyzeta::ncalg::{shuffle, stuffle, NCPolynomial};
use polyzeta::scalar::Rat;
use polyzeta::words::Word;

fn main() {
    let x01 = NCPolynomial::<Rat>::from_word(Word::x_word(&[0, 1]));
    let x1 = NCPolynomial::<Rat>::from_word(Word::x_word(&[1]));
    println!("x0x1 sh x1   = {}", shuffle(&x01, &x1).unwrap());

    let y1 = NCPolynomial::<Rat>::from_word(Word::y_word(&[1]));
    let y2 = NCPolynomial::<Rat>::from_word(Word::y_word(&[2]));
    println!("y1 st y1     = {}", stuffle(&y1, &y1).unwrap());
    println!("y1 st y2     = {}", stuffle(&y1, &y2).unwrap());

    // H_{u st v}(N) = H_u(N) H_v(N): the quasi-shuffle morphism, exactly.
    let u = Word::y_word(&[2]);
    let v = Word::y_word(&[1, 1]);
    let prod = stuffle(
        &NCPolynomial::<Rat>::from_word(u.clone()),
        &NCPolynomial::<Rat>::from_word(v.clone()),
    )
    .unwrap();
    println!("\n(y2) st (y1 y1) = {prod}");
    for n in [3usize, 10, 25] {
        let lhs = hsum_poly(&prod, n).unwrap();
        let rhs = hsum(&u, n) * hsum(&v, n);
        println!("N = {n:>2}: H(u st v) = {lhs} = H(u)·H(v) ({})", lhs == rhs);
    }
}
