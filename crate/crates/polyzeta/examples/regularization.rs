//! Stuffle regularization: every Y-word is a polynomial in g (the class of
//! the divergent y1) with convergent-word coefficients. Sending g to the
//! Euler-Mascheroni constant and convergent words to their polyzetas gives
//! the stuffle character gamma_•.
//!
//! Run with: cargo run --example regularization

use polyzeta::ncalg::{stuffle, NCPolynomial};
use polyzeta::scalar::Rat;
use polyzeta::words::Word;
use polyzeta::zeta::{gamma_char, stuffle_regularize, PrecisionContext};

fn main() {
    for idx in [vec![1u64], vec![2], vec![1, 1], vec![1, 2], vec![1, 1, 1]] {
        let w = Word::y_word(&idx);
        println!("reg({w})  =  {}", stuffle_regularize(&w));
    }

    // The map is a stuffle morphism.
    let u = Word::y_word(&[1]);
    let v = Word::y_word(&[1, 2]);
    let prod = stuffle(
        &NCPolynomial::<Rat>::from_word(u.clone()),
        &NCPolynomial::<Rat>::from_word(v.clone()),
    )
    .unwrap();
    let lhs = polyzeta::zeta::stuffle_regularize_poly(&prod).unwrap();
    let rhs = stuffle_regularize(&u).stuffle_mul(&stuffle_regularize(&v));
    println!("\nreg(u st v) = reg(u) * reg(v): {}", lhs == rhs);

    // Numeric specialization.
    let ctx = PrecisionContext::new(30);
    for idx in [vec![1u64], vec![2], vec![1, 1], vec![2, 1]] {
        let w = Word::y_word(&idx);
        let v = gamma_char(&NCPolynomial::from_word(w.clone()), &ctx).unwrap();
        let (re, _) = v.value.approx();
        println!("gamma({w}) = {re:.15}  (bound {:.1e})", v.error_bound);
    }
    // gamma(y1 y1) = (gamma^2 - zeta(2))/2.
    let g = 0.5772156649015329f64;
    println!("(gamma^2 - zeta(2))/2 = {:.15}", (g * g - 1.6449340668482264) / 2.0);
}
