//! Kleene stars of degree-one "plane" series are exactly the
//! conc-characters; under stuffle they form a group with an explicit
//! closed-form law, umbrally coded as multiplication of power series.
//! Letter stars are stuffle exponentials, and scaling the parameter gives
//! a one-parameter group.
//!
//! Run with: cargo run --example kleene_stars

use polyzeta::ncalg::{
    char_stuffle_inverse, char_stuffle_product, one_param_group, GradedSeries, NCPolynomial,
    PlaneSeries,
};
use polyzeta::scalar::{rat, PolyQ, Rat, Scalar};
use polyzeta::taylor::TaylorSeries;
use polyzeta::words::{Alphabet, Word};
use num_traits::{One, Zero};

fn main() {
    // (y1)^* st (y1)^* = (2 y1 + y2)^*: the closed-form character law.
    let a = PlaneSeries::single(1, Rat::one(), 4);
    let c = char_stuffle_product(&a, &a);
    println!("product coefficients: {:?}", c.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>());
    let recursive = a.star(4).stuffle(&a.star(4)).unwrap();
    println!("matches recursive star stuffle: {}", recursive.to_poly() == c.star(4).to_poly());

    // Inverse in the character group.
    let inv = char_stuffle_inverse(&a);
    println!("(y1)^{{*-1}} plane part: {:?}", inv.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("product with inverse is 1: {}", char_stuffle_product(&a, &inv).is_zero_plane());

    // (z y2)^* over Q[z]: geometric in the single word.
    let star = PlaneSeries::single(2, PolyQ::var("z"), 6).star(6);
    println!("\n(z y2)^* at weight 6: {star}");

    // (z^2 y2)^* equals the stuffle exponential of its zeta-tail exponent.
    let z = PolyQ::var("z");
    let lhs = PlaneSeries::single(2, z.pow(2), 8).star(8);
    let mut exponent = NCPolynomial::<PolyQ>::zero_poly(Alphabet::Y);
    for n in 1..=4u32 {
        let sign = if n % 2 == 1 { Rat::one() } else { rat(-1, 1) };
        exponent.insert_add(
            Word::y_word(&[2 * n as u64]),
            z.pow(2 * n).scale_rat(&(sign / rat(n as i64, 1))),
        );
    }
    let rhs = GradedSeries::from_poly(&exponent, 8).stuffle_exp(8).unwrap();
    println!("(z^2 y2)^* = exp_st(-sum y_2n (-z^2)^n / n): {}", lhs.to_poly() == rhs.to_poly());

    // One-parameter group: G(z1) st G(z2) = G(z1 + z2), exact rationals.
    let t = TaylorSeries::from_coeffs("q", vec![Rat::zero(), Rat::one(), rat(1, 2)]);
    let g1 = one_param_group(&t, &rat(1, 3), 5).unwrap();
    let g2 = one_param_group(&t, &rat(1, 5), 5).unwrap();
    let g = one_param_group(&t, &rat(8, 15), 5).unwrap();
    println!("group law at z1 = 1/3, z2 = 1/5: {}", g1.stuffle(&g2).unwrap().to_poly() == g.to_poly());
}
