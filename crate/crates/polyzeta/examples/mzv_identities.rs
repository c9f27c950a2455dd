//! Polyzeta identities at desk scale: zeta({2}^k) = pi^{2k}/(2k+1)!,
//! zeta(2,1) = zeta(3), zeta(3,1) = pi^4/360 = zeta(4)/4.
//!
//! Run with: cargo run --example mzv_identities

use polyzeta::bigc::{to_f64, PrecisionContext};
use polyzeta::comb::factorial;
use polyzeta::ncalg::PlaneSeries;
use polyzeta::scalar::{rat_int, PolyQ, Rat, Scalar};
use polyzeta::words::Word;
use polyzeta::zeta::{gamma_char_poly_coeffs, mzv, zeta_bigfloat, zeta_equal_letter};
use num_traits::ToPrimitive;

fn main() {
    let ctx = PrecisionContext::new(50);

    // Coefficients of the gamma character of (-z^2 y2)^*: the weight-2k
    // component carries (-1)^k zeta({2}^k).
    let alpha = PolyQ::var("z").pow(2).scale_rat(&rat_int(-1));
    let star = PlaneSeries::single(2, alpha, 12).star(12);
    let coeffs = gamma_char_poly_coeffs(&star, "z", &ctx).unwrap();
    println!("zeta({{2}}^k) / pi^{{2k}} vs 1/(2k+1)!:");
    for k in 1..=6usize {
        let zeta = if k % 2 == 0 { coeffs[2 * k].value.re.clone() } else { coeffs[2 * k].value.re.neg() };
        let ratio = ctx.div(&zeta, &ctx.powi(&ctx.pi(), 2 * k));
        let expected = 1.0 / factorial(2 * k + 1).to_f64().unwrap();
        println!("  k={k}: {:.3e} vs {:.3e}", to_f64(&ratio), expected);
    }

    // Euler: zeta(2,1) = zeta(3).
    let z21 = mzv(&Word::y_word(&[2, 1]), &ctx).unwrap();
    let z3 = zeta_bigfloat(3, &ctx);
    println!(
        "\nzeta(2,1) = {:.12}  vs zeta(3) = {:.12}",
        z21.value.approx().0,
        to_f64(&z3)
    );

    // zeta(3,1) = pi^4/360 = 4^{-1} zeta(4).
    let z31 = mzv(&Word::y_word(&[3, 1]), &ctx).unwrap();
    let pi4_360 = to_f64(&ctx.div(&ctx.powi(&ctx.pi(), 4), &ctx.int(360)));
    println!("zeta(3,1) = {:.12}  vs pi^4/360 = {pi4_360:.12}", z31.value.approx().0);

    // Newton route for equal-letter words: zeta({2}^3) = pi^6/5040.
    let e3 = zeta_equal_letter(2, 3, &ctx);
    let pi6 = ctx.powi(&ctx.pi(), 6);
    println!(
        "zeta(2,2,2) = {:.12} vs pi^6/5040 = {:.12}",
        to_f64(&e3),
        to_f64(&ctx.div(&pi6, &ctx.int(5040)))
    );
    let _ = Rat::default();
}
