//! The eulerian functions Gamma_{y_k}^{-1}(1+z) = exp(l_k(z)): series vs
//! Weierstrass-product evaluation, the sine formula, predicted zero sets,
//! and the generalized reflection formula.
//!
//! Run with: cargo run --example eulerian_functions

use polyzeta::bigc::{to_f64, BigC, PrecisionContext};
use polyzeta::zeta::{
    ell, inv_gamma_yk, predicted_zeros, reflection_check, EvalMode,
};

fn main() {
    let ctx = PrecisionContext::new(40);

    // Gamma_{y1} is the classical Gamma: 1/Gamma(2) = 1.
    let v = inv_gamma_yk(1, &BigC::one_at(&ctx), &ctx, EvalMode::Product).unwrap();
    println!("1/Gamma(2)            = {:.15}", v.value.approx().0);

    // Series and product evaluations agree inside the unit disk.
    let z = BigC::from_f64s(0.4, 0.2, &ctx);
    let s = inv_gamma_yk(2, &z, &ctx, EvalMode::Series).unwrap();
    let p = inv_gamma_yk(2, &z, &ctx, EvalMode::Product).unwrap();
    println!("mode agreement at 0.4+0.2i: |diff| = {:.2e}", s.value.sub_c(&p.value).abs_f64());

    // exp(l_2(ix)) = sin(pi x)/(pi x).
    let x = 0.5f64;
    let ix = BigC::new(ctx.int(0), ctx.real_from_f64(x));
    let lhs = ell(2, &ix, &ctx, None).unwrap().value.exp_c(&ctx);
    let pix = ctx.mul(&ctx.pi(), &ctx.real_from_f64(x));
    let rhs = ctx.div(&ctx.sin(&pix), &pix);
    println!(
        "exp(l_2(i/2)) = {:.15} vs sin(pi/2)/(pi/2) = {:.15}",
        lhs.approx().0,
        to_f64(&rhs)
    );

    // Zero sets: G_r · negative integers.
    for r in [1u64, 2, 3] {
        let zeros = predicted_zeros(r, 2.5, &ctx);
        print!("zeros of 1/Gamma_{{y{r}}} with |p| <= 2.5:");
        for pt in &zeros {
            let (re, im) = pt.approx();
            print!(" ({re:.3}{im:+.3}i)");
        }
        let worst = zeros
            .iter()
            .map(|pt| inv_gamma_yk(r, pt, &ctx, EvalMode::Product).unwrap().value.abs_f64())
            .fold(0.0f64, f64::max);
        println!("\n  max |value| there = {worst:.2e}");
    }

    // Generalized reflection formula at a complex point.
    let rep = reflection_check(2, &BigC::from_f64s(0.3, 0.1, &ctx), &ctx).unwrap();
    println!("reflection r=2 at 0.3+0.1i: |lhs-rhs| = {:.2e}", rep.difference);
}
