//! The exponent series ℓ_k, the eulerian functions Γ_{y_k}^{-1}(1+z) =
//! e^{ℓ_k(z)}, their Weierstrass products, predicted zero sets, the
//! multisection symmetry, and the generalized reflection formula.
//!
//! Series evaluation of ℓ_k converges on |z| < 1. Product evaluation
//! multiplies the first N Weierstrass factors and corrects with the exact
//! logarithm of the remainder, expressed through zeta tails
//! ζ_{>N}(s) = Σ_{n>N} n^{-s}; it is valid on the whole plane and is what
//! the reflection and zero-set checks use.

use astro_float::BigFloat;
use num_traits::Zero;

use crate::bigc::{to_f64, BigC, PrecisionContext};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::taylor::TaylorSeries;

use super::consts::{euler_gamma, zeta_bigfloat, CharacterValue};

/// ℓ_k(z) for |z| < 1:
/// k = 1: γz - Σ_{n≥2} ζ(n)(-z)^n/n;
/// k ≥ 2: -Σ_{n≥1} ζ(nk)(-z^k)^n/n.
/// `terms` forces a fixed truncation; `None` adapts to the context
/// tolerance. The truncation bound uses 1 < ζ(n) ≤ ζ(2) geometrically.
pub fn ell(k: u64, z: &BigC, ctx: &PrecisionContext, terms: Option<usize>) -> Result<CharacterValue> {
    assert!(k >= 1);
    let zmag = to_f64(&z.abs());
    if zmag >= 1.0 {
        return Err(Error::Domain(format!("ell requires |z| < 1, got |z| = {zmag}")));
    }
    if z.is_zero() {
        return Ok(CharacterValue { value: BigC::zero_at(ctx), error_bound: 0.0 });
    }
    let target = (ctx.tolerance() * 0.01).max(1e-300);
    let zk = z.powi_c(k as usize);
    let zk_mag = to_f64(&zk.abs());
    let zeta2 = 1.6449340668482264f64;

    let mut acc = BigC::zero_at(ctx);
    if k == 1 {
        acc = z.scale_bf(&euler_gamma(ctx));
    }
    let mut pow = zk.clone(); // (z^k)^n
    let mut n = 1usize;
    let mut bound;
    loop {
        // term_n = -ζ(nk)(-1)^n z^{kn}/n, with ζ(nk) skipped while nk < 2.
        if (n as u64) * k >= 2 {
            // term_n = -ζ(nk)(-z^k)^n/n = (-1)^{n+1} ζ(nk) z^{kn}/n
            let zeta = zeta_bigfloat(n as u64 * k, ctx);
            let mut term = pow.scale_bf(&zeta).scale_bf(&ctx.div(&ctx.int(1), &ctx.int(n as i64)));
            if n.is_multiple_of(2) {
                term = term.neg_c();
            }
            acc = acc.add_c(&term);
        }
        // Geometric tail bound: Σ_{m>n} ζ(2)|z|^{km}/m ≤ ζ(2)|z|^{k(n+1)}/((n+1)(1-|z|^k)).
        bound = zeta2 * zk_mag.powi(n as i32 + 1) / ((n as f64 + 1.0) * (1.0 - zk_mag));
        n += 1;
        match terms {
            Some(t) => {
                if n > t {
                    break;
                }
            }
            None => {
                if bound < target || n > 100_000 {
                    break;
                }
            }
        }
        pow = pow.mul_c(&zk);
    }
    if bound > ctx.tolerance().max(1e-300) && terms.is_none() {
        return Err(Error::Tolerance(format!(
            "ell truncation bound {bound} above tolerance at |z| = {zmag}"
        )));
    }
    Ok(CharacterValue { value: acc, error_bound: bound })
}

/// Evaluation mode for [`inv_gamma_yk`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMode {
    /// exp(ℓ_k(z)); requires |z| < 1.
    Series,
    /// Weierstrass product with exact log-tail correction; whole plane.
    Product,
}

/// Γ_{y_k}^{-1}(1+z) = e^{ℓ_k(z)}. For k = 1 this is the classical inverse
/// Gamma: e^{γz} Π (1+z/n) e^{-z/n}.
pub fn inv_gamma_yk(
    k: u64,
    z: &BigC,
    ctx: &PrecisionContext,
    mode: EvalMode,
) -> Result<CharacterValue> {
    assert!(k >= 1);
    match mode {
        EvalMode::Series => {
            let l = ell(k, z, ctx, None)?;
            let value = l.value.exp_c(ctx);
            let scale = value.abs_f64();
            Ok(CharacterValue { value, error_bound: (l.error_bound * scale).max(1e-300) })
        }
        EvalMode::Product => product_eval(k, z, ctx),
    }
}

/// Σ_{n>N} n^{-s} at working precision, via ζ(s) minus the partial sum.
fn zeta_tail(s: u64, n_cut: usize, ctx: &PrecisionContext) -> BigFloat {
    let mut partial = ctx.int(0);
    for n in 1..=n_cut {
        partial = ctx.add(&partial, &ctx.div(&ctx.int(1), &ctx.powi(&ctx.int(n as i64), s as usize)));
    }
    ctx.sub(&zeta_bigfloat(s, ctx), &partial)
}

fn product_eval(k: u64, z: &BigC, ctx: &PrecisionContext) -> Result<CharacterValue> {
    let zmag = to_f64(&z.abs());
    let n_cut = 48usize.max((3.0 * zmag).ceil() as usize + 8);
    let zk = z.powi_c(k as usize);

    // Finite part Π_{n≤N} (1 + z^k/n^k), with the k = 1 Weierstrass
    // convergence factors folded into exp(z(γ - H_N)).
    let mut prod = BigC::one_at(ctx);
    for n in 1..=n_cut {
        let nk = ctx.powi(&ctx.int(n as i64), k as usize);
        let factor = BigC::one_at(ctx).add_c(&zk.scale_bf(&ctx.div(&ctx.int(1), &nk)));
        prod = prod.mul_c(&factor);
    }
    if prod.is_zero() {
        // Sitting exactly on a zero of a finite factor.
        return Ok(CharacterValue { value: prod, error_bound: 0.0 });
    }

    // log of the remaining factors: -Σ_{j≥j0} ζ_{>N}(kj)(-z^k)^j/j, with
    // j0 = 2 for k = 1 (the j = 1 term is cancelled by the convergence
    // factors) and j0 = 1 otherwise.
    let j0 = if k == 1 { 2 } else { 1 };
    let mut tail = BigC::zero_at(ctx);
    let mut pow = zk.powi_c(j0);
    let ratio = zmag.powi(k as i32) / ((n_cut + 1) as f64).powi(k as i32);
    debug_assert!(ratio < 0.5);
    let mut j = j0;
    let mut bound;
    loop {
        let zt = zeta_tail(k * j as u64, n_cut, ctx);
        let mut term = pow.scale_bf(&zt).scale_bf(&ctx.div(&ctx.int(1), &ctx.int(j as i64)));
        if j.is_multiple_of(2) {
            term = term.neg_c();
        }
        tail = tail.add_c(&term);
        // ζ_{>N}(kj) ≤ N^{1-kj}·kj/(kj-1); bound the next term geometrically.
        let zt_f = to_f64(&zt).abs();
        bound = zt_f * zmag.powi((k * (j as u64 + 1)) as i32)
            / ((n_cut as f64).powi(k as i32) * (j as f64 + 1.0));
        j += 1;
        if bound < (ctx.tolerance() * 0.01).max(1e-300) || j > 40_000 {
            break;
        }
        pow = pow.mul_c(&zk);
    }
    let mut value = prod.mul_c(&tail.exp_c(ctx));
    if k == 1 {
        let mut h = ctx.int(0);
        for n in 1..=n_cut {
            h = ctx.add(&h, &ctx.div(&ctx.int(1), &ctx.int(n as i64)));
        }
        let exponent = z.scale_bf(&ctx.sub(&euler_gamma(ctx), &h));
        value = value.mul_c(&exponent.exp_c(ctx));
    }
    let scale = value.abs_f64().max(1e-30);
    Ok(CharacterValue { value, error_bound: (bound * scale).max(1e-300) })
}

/// The set G_r of solutions of χ^r = (-1)^{r-1}: the r-th roots of unity
/// for odd r, and ξ·(r-th roots of unity) with ξ^r = -1 for even r.
pub fn root_set_g(r: u64, ctx: &PrecisionContext) -> Vec<BigC> {
    (0..r)
        .map(|j| {
            if r % 2 == 1 {
                ctx.unit_phase(2 * j as i64, r as i64)
            } else {
                ctx.unit_phase(2 * j as i64 + 1, r as i64)
            }
        })
        .collect()
}

/// Predicted zeros of Γ_{y_r}^{-1}(1+z): all χ·m with χ ∈ G_r, m ≤ -1,
/// |χ·m| ≤ bound.
pub fn predicted_zeros(r: u64, bound: f64, ctx: &PrecisionContext) -> Vec<BigC> {
    assert!(r >= 1);
    let roots = root_set_g(r, ctx);
    let mut out: Vec<BigC> = Vec::new();
    let mut m = 1usize;
    while (m as f64) <= bound {
        for chi in &roots {
            let p = chi.scale_bf(&ctx.int(-(m as i64)));
            if !out.iter().any(|q| q.sub_c(&p).abs_f64() < 1e-12) {
                out.push(p);
            }
        }
        m += 1;
    }
    out
}

/// Multisection symmetrization: r · (terms of f with exponent divisible
/// by r). Equals Σ_{χ^r = 1} f(χ z) inside the disk of convergence.
pub fn symmetrize<K: Scalar>(f: &TaylorSeries<K>, r: usize) -> TaylorSeries<K> {
    assert!(r >= 1);
    let mut coeffs = Vec::with_capacity(f.order() + 1);
    for n in 0..=f.order() {
        if n % r == 0 {
            coeffs.push(f.coeff(n).scale_rat(&crate::scalar::rat_int(r as i64)));
        } else {
            coeffs.push(K::zero());
        }
    }
    let mut out = TaylorSeries::from_coeffs(f.var(), coeffs);
    out.truncated = f.truncated;
    out
}

/// Both sides of the generalized reflection formula
/// Γ_{y_{2r}}(1+z) = Γ_{y_r}(1+ρz) Γ_{y_r}(1+ρξz) evaluated in product
/// mode, with ρ = e^{iπ/2r}, ξ = e^{iπ/r} unless overridden.
#[derive(Debug, Clone)]
pub struct ReflectionReport {
    pub lhs: BigC,
    pub rhs: BigC,
    pub difference: f64,
    /// Set when either side sits on a pole of Γ (a zero of the inverse);
    /// the difference is then not meaningful.
    pub pole_hit: Option<String>,
}

/// Reflection check with the fixed standard root choice.
pub fn reflection_check(r: u64, z: &BigC, ctx: &PrecisionContext) -> Result<ReflectionReport> {
    reflection_check_pair(r, z, 0, 1, ctx)
}

/// Reflection check with ρ = e^{iπ(2a+1)/2r} (a 2r-th root of -1) and
/// ξ = e^{2πi b/2r} for gcd(b, 2r) = 1 (a primitive 2r-th root of unity).
pub fn reflection_check_pair(
    r: u64,
    z: &BigC,
    a: u64,
    b: u64,
    ctx: &PrecisionContext,
) -> Result<ReflectionReport> {
    assert!(r >= 1);
    assert!(gcd(b, 2 * r) == 1, "xi must be primitive");
    let rho = ctx.unit_phase(2 * a as i64 + 1, 2 * r as i64);
    let xi = ctx.unit_phase(2 * b as i64, 2 * r as i64);

    let inv_lhs = inv_gamma_yk(2 * r, z, ctx, EvalMode::Product)?;
    let inv_rhs_1 = inv_gamma_yk(r, &rho.mul_c(z), ctx, EvalMode::Product)?;
    let inv_rhs_2 = inv_gamma_yk(r, &rho.mul_c(&xi).mul_c(z), ctx, EvalMode::Product)?;

    let tiny = 1e-25;
    if inv_lhs.value.abs_f64() < tiny {
        return Ok(ReflectionReport {
            lhs: BigC::zero_at(ctx),
            rhs: BigC::zero_at(ctx),
            difference: f64::NAN,
            pole_hit: Some(format!("pole of Gamma_{{y{}}} at 1+z, z = {z:?}", 2 * r)),
        });
    }
    if inv_rhs_1.value.abs_f64() < tiny || inv_rhs_2.value.abs_f64() < tiny {
        return Ok(ReflectionReport {
            lhs: BigC::zero_at(ctx),
            rhs: BigC::zero_at(ctx),
            difference: f64::NAN,
            pole_hit: Some(format!("pole of Gamma_{{y{r}}} on the right-hand side, z = {z:?}")),
        });
    }
    let lhs = BigC::one_at(ctx).div_c(&inv_lhs.value);
    let rhs = BigC::one_at(ctx).div_c(&inv_rhs_1.value.mul_c(&inv_rhs_2.value));
    let difference = lhs.sub_c(&rhs).abs_f64();
    Ok(ReflectionReport { lhs, rhs, difference, pole_hit: None })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, Rat};
    use num_traits::{One, Zero};

    #[test]
    fn ell_at_zero_and_signs() {
        let ctx = PrecisionContext::new(30);
        let v = ell(2, &BigC::zero_at(&ctx), &ctx, None).unwrap();
        assert!(v.value.is_zero());

        // ℓ_1(z) = γz - ζ(2)z²/2 + ζ(3)z³/3 - ... : check the first
        // coefficients by finite differencing at small z.
        let h = 1e-4;
        let z = BigC::from_f64s(h, 0.0, &ctx);
        let v = ell(1, &z, &ctx, None).unwrap().value.approx().0;
        let expected = 0.5772156649015329 * h - 1.6449340668482264 * h * h / 2.0
            + 1.2020569031595943 * h * h * h / 3.0;
        assert!((v - expected).abs() < 1e-14);
    }

    #[test]
    fn ell_2_is_even_in_z() {
        let ctx = PrecisionContext::new(30);
        let z = BigC::from_f64s(0.3, 0.2, &ctx);
        let a = ell(2, &z, &ctx, None).unwrap().value;
        let b = ell(2, &z.neg_c(), &ctx, None).unwrap().value;
        assert!(a.sub_c(&b).abs_f64() < 1e-22);
    }

    #[test]
    fn ell_is_invariant_under_rth_roots_of_unity() {
        // ℓ_r(χz) = ℓ_r(z) for χ^r = 1: the series has only z^{rk} terms.
        let ctx = PrecisionContext::new(30);
        let z = BigC::from_f64s(0.31, 0.17, &ctx);
        for r in [2u64, 3, 4] {
            let base = ell(r, &z, &ctx, None).unwrap().value;
            for j in 1..r {
                let chi = ctx.unit_phase(2 * j as i64, r as i64);
                let rotated = ell(r, &chi.mul_c(&z), &ctx, None).unwrap().value;
                assert!(
                    base.sub_c(&rotated).abs_f64() < 1e-20,
                    "r={r} j={j}"
                );
            }
        }
    }

    #[test]
    fn ell_rejects_outside_disk() {
        let ctx = PrecisionContext::new(30);
        assert!(ell(2, &BigC::from_f64s(1.0, 0.0, &ctx), &ctx, None).is_err());
    }

    #[test]
    fn inv_gamma_classical_points() {
        let ctx = PrecisionContext::new(40);
        // 1/Γ(2) = 1 at z = 1 (product mode; outside the series disk).
        let one = BigC::one_at(&ctx);
        let v = inv_gamma_yk(1, &one, &ctx, EvalMode::Product).unwrap();
        assert!(v.value.sub_c(&one).abs_f64() < 1e-30, "got {:?}", v.value.approx());
        // 1/Γ(3) = 1/2 at z = 2.
        let two = BigC::from_f64s(2.0, 0.0, &ctx);
        let v = inv_gamma_yk(1, &two, &ctx, EvalMode::Product).unwrap();
        assert!(v.value.sub_c(&BigC::from_f64s(0.5, 0.0, &ctx)).abs_f64() < 1e-30);
        // 1/Γ(1.5) = 2/√π at z = 0.5.
        let half = BigC::from_f64s(0.5, 0.0, &ctx);
        let v = inv_gamma_yk(1, &half, &ctx, EvalMode::Product).unwrap();
        let expected = BigC::real(ctx.div(&ctx.int(2), &ctx.sqrt(&ctx.pi())));
        assert!(v.value.sub_c(&expected).abs_f64() < 1e-30);
    }

    /// Lanczos approximation of Γ, as an implementation-independent check.
    fn gamma_lanczos(x: f64) -> f64 {
        const P: [f64; 9] = [
            0.999_999_999_999_809_9,
            676.520_368_121_885_1,
            -1_259.139_216_722_402_8,
            771.323_428_777_653_1,
            -176.615_029_162_140_6,
            12.507_343_278_686_905,
            -0.138_571_095_265_720_12,
            9.984_369_578_019_572e-6,
            1.505_632_735_149_311_6e-7,
        ];
        let x = x - 1.0;
        let mut t = P[0];
        for (i, p) in P.iter().enumerate().skip(1) {
            t += p / (x + i as f64);
        }
        let w = x + 7.5;
        (2.0 * std::f64::consts::PI).sqrt() * w.powf(x + 0.5) * (-w).exp() * t
    }

    #[test]
    fn inv_gamma_matches_lanczos_oracle() {
        let ctx = PrecisionContext::new(40);
        for zr in [0.1f64, 0.35, 0.8, 1.3, 2.6] {
            let z = BigC::from_f64s(zr, 0.0, &ctx);
            let v = inv_gamma_yk(1, &z, &ctx, EvalMode::Product).unwrap();
            let oracle = 1.0 / gamma_lanczos(1.0 + zr);
            assert!((v.value.approx().0 - oracle).abs() < 1e-9, "z = {zr}");
        }
    }

    #[test]
    fn series_and_product_modes_agree() {
        let ctx = PrecisionContext::new(50);
        for k in [1u64, 2, 3] {
            for (re, im) in [(0.4, 0.2), (-0.3, 0.55), (0.0, -0.7), (0.62, 0.0)] {
                let z = BigC::from_f64s(re, im, &ctx);
                let s = inv_gamma_yk(k, &z, &ctx, EvalMode::Series).unwrap();
                let p = inv_gamma_yk(k, &z, &ctx, EvalMode::Product).unwrap();
                let diff = s.value.sub_c(&p.value).abs_f64();
                assert!(diff < 1e-25, "k={k} z=({re},{im}): diff {diff}");
            }
        }
    }

    #[test]
    fn zero_of_gamma_y2_at_i() {
        let ctx = PrecisionContext::new(40);
        let i = BigC::i_at(&ctx);
        let v = inv_gamma_yk(2, &i, &ctx, EvalMode::Product).unwrap();
        assert!(v.value.abs_f64() < 1e-25);
    }

    #[test]
    fn predicted_zero_sets() {
        let ctx = PrecisionContext::new(30);
        let z1 = predicted_zeros(1, 3.5, &ctx);
        assert_eq!(z1.len(), 3);
        for (m, p) in z1.iter().enumerate() {
            let (re, im) = p.approx();
            assert!((re + (m as f64 + 1.0)).abs() < 1e-20 && im.abs() < 1e-20);
        }
        let z2 = predicted_zeros(2, 2.5, &ctx);
        assert_eq!(z2.len(), 4);
        for p in &z2 {
            let (re, im) = p.approx();
            assert!(re.abs() < 1e-20);
            assert!((im.abs() - 1.0).abs() < 1e-20 || (im.abs() - 2.0).abs() < 1e-20);
        }
        let z3 = predicted_zeros(3, 1.5, &ctx);
        assert_eq!(z3.len(), 3);
    }

    #[test]
    fn symmetrize_examples() {
        // exp series, r = 2: twice the even part (cosh).
        let exp = TaylorSeries::from_coeffs(
            "z",
            (0..=8)
                .map(|n| Rat::new(1.into(), crate::comb::factorial(n).into()))
                .collect::<Vec<_>>(),
        );
        let s = symmetrize(&exp, 2);
        for n in 0..=8usize {
            if n % 2 == 0 {
                assert_eq!(s.coeff(n), Rat::new(2.into(), crate::comb::factorial(n).into()));
            } else {
                assert!(s.coeff(n).is_zero());
            }
        }
        // r = 1: unchanged.
        assert_eq!(symmetrize(&exp, 1), exp);
        // f = z + z³, r = 3 -> 3z³.
        let f = TaylorSeries::from_coeffs("z", vec![Rat::zero(), Rat::one(), Rat::zero(), Rat::one()]);
        let s = symmetrize(&f, 3);
        assert!(s.coeff(1).is_zero());
        assert_eq!(s.coeff(3), rat_int(3));
    }

    #[test]
    fn symmetrize_matches_root_of_unity_sum() {
        let ctx = PrecisionContext::new(30);
        // f(z) = Σ z^n/n!, r = 3, at z = 0.4+0.1i: Σ_χ f(χz) = (sym f)(z).
        let coeffs: Vec<Rat> =
            (0..=12).map(|n| Rat::new(1.into(), crate::comb::factorial(n).into())).collect();
        let f = TaylorSeries::from_coeffs("z", coeffs);
        let z = BigC::from_f64s(0.4, 0.1, &ctx);
        let eval = |t: &TaylorSeries<Rat>, at: &BigC| {
            let mut acc = BigC::zero_at(&ctx);
            let mut pw = BigC::one_at(&ctx);
            for n in 0..=t.order() {
                acc = acc.add_c(&pw.scale_bf(&ctx.real_from_rat(&t.coeff(n))));
                pw = pw.mul_c(at);
            }
            acc
        };
        let mut lhs = BigC::zero_at(&ctx);
        for j in 0..3 {
            let chi = ctx.unit_phase(2 * j, 3);
            lhs = lhs.add_c(&eval(&f, &chi.mul_c(&z)));
        }
        let rhs = eval(&symmetrize(&f, 3), &z);
        assert!(lhs.sub_c(&rhs).abs_f64() < 1e-12);
    }

    #[test]
    fn reflection_classical_and_generalized() {
        let ctx = PrecisionContext::new(40);
        // r = 1 at z = 0: both sides are 1.
        let rep = reflection_check(1, &BigC::zero_at(&ctx), &ctx).unwrap();
        assert!(rep.pole_hit.is_none());
        assert!(rep.lhs.sub_c(&BigC::one_at(&ctx)).abs_f64() < 1e-25);
        assert!(rep.difference < 1e-25);

        // r = 1 at z = 1/2: Γ_{y2}(1+ρ/2)... reduces to the classical
        // Γ(1+x)Γ(1-x) structure.
        let rep = reflection_check(1, &BigC::from_f64s(0.5, 0.0, &ctx), &ctx).unwrap();
        assert!(rep.pole_hit.is_none());
        assert!(rep.difference < 1e-25, "difference {}", rep.difference);

        // r = 2 at a generic complex point.
        let rep = reflection_check(2, &BigC::from_f64s(0.3, 0.1, &ctx), &ctx).unwrap();
        assert!(rep.difference < 1e-20, "difference {}", rep.difference);
    }

    #[test]
    fn reflection_holds_for_every_valid_root_pair() {
        let ctx = PrecisionContext::new(30);
        let z = BigC::from_f64s(0.35, -0.2, &ctx);
        for r in [1u64, 2] {
            for a in 0..2 * r {
                for b in 1..2 * r {
                    if gcd(b, 2 * r) != 1 {
                        continue;
                    }
                    let rep = reflection_check_pair(r, &z, a, b, &ctx).unwrap();
                    assert!(
                        rep.difference < 1e-18,
                        "r={r} a={a} b={b}: difference {}",
                        rep.difference
                    );
                }
            }
        }
    }
}
