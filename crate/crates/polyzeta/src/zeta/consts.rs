//! Exact Bernoulli numbers, integer zeta values and the Euler-Mascheroni
//! constant at context precision.
//!
//! ζ(2k) for moderate k goes through the exact Bernoulli formula times
//! π^{2k}. Odd values use the alternating-series (eta) acceleration of
//! Cohen, Rodriguez Villegas and Zagier, run in exact rational arithmetic:
//! with n terms the error decays like (3+√8)^{-n}. Large exponents sum the
//! Dirichlet series directly, where a handful of terms already clears the
//! target precision. γ comes from Euler-Maclaurin applied to H_M - ln M
//! with exact Bernoulli corrections, M a power of two so ln M = m·ln 2.

use std::collections::HashMap;
use std::sync::Mutex;

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bigc::{to_f64, BigC, PrecisionContext};
use crate::error::{Error, Result};
use crate::scalar::Rat;

/// A numeric value paired with an estimate of everything that was cut off
/// to produce it (series truncation, summation cutoff, rounding).
#[derive(Debug, Clone)]
pub struct CharacterValue {
    pub value: BigC,
    pub error_bound: f64,
}

impl CharacterValue {
    pub fn exactish(value: BigC, ctx: &PrecisionContext) -> Self {
        let scale = value.abs_f64().max(1.0);
        CharacterValue { value, error_bound: scale * 10f64.powi(-(ctx.digits() as i32) + 2) }
    }
}

impl std::fmt::Display for CharacterValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (± {:.2e})", self.value, self.error_bound)
    }
}

static BERNOULLI_VALUES: Mutex<Option<Vec<Rat>>> = Mutex::new(None);

/// B_n with the B_1 = -1/2 convention, exact.
pub fn bernoulli(n: usize) -> Rat {
    let mut guard = BERNOULLI_VALUES.lock().unwrap();
    let values = guard.get_or_insert_with(|| vec![Rat::one()]);
    while values.len() <= n {
        let m = values.len(); // computing B_m
        let mut acc = Rat::zero();
        for (k, b) in values.iter().enumerate() {
            acc += b * Rat::from_integer(binomial_bigint(m + 1, k));
        }
        let bm = -acc / Rat::from_integer(BigInt::from(m + 1));
        values.push(bm);
    }
    values[n].clone()
}

fn binomial_bigint(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial_bigint(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

static ZETA_CACHE: Mutex<Option<HashMap<(u64, usize), BigFloat>>> = Mutex::new(None);

/// ζ(s) for integer s ≥ 2 at context precision.
pub fn zeta_bigfloat(s: u64, ctx: &PrecisionContext) -> BigFloat {
    assert!(s >= 2);
    let key = (s, ctx.bits());
    {
        let guard = ZETA_CACHE.lock().unwrap();
        if let Some(v) = guard.as_ref().and_then(|m| m.get(&key)) {
            return v.clone();
        }
    }
    let v = if s >= 64 {
        zeta_direct(s, ctx)
    } else if s.is_multiple_of(2) {
        zeta_even_exact(s, ctx)
    } else {
        zeta_eta_accelerated(s, ctx)
    };
    let mut guard = ZETA_CACHE.lock().unwrap();
    guard.get_or_insert_with(HashMap::new).insert(key, v.clone());
    v
}

/// ζ(2k) = (-1)^{k+1} B_{2k} (2π)^{2k} / (2 (2k)!): exact rational times π^{2k}.
fn zeta_even_exact(s: u64, ctx: &PrecisionContext) -> BigFloat {
    let k = s / 2;
    let b = bernoulli(s as usize);
    let sign = if k.is_multiple_of(2) { -1 } else { 1 };
    let coeff = b * Rat::new(
        BigInt::from(sign) * BigInt::from(2).pow(s as u32 - 1),
        factorial_bigint(s as usize),
    );
    let pi_pow = ctx.powi(&ctx.pi(), s as usize);
    ctx.mul(&ctx.real_from_rat(&coeff), &pi_pow)
}

/// The exact rational ζ(2k)/π^{2k}.
pub fn zeta_even_over_pi_pow(s: u64) -> Rat {
    assert!(s >= 2 && s.is_multiple_of(2));
    let k = s / 2;
    let sign = if k.is_multiple_of(2) { -1 } else { 1 };
    bernoulli(s as usize)
        * Rat::new(BigInt::from(sign) * BigInt::from(2).pow(s as u32 - 1), factorial_bigint(s as usize))
}

fn zeta_direct(s: u64, ctx: &PrecisionContext) -> BigFloat {
    let mut acc = ctx.int(1);
    let mut j = 2u64;
    // Stop once j^{-s} is below an ulp; the remaining tail is then below
    // 2·(j+1)^{-s}.
    loop {
        let term = ctx.div(&ctx.int(1), &ctx.powi(&ctx.int(j as i64), s as usize));
        acc = ctx.add(&acc, &term);
        if (j as f64).log2() * s as f64 > ctx.bits() as f64 + 8.0 || j > 1 << 16 {
            break;
        }
        j += 1;
    }
    acc
}

/// Eta acceleration (Cohen-Rodriguez Villegas-Zagier, Algorithm 1) in exact
/// rational arithmetic, then ζ(s) = η(s)/(1 - 2^{1-s}).
fn zeta_eta_accelerated(s: u64, ctx: &PrecisionContext) -> BigFloat {
    let n = ((ctx.digits() as f64 + 12.0) * std::f64::consts::LN_10
        / (3.0 + 8f64.sqrt()).ln())
    .ceil() as usize
        + 2;
    // (3+√8)^n = a + b√8 with integers a, b; d = a.
    let (mut a, mut b) = (BigInt::one(), BigInt::zero());
    for _ in 0..n {
        let (na, nb) = (&a * 3 + &b * 8, &a + &b * 3);
        a = na;
        b = nb;
    }
    let d = Rat::from_integer(a);
    let mut bk = -Rat::one();
    let mut c = -d.clone();
    let mut acc = Rat::zero();
    for k in 0..n {
        c = &bk - &c;
        let ak = Rat::new(BigInt::one(), BigInt::from(k + 1).pow(s as u32));
        acc += &c * ak;
        // b_{k+1} = b_k (k+n)(k-n) / ((k+1/2)(k+1))
        let num = BigInt::from(2) * BigInt::from(k + n) * (BigInt::from(k as i64) - BigInt::from(n as i64));
        let den = BigInt::from(2 * k + 1) * BigInt::from(k + 1);
        bk *= Rat::new(num, den);
    }
    let eta = acc / d;
    let two_pow = Rat::new(BigInt::one(), BigInt::from(2).pow(s as u32 - 1));
    let zeta = eta / (Rat::one() - two_pow);
    ctx.real_from_rat(&zeta)
}

/// ζ(s) as a character value with an error bound.
pub fn zeta_int(s: i64, ctx: &PrecisionContext) -> Result<CharacterValue> {
    if s < 2 {
        return Err(Error::Domain(format!("zeta_int requires n >= 2, got {s}")));
    }
    let v = zeta_bigfloat(s as u64, ctx);
    Ok(CharacterValue::exactish(BigC::real(v), ctx))
}

static GAMMA_CACHE: Mutex<Option<HashMap<usize, BigFloat>>> = Mutex::new(None);

/// Euler-Mascheroni constant at context precision, cached per precision.
pub fn euler_gamma(ctx: &PrecisionContext) -> BigFloat {
    {
        let guard = GAMMA_CACHE.lock().unwrap();
        if let Some(v) = guard.as_ref().and_then(|m| m.get(&ctx.bits())) {
            return v.clone();
        }
    }
    // M = 2^m with e^{-2πM} comfortably below the target.
    let m = (((ctx.digits() as f64 + 10.0) * 0.3670).log2().ceil() as usize).max(5) + 1;
    let big_m = 1usize << m;

    // H_M in the working precision.
    let mut h = ctx.int(0);
    for k in 1..=big_m {
        h = ctx.add(&h, &ctx.div(&ctx.int(1), &ctx.int(k as i64)));
    }
    let ln_m = ctx.mul(&ctx.int(m as i64), &ctx.ln_2());
    let mut gamma = ctx.sub(&h, &ln_m);
    gamma = ctx.sub(&gamma, &ctx.div(&ctx.int(1), &ctx.int(2 * big_m as i64)));

    // + Σ_k B_2k / (2k M^{2k}), stopping at the asymptotic sweet spot.
    let mut last_mag = f64::INFINITY;
    for k in 1..=200usize {
        let b = bernoulli(2 * k);
        let term_rat = b / (Rat::from_integer(BigInt::from(2 * k)) * Rat::from_integer(BigInt::from(big_m).pow(2 * k as u32)));
        let term = ctx.real_from_rat(&term_rat);
        let mag = to_f64(&term).abs();
        if mag == 0.0 || mag >= last_mag {
            break;
        }
        gamma = ctx.add(&gamma, &term);
        if mag < 2f64.powi(-(ctx.bits() as i32) - 8).max(1e-300) {
            break;
        }
        last_mag = mag;
    }
    let mut guard = GAMMA_CACHE.lock().unwrap();
    guard.get_or_insert_with(HashMap::new).insert(ctx.bits(), gamma.clone());
    gamma
}
