//! Arbitrary-precision real and complex arithmetic on top of `astro-float`,
//! driven by an explicit [`PrecisionContext`]. There is no global precision
//! state: every numeric routine receives the context it must honor.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Rat, Scalar};

const LOG2_10: f64 = std::f64::consts::LOG2_10;
/// Guard bits on top of the requested decimal precision.
const GUARD_BITS: usize = 64;
/// Working precision for values created outside any context (trait
/// constants such as `one()`); they are exact and get promoted by ops.
const DEFAULT_BITS: usize = 192;

/// Working precision plus the comparison tolerance derived from it.
#[derive(Clone)]
pub struct PrecisionContext {
    digits: usize,
    tolerance: f64,
    bits: usize,
    rm: RoundingMode,
    consts: Arc<Mutex<Consts>>,
}

impl fmt::Debug for PrecisionContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PrecisionContext")
            .field("digits", &self.digits)
            .field("tolerance", &self.tolerance)
            .finish()
    }
}

impl PrecisionContext {
    /// Context with `digits` decimal digits of working precision and the
    /// default tolerance 10^-(digits-10). Requires digits ≥ 15.
    pub fn new(digits: usize) -> Self {
        assert!(digits >= 15, "precision must be at least 15 digits");
        let bits = (digits as f64 * LOG2_10).ceil() as usize + GUARD_BITS;
        PrecisionContext {
            digits,
            tolerance: 10f64.powi(-((digits as i32) - 10)),
            bits,
            rm: RoundingMode::ToEven,
            consts: Arc::new(Mutex::new(Consts::new().expect("constants cache"))),
        }
    }

    /// Override the comparison tolerance; it cannot undercut the guard
    /// floor 10^-(digits-10).
    pub fn with_tolerance(mut self, tol: f64) -> Self {
        let floor = 10f64.powi(-((self.digits as i32) - 10));
        assert!(tol >= floor, "tolerance {tol} below guard floor {floor}");
        self.tolerance = tol;
        self
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn rounding(&self) -> RoundingMode {
        self.rm
    }

    pub fn pi(&self) -> BigFloat {
        self.consts.lock().unwrap().pi(self.bits, self.rm)
    }

    pub fn ln_2(&self) -> BigFloat {
        self.consts.lock().unwrap().ln_2(self.bits, self.rm)
    }

    pub fn int(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, self.bits)
    }

    pub fn real_from_f64(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.bits)
    }

    /// Exactly rounded conversion of a big rational.
    pub fn real_from_rat(&self, r: &Rat) -> BigFloat {
        let num = self.real_from_bigint(r.numer());
        let den = self.real_from_bigint(r.denom());
        num.div(&den, self.bits, self.rm)
    }

    pub fn real_from_bigint(&self, n: &BigInt) -> BigFloat {
        let digits = n.magnitude().to_string();
        // Parse with enough precision to hold the integer exactly, then
        // round to the working precision.
        let need = (digits.len() as f64 * LOG2_10).ceil() as usize + 8;
        let mut v = BigFloat::parse(
            &digits,
            Radix::Dec,
            need.max(self.bits),
            self.rm,
            &mut self.consts.lock().unwrap(),
        );
        v.set_precision(self.bits, self.rm).expect("finite integer");
        if n.is_negative() {
            v = v.neg();
        }
        v
    }

    pub fn parse_real(&self, s: &str) -> BigFloat {
        BigFloat::parse(s, Radix::Dec, self.bits, self.rm, &mut self.consts.lock().unwrap())
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.bits, self.rm)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.bits, self.rm)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.bits, self.rm)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.bits, self.rm)
    }

    pub fn powi(&self, a: &BigFloat, n: usize) -> BigFloat {
        a.powi(n, self.bits, self.rm)
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.bits, self.rm)
    }

    pub fn exp(&self, a: &BigFloat) -> BigFloat {
        a.exp(self.bits, self.rm, &mut self.consts.lock().unwrap())
    }

    pub fn ln(&self, a: &BigFloat) -> BigFloat {
        a.ln(self.bits, self.rm, &mut self.consts.lock().unwrap())
    }

    pub fn sin(&self, a: &BigFloat) -> BigFloat {
        a.sin(self.bits, self.rm, &mut self.consts.lock().unwrap())
    }

    pub fn cos(&self, a: &BigFloat) -> BigFloat {
        a.cos(self.bits, self.rm, &mut self.consts.lock().unwrap())
    }

    pub fn sinh(&self, a: &BigFloat) -> BigFloat {
        a.sinh(self.bits, self.rm, &mut self.consts.lock().unwrap())
    }

    pub fn cosh(&self, a: &BigFloat) -> BigFloat {
        a.cosh(self.bits, self.rm, &mut self.consts.lock().unwrap())
    }

    /// cos(θ) + i sin(θ) for θ = p·π/q.
    pub fn unit_phase(&self, p: i64, q: i64) -> BigC {
        let theta = self.mul(&self.pi(), &self.div(&self.int(p), &self.int(q)));
        BigC::new(self.cos(&theta), self.sin(&theta))
    }
}

/// Best-effort f64 view of a BigFloat (for error estimates and reports).
pub fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    let s = x.to_string();
    f64::from_str(&s).unwrap_or(f64::NAN)
}

// Exact zeros report precision 0 in astro-float; clamp so operations and
// constants stay representable.
fn op_bits(a: &BigFloat, b: &BigFloat) -> usize {
    a.precision()
        .unwrap_or(DEFAULT_BITS)
        .max(b.precision().unwrap_or(DEFAULT_BITS))
        .max(64)
}

/// Arbitrary-precision complex number. Each component carries its working
/// precision; mixed-precision operations promote to the larger one.
#[derive(Clone, PartialEq)]
pub struct BigC {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigC {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigC { re, im }
    }

    pub fn real(re: BigFloat) -> Self {
        let p = re.precision().unwrap_or(DEFAULT_BITS);
        BigC { re, im: BigFloat::from_i8(0, p) }
    }

    pub fn from_f64s(re: f64, im: f64, ctx: &PrecisionContext) -> Self {
        BigC { re: ctx.real_from_f64(re), im: ctx.real_from_f64(im) }
    }

    pub fn zero_at(ctx: &PrecisionContext) -> Self {
        BigC { re: ctx.int(0), im: ctx.int(0) }
    }

    pub fn one_at(ctx: &PrecisionContext) -> Self {
        BigC { re: ctx.int(1), im: ctx.int(0) }
    }

    pub fn i_at(ctx: &PrecisionContext) -> Self {
        BigC { re: ctx.int(0), im: ctx.int(1) }
    }

    pub fn is_finite(&self) -> bool {
        !(self.re.is_nan() || self.im.is_nan() || self.re.is_inf() || self.im.is_inf())
    }

    pub fn conj(&self) -> Self {
        BigC { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn add_c(&self, o: &Self) -> Self {
        let p = op_bits(&self.re, &o.re).max(op_bits(&self.im, &o.im));
        BigC {
            re: self.re.add(&o.re, p, RoundingMode::ToEven),
            im: self.im.add(&o.im, p, RoundingMode::ToEven),
        }
    }

    pub fn sub_c(&self, o: &Self) -> Self {
        let p = op_bits(&self.re, &o.re).max(op_bits(&self.im, &o.im));
        BigC {
            re: self.re.sub(&o.re, p, RoundingMode::ToEven),
            im: self.im.sub(&o.im, p, RoundingMode::ToEven),
        }
    }

    pub fn mul_c(&self, o: &Self) -> Self {
        let p = op_bits(&self.re, &o.re).max(op_bits(&self.im, &o.im));
        let rm = RoundingMode::ToEven;
        let ac = self.re.mul(&o.re, p, rm);
        let bd = self.im.mul(&o.im, p, rm);
        let ad = self.re.mul(&o.im, p, rm);
        let bc = self.im.mul(&o.re, p, rm);
        BigC { re: ac.sub(&bd, p, rm), im: ad.add(&bc, p, rm) }
    }

    pub fn div_c(&self, o: &Self) -> Self {
        let p = op_bits(&self.re, &o.re).max(op_bits(&self.im, &o.im));
        let rm = RoundingMode::ToEven;
        let d = o.re.mul(&o.re, p, rm).add(&o.im.mul(&o.im, p, rm), p, rm);
        let num = self.mul_c(&o.conj());
        BigC { re: num.re.div(&d, p, rm), im: num.im.div(&d, p, rm) }
    }

    pub fn neg_c(&self) -> Self {
        BigC { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn scale_bf(&self, k: &BigFloat) -> Self {
        let p = op_bits(&self.re, k);
        let rm = RoundingMode::ToEven;
        BigC { re: self.re.mul(k, p, rm), im: self.im.mul(k, p, rm) }
    }

    pub fn abs2(&self) -> BigFloat {
        let p = op_bits(&self.re, &self.im);
        let rm = RoundingMode::ToEven;
        self.re.mul(&self.re, p, rm).add(&self.im.mul(&self.im, p, rm), p, rm)
    }

    pub fn abs(&self) -> BigFloat {
        let p = op_bits(&self.re, &self.im);
        self.abs2().sqrt(p, RoundingMode::ToEven)
    }

    pub fn abs_f64(&self) -> f64 {
        to_f64(&self.abs())
    }

    pub fn powi_c(&self, n: usize) -> Self {
        let p = op_bits(&self.re, &self.im);
        let mut acc = BigC { re: BigFloat::from_i8(1, p), im: BigFloat::from_i8(0, p) };
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_c(&base);
            }
            base = base.mul_c(&base);
            e >>= 1;
        }
        acc
    }

    /// e^{re}(cos im + i sin im).
    pub fn exp_c(&self, ctx: &PrecisionContext) -> Self {
        let r = ctx.exp(&self.re);
        BigC { re: ctx.mul(&r, &ctx.cos(&self.im)), im: ctx.mul(&r, &ctx.sin(&self.im)) }
    }

    /// sin(a + bi) = sin a cosh b + i cos a sinh b.
    pub fn sin_c(&self, ctx: &PrecisionContext) -> Self {
        BigC {
            re: ctx.mul(&ctx.sin(&self.re), &ctx.cosh(&self.im)),
            im: ctx.mul(&ctx.cos(&self.re), &ctx.sinh(&self.im)),
        }
    }

    pub fn approx(&self) -> (f64, f64) {
        (to_f64(&self.re), to_f64(&self.im))
    }
}

impl fmt::Debug for BigC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.approx();
        write!(f, "BigC({re:e} + {im:e}i)")
    }
}

impl fmt::Display for BigC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, self.im.neg())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl std::ops::Add<&BigC> for BigC {
    type Output = BigC;
    fn add(self, rhs: &BigC) -> BigC {
        self.add_c(rhs)
    }
}

impl std::ops::Add for BigC {
    type Output = BigC;
    fn add(self, rhs: BigC) -> BigC {
        self.add_c(&rhs)
    }
}

impl std::ops::Sub<&BigC> for BigC {
    type Output = BigC;
    fn sub(self, rhs: &BigC) -> BigC {
        self.sub_c(rhs)
    }
}

impl std::ops::Sub for BigC {
    type Output = BigC;
    fn sub(self, rhs: BigC) -> BigC {
        self.sub_c(&rhs)
    }
}

impl std::ops::Mul<&BigC> for BigC {
    type Output = BigC;
    fn mul(self, rhs: &BigC) -> BigC {
        self.mul_c(rhs)
    }
}

impl std::ops::Mul for BigC {
    type Output = BigC;
    fn mul(self, rhs: BigC) -> BigC {
        self.mul_c(&rhs)
    }
}

impl std::ops::Neg for BigC {
    type Output = BigC;
    fn neg(self) -> BigC {
        self.neg_c()
    }
}

impl Zero for BigC {
    fn zero() -> Self {
        BigC { re: BigFloat::from_i8(0, DEFAULT_BITS), im: BigFloat::from_i8(0, DEFAULT_BITS) }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for BigC {
    fn one() -> Self {
        BigC { re: BigFloat::from_i8(1, DEFAULT_BITS), im: BigFloat::from_i8(0, DEFAULT_BITS) }
    }
}

impl Scalar for BigC {
    fn scale_rat(&self, r: &Rat) -> Self {
        let p = op_bits(&self.re, &self.im);
        let rm = RoundingMode::ToEven;
        let num = bigint_to_bf(r.numer(), p);
        let den = bigint_to_bf(r.denom(), p);
        let k = num.div(&den, p, rm);
        self.scale_bf(&k)
    }

    fn from_rat(r: &Rat) -> Self {
        let num = bigint_to_bf(r.numer(), DEFAULT_BITS);
        let den = bigint_to_bf(r.denom(), DEFAULT_BITS);
        BigC::real(num.div(&den, DEFAULT_BITS, RoundingMode::ToEven))
    }
}

fn bigint_to_bf(n: &BigInt, bits: usize) -> BigFloat {
    let mut cc = Consts::new().expect("constants cache");
    let digits = n.magnitude().to_string();
    let need = (digits.len() as f64 * LOG2_10).ceil() as usize + 8;
    let mut v = BigFloat::parse(&digits, Radix::Dec, need.max(bits), RoundingMode::ToEven, &mut cc);
    v.set_precision(bits, RoundingMode::ToEven).expect("finite integer");
    if n.is_negative() {
        v = v.neg();
    }
    v
}
