//! Named identity-verification suites. Each suite checks one of the
//! headline identities end to end and reports one line per check; the
//! acceptance test and the `verify` CLI subcommand both run these.

use std::time::Instant;

use num_traits::{One, Zero};
use crate::scalar::Scalar;

use crate::bigc::{to_f64, BigC, PrecisionContext};
use crate::comb::{egf_check, factorial, shuffle_power_coeff, stirling2};
use crate::error::{Error, Result};
use crate::harmonic::{dom_witness, hsum, hsum_poly, li_coeffs, li_over_1mz_coeffs, preimage_from_taylor};
use crate::ncalg::{
    char_stuffle_product, one_param_group, shuffle, stuffle, GradedSeries, NCPolynomial,
    PlaneSeries,
};
use crate::scalar::{rat, rat_int, PolyQ, Rat};
use crate::taylor::TaylorSeries;
use crate::words::{enumerate_y_words, pi_x, pi_y, Alphabet, Word};
use crate::zeta::{
    ell, euler_gamma, gamma_char, gamma_char_poly_coeffs, h_numeric, inv_gamma_yk, mzv,
    predicted_zeros, reflection_check, stuffle_regularize_by_solve, zeta_bigfloat, EvalMode,
    RegularizedValue,
};

/// One assertion within a suite.
#[derive(Debug, Clone)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { label: label.into(), passed, detail: detail.into() }
    }
}

/// Outcome of one named suite.
#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub criterion: &'static str,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn summary_line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        format!(
            "[{status}] {:<16} {:<52} {} checks, {} failed, {} ms",
            self.name,
            self.criterion,
            self.checks.len(),
            failed,
            self.elapsed_ms
        )
    }
}

/// Options shared by the verification suites.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Working precision for the numeric suites.
    pub digits: usize,
    /// Largest k for the ζ({2}^k) family.
    pub kmax: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { digits: 50, kmax: 6 }
    }
}

/// Suite names in canonical order, with the criterion each one gates.
pub const SUITES: &[(&str, &str)] = &[
    ("surjection-lemma", "shuffle powers of x1^+ count surjections"),
    ("quasi-shuffle", "H is a stuffle morphism at every N"),
    ("shuffle-li", "Li is a shuffle morphism on Taylor data"),
    ("hadamard-eq3", "Hadamard product realizes the stuffle on Li/(1-z)"),
    ("wi-star", "closed-form stuffle of plane-series stars"),
    ("wik-exp", "letter stars as stuffle exponentials"),
    ("group-law", "one-parameter stuffle group law"),
    ("preimage", "Taylor series pull back through Li on x1 powers"),
    ("zeta-2k", "zeta(2,...,2)/pi^2k = 1/(2k+1)!"),
    ("zeta-31", "zeta(3,1) = pi^4/360 and the 4^k sign resolution"),
    ("sin-formula", "exp(l_2(ix)) = sin(pi x)/(pi x)"),
    ("reflection", "generalized Euler reflection formula"),
    ("zeros", "zero sets of the inverse eulerian functions"),
    ("regularization", "stuffle regularization morphism and gamma character"),
    ("dom-witness", "geometric witness series matches its closed form"),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs one suite by name.
pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<SuiteResult> {
    let start = Instant::now();
    let (canonical, criterion) = SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Domain(format!("unknown suite `{name}`")))?;
    let checks = match *canonical {
        "surjection-lemma" => surjection_lemma(),
        "quasi-shuffle" => quasi_shuffle(),
        "shuffle-li" => shuffle_li(),
        "hadamard-eq3" => hadamard_eq3(),
        "wi-star" => wi_star(),
        "wik-exp" => wik_exp(),
        "group-law" => group_law(),
        "preimage" => preimage(),
        "zeta-2k" => zeta_2k(opts),
        "zeta-31" => zeta_31(opts),
        "sin-formula" => sin_formula(opts),
        "reflection" => reflection(opts),
        "zeros" => zeros(opts),
        "regularization" => regularization(opts),
        "dom-witness" => dom_witness_suite(),
        _ => unreachable!(),
    }?;
    Ok(SuiteResult { name: canonical, criterion, checks, elapsed_ms: start.elapsed().as_millis() })
}

/// Runs every suite in canonical order.
pub fn run_all(opts: &VerifyOptions) -> Result<Vec<SuiteResult>> {
    SUITES.iter().map(|(n, _)| run_suite(n, opts)).collect()
}

// Deterministic pseudo-random stream (splitmix64), fixed seed per suite so
// reports are reproducible.
struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(seed)
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    /// Nonzero rational with small numerator and denominator.
    fn rat(&mut self) -> Rat {
        let num = self.below(17) as i64 - 8;
        let num = if num == 0 { 1 } else { num };
        let den = self.below(6) as i64 + 1;
        rat(num, den)
    }

    /// Random composition of `weight`.
    fn y_word(&mut self, weight: u64) -> Word {
        let mut parts = Vec::new();
        let mut left = weight;
        while left > 0 {
            let p = self.below(left) + 1;
            parts.push(p);
            left -= p;
        }
        Word::y_word(&parts)
    }

    /// Random X-word of length ≤ `max_len` ending in x1.
    fn x_word_ending_x1(&mut self, max_len: usize) -> Word {
        let len = self.below(max_len as u64) as usize + 1;
        let mut idx: Vec<u8> = (0..len - 1).map(|_| self.below(2) as u8).collect();
        idx.push(1);
        Word::x_word(&idx)
    }

    fn complex_in_disk(&mut self, radius: f64) -> (f64, f64) {
        loop {
            let re = (self.below(2_000_001) as f64 / 1_000_000.0 - 1.0) * radius;
            let im = (self.below(2_000_001) as f64 / 1_000_000.0 - 1.0) * radius;
            if (re * re + im * im).sqrt() < radius && (re != 0.0 || im != 0.0) {
                return (re, im);
            }
        }
    }
}

// ---------------------------------------------------------------- suites

fn surjection_lemma() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut all = true;
    let mut worst = String::new();
    for m in 0..=8usize {
        for n in 0..=8usize {
            let via_shuffle = shuffle_power_coeff(m, n)?;
            let expected = factorial(m) * stirling2(n, m);
            if via_shuffle != expected {
                all = false;
                worst = format!("m={m} n={n}: {via_shuffle} != {expected}");
            }
        }
    }
    checks.push(Check::new(
        "<(x1^+)^sh m | x1^n> = m! S2(n,m) for n,m <= 8",
        all,
        if all { "81 exact coefficient matches".into() } else { worst },
    ));
    let mut egf_all = true;
    for m in 0..=8usize {
        if !egf_check(m, 20) {
            egf_all = false;
        }
    }
    checks.push(Check::new(
        "EGF: sum m! S2(n,m) x^n/n! = (e^x-1)^m to order 20",
        egf_all,
        "m <= 8, exact rational Taylor arithmetic",
    ));
    Ok(checks)
}

fn quasi_shuffle() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    // Exhaustive: all nonempty pairs with weight(u)+weight(v) <= 6, all N <= 40.
    let words = enumerate_y_words(5);
    let mut pairs = 0usize;
    let mut all = true;
    let mut worst = String::new();
    for u in &words {
        for v in &words {
            if u.is_empty() || v.is_empty() || u.weight() + v.weight() > 6 {
                continue;
            }
            pairs += 1;
            let prod = stuffle(
                &NCPolynomial::<Rat>::from_word(u.clone()),
                &NCPolynomial::<Rat>::from_word(v.clone()),
            )?;
            for n in 0..=40usize {
                if hsum_poly(&prod, n)? != hsum(u, n) * hsum(v, n) {
                    all = false;
                    worst = format!("u={u} v={v} N={n}");
                }
            }
        }
    }
    checks.push(Check::new(
        "H(u stuffle v)(N) = H(u)(N) H(v)(N), exhaustive weight <= 6, N <= 40",
        all,
        if all { format!("{pairs} pairs, exact") } else { worst },
    ));

    let mut rng = Rng::new(0x5eed_0002);
    let mut all = true;
    let mut worst = String::new();
    for _ in 0..200 {
        let total = 7 + rng.below(2);
        let wu = 1 + rng.below(total - 1);
        let u = rng.y_word(wu);
        let v = rng.y_word(total - wu);
        let prod = stuffle(
            &NCPolynomial::<Rat>::from_word(u.clone()),
            &NCPolynomial::<Rat>::from_word(v.clone()),
        )?;
        for n in [13usize, 27, 40] {
            if hsum_poly(&prod, n)? != hsum(&u, n) * hsum(&v, n) {
                all = false;
                worst = format!("u={u} v={v} N={n}");
            }
        }
    }
    checks.push(Check::new(
        "same identity on 200 random pairs of total weight 7-8",
        all,
        if all { "exact at N in {13, 27, 40}".into() } else { worst },
    ));
    Ok(checks)
}

fn random_x_poly(rng: &mut Rng) -> NCPolynomial<Rat> {
    let mut p = NCPolynomial::zero_poly(Alphabet::X);
    let terms = 2 + rng.below(2);
    for _ in 0..terms {
        p.insert_add(rng.x_word_ending_x1(3), rng.rat());
    }
    if rng.below(3) == 0 {
        p.insert_add(Word::empty(Alphabet::X), rng.rat());
    }
    p
}

fn shuffle_li() -> Result<Vec<Check>> {
    let mut rng = Rng::new(0x5eed_0003);
    let mut all = true;
    let mut worst = String::new();
    for i in 0..10 {
        let s = random_x_poly(&mut rng);
        let t = random_x_poly(&mut rng);
        let lhs = li_coeffs(&shuffle(&s, &t)?, 20)?;
        let rhs = li_coeffs(&s, 20)?.mul(&li_coeffs(&t, 20)?)?;
        if lhs != rhs {
            all = false;
            worst = format!("pair {i}: S={s} T={t}");
        }
    }
    Ok(vec![Check::new(
        "Li(S shuffle T) = Li(S)·Li(T) exactly to order 20",
        all,
        if all { "10 random polynomial pairs".into() } else { worst },
    )])
}

fn pi_x_poly(p: &NCPolynomial<Rat>) -> NCPolynomial<Rat> {
    let mut out = NCPolynomial::zero_poly(Alphabet::X);
    for (w, c) in p.terms() {
        out.insert_add(pi_x(w), c.clone());
    }
    out
}

fn pi_y_poly(p: &NCPolynomial<Rat>) -> Result<NCPolynomial<Rat>> {
    let mut out = NCPolynomial::zero_poly(Alphabet::Y);
    for (w, c) in p.terms() {
        out.insert_add(pi_y(w)?, c.clone());
    }
    Ok(out)
}

fn hadamard_eq3() -> Result<Vec<Check>> {
    let mut rng = Rng::new(0x5eed_0004);
    let mut all = true;
    let mut worst = String::new();
    for i in 0..10 {
        let s = random_x_poly(&mut rng);
        let t = random_x_poly(&mut rng);
        let ls = li_over_1mz_coeffs(&GradedSeries::from_poly(&s, 16), 20)?;
        let lt = li_over_1mz_coeffs(&GradedSeries::from_poly(&t, 16), 20)?;
        let lhs = ls.hadamard(&lt)?;
        let img = pi_x_poly(&stuffle(&pi_y_poly(&s)?, &pi_y_poly(&t)?)?);
        let rhs = li_over_1mz_coeffs(&GradedSeries::from_poly(&img, 16), 20)?;
        if lhs != rhs {
            all = false;
            worst = format!("pair {i}: S={s} T={t}");
        }
    }
    Ok(vec![Check::new(
        "Li_S/(1-z) ⊙ Li_T/(1-z) = Li_{pi_X(pi_Y(S) st pi_Y(T))}/(1-z) to order 20",
        all,
        if all { "10 random polynomial pairs, exact".into() } else { worst },
    )])
}

fn wi_star() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    // Pinned small instances of (WI).
    let a = PlaneSeries::single(1, Rat::one(), 8);
    let c = char_stuffle_product(&a, &a);
    checks.push(Check::new(
        "(y1)* stuffle (y1)* = (2 y1 + y2)*",
        c.alpha(1) == rat_int(2)
            && c.alpha(2) == Rat::one()
            && a.star(8).stuffle(&a.star(8))?.to_poly() == c.star(8).to_poly(),
        "closed form and recursive product agree at weight 8",
    ));

    let mut rng = Rng::new(0x5eed_0005);
    let mut all = true;
    let mut worst = String::new();
    for i in 0..5 {
        let a = PlaneSeries::new((0..8).map(|_| rng.rat()).collect());
        let b = PlaneSeries::new((0..8).map(|_| rng.rat()).collect());
        let closed = char_stuffle_product(&a, &b).star(8);
        let recursive = a.star(8).stuffle(&b.star(8))?;
        if closed.to_poly() != recursive.to_poly() {
            all = false;
            worst = format!("pair {i}");
        }
    }
    checks.push(Check::new(
        "A* stuffle B* = (A + B + conv)* for random plane series, weight 8",
        all,
        if all { "5 random pairs, exact rational".into() } else { worst },
    ));
    Ok(checks)
}

fn wik_exp() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let trunc = 8u64;
    for k in 1..=3u64 {
        // (z^k y_k)^* over Q[z].
        let z = PolyQ::var("z");
        let star = PlaneSeries::single(k as usize, z.pow(k as u32), trunc as usize).star(trunc);
        // exp_st( -Σ_n y_{nk} (-z^k)^n / n ), truncated at weight 8.
        let mut exponent = NCPolynomial::<PolyQ>::zero_poly(Alphabet::Y);
        let mut n = 1u64;
        while n * k <= trunc {
            let sign = if n % 2 == 1 { Rat::one() } else { rat_int(-1) };
            let coeff = z.pow((n * k) as u32).scale_rat(&(sign / rat_int(n as i64)));
            exponent.insert_add(Word::y_word(&[n * k]), coeff);
            n += 1;
        }
        let exp = GradedSeries::from_poly(&exponent, trunc).stuffle_exp(trunc)?;
        checks.push(Check::new(
            format!("(z^{k} y{k})* = exp_st(-sum y_{{{k}n}} (-z^{k})^n/n) at weight 8"),
            star.to_poly() == exp.to_poly(),
            "exact equality of Q[z] coefficients",
        ));
    }
    Ok(checks)
}

fn group_law() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let trunc = 6u64;
    for (label, coeffs) in [
        ("T = q", vec![Rat::zero(), Rat::one()]),
        (
            "T = q + q^2/2 - q^3/3 + q^5/5",
            vec![Rat::zero(), Rat::one(), rat(1, 2), rat(-1, 3), Rat::zero(), rat(1, 5)],
        ),
    ] {
        let mut padded = coeffs.clone();
        while padded.len() < trunc as usize + 1 {
            padded.push(Rat::zero());
        }
        let t = TaylorSeries::from_coeffs("q", padded);
        let z1 = rat(1, 3);
        let z2 = rat(1, 5);
        let g1 = one_param_group(&t, &z1, trunc)?;
        let g2 = one_param_group(&t, &z2, trunc)?;
        let sum = one_param_group(&t, &(z1.clone() + z2.clone()), trunc)?;
        let ok = g1.stuffle(&g2)?.to_poly() == sum.to_poly()
            && one_param_group(&t, &Rat::zero(), trunc)?.to_poly()
                == NCPolynomial::one_poly(Alphabet::Y);
        checks.push(Check::new(
            format!("G(1/3) stuffle G(1/5) = G(8/15), {label}"),
            ok,
            "exact rational, weight 6",
        ));
    }
    Ok(checks)
}

fn preimage() -> Result<Vec<Check>> {
    let mut rng = Rng::new(0x5eed_0006);
    let mut all = true;
    let mut worst = String::new();
    for i in 0..10 {
        let coeffs: Vec<Rat> = (0..=10).map(|_| if rng.below(4) == 0 { Rat::zero() } else { rng.rat() }).collect();
        let t = TaylorSeries::from_coeffs("z", coeffs);
        let s = preimage_from_taylor(&t, 12);
        let li = li_coeffs(&s.to_poly(), 10)?;
        for n in 0..=10usize {
            if li.coeff(n) != t.coeff(n) {
                all = false;
                worst = format!("poly {i}, order {n}");
            }
        }
    }
    Ok(vec![Check::new(
        "Li(preimage(T, 12)) = T exactly to order 10",
        all,
        if all { "10 random degree-10 rational polynomials".into() } else { worst },
    )])
}

fn zeta_2k(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let ctx = PrecisionContext::new(opts.digits.max(50));
    let kmax = opts.kmax.max(1);
    // (-z^2 y2)^* truncated at weight 2 kmax, coefficients in Q[z].
    let z = PolyQ::var("z");
    let alpha = z.pow(2).scale_rat(&rat_int(-1));
    let star = PlaneSeries::single(2, alpha, 2 * kmax).star(2 * kmax as u64);
    let coeffs = gamma_char_poly_coeffs(&star, "z", &ctx)?;
    let mut checks = Vec::new();
    for k in 1..=kmax {
        let c = &coeffs[2 * k];
        // coefficient of z^{2k} is (-1)^k zeta({2}^k)
        let zeta_2k = if k % 2 == 0 { c.value.re.clone() } else { c.value.re.neg() };
        let pi_pow = ctx.powi(&ctx.pi(), 2 * k);
        let ratio = ctx.div(&zeta_2k, &pi_pow);
        let expected = ctx.real_from_rat(&Rat::new(1.into(), factorial(2 * k + 1).into()));
        let diff = to_f64(&ctx.sub(&ratio, &expected)).abs();
        checks.push(Check::new(
            format!("zeta({{2}}^{k})/pi^{} = 1/{}!", 2 * k, 2 * k + 1),
            diff < 1e-30,
            format!("|diff| = {diff:.2e} at {} digits", ctx.digits()),
        ));
    }
    Ok(checks)
}

fn zeta_31(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let ctx = PrecisionContext::new(opts.digits.max(30));
    let v = mzv(&Word::y_word(&[3, 1]), &ctx)?;
    let pi4 = ctx.powi(&ctx.pi(), 4);
    let target = ctx.div(&pi4, &ctx.int(360));
    let diff = to_f64(&ctx.sub(&v.value.re, &target)).abs();
    let mut checks = vec![Check::new(
        "mzv(y3 y1) = pi^4/360",
        diff < 1e-6,
        format!("|diff| = {diff:.2e}, reported bound {:.2e}", v.error_bound),
    )];

    // Resolution of the 4^{±k} discrepancy at k = 1:
    // zeta(3,1) = 4^{-1} zeta(4) holds; 4^{+1} zeta(4) does not.
    let z4 = zeta_bigfloat(4, &ctx);
    let minus = to_f64(&ctx.sub(&v.value.re, &ctx.div(&z4, &ctx.int(4)))).abs();
    let plus = to_f64(&ctx.sub(&v.value.re, &ctx.mul(&z4, &ctx.int(4)))).abs();
    checks.push(Check::new(
        "exponent sign: zeta(3,1) = 4^{-1} zeta(4), not 4^{+1} zeta(4)",
        minus < 1e-6 && plus > 1e-2,
        format!("|diff to 4^-1 zeta(4)| = {minus:.2e}, |diff to 4^+1 zeta(4)| = {plus:.2e}"),
    ));
    Ok(checks)
}

fn sin_formula(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let ctx = PrecisionContext::new(opts.digits.max(50));
    let mut sup = 0.0f64;
    let mut at = 0.0f64;
    for j in 0..50 {
        let x = -0.9 + 1.8 * (j as f64) / 49.0;
        let xb = ctx.real_from_f64(x);
        let z = BigC::new(ctx.int(0), xb.clone());
        let l2 = ell(2, &z, &ctx, None)?;
        let lhs = l2.value.exp_c(&ctx);
        let pix = ctx.mul(&ctx.pi(), &xb);
        let rhs = ctx.div(&ctx.sin(&pix), &pix);
        let d = lhs.sub_c(&BigC::real(rhs)).abs_f64();
        if d > sup {
            sup = d;
            at = x;
        }
    }
    Ok(vec![Check::new(
        "sup |exp(l_2(ix)) - sin(pi x)/(pi x)| on 50-point grid, |x| <= 0.9",
        sup < 1e-20,
        format!("sup = {sup:.2e} at x = {at:.3}, {} digits", ctx.digits()),
    )])
}

fn reflection(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let ctx = PrecisionContext::new(opts.digits.max(50));
    let mut checks = Vec::new();
    let mut rng = Rng::new(0x5eed_0010);
    for r in 1..=3u64 {
        let mut worst = 0.0f64;
        let mut poles = 0usize;
        for _ in 0..20 {
            let (re, im) = rng.complex_in_disk(0.8);
            let z = BigC::from_f64s(re, im, &ctx);
            let rep = reflection_check(r, &z, &ctx)?;
            if rep.pole_hit.is_some() {
                poles += 1;
                continue;
            }
            worst = worst.max(rep.difference);
        }
        checks.push(Check::new(
            format!("Gamma_{{y{}}}(1+z) = Gamma_{{y{r}}}(1+rho z) Gamma_{{y{r}}}(1+rho xi z)", 2 * r),
            worst < 1e-15 && poles == 0,
            format!("20 pseudo-random |z| < 0.8, max |lhs-rhs| = {worst:.2e}"),
        ));
    }
    // r = 1 reduces to the classical Euler reflection:
    // Gamma(1+iz) Gamma(1-iz) = i z pi / sin(i z pi).
    let mut worst = 0.0f64;
    let mut rng = Rng::new(0x5eed_0011);
    for _ in 0..20 {
        let (re, im) = rng.complex_in_disk(0.8);
        let z = BigC::from_f64s(re, im, &ctx);
        let lhs = BigC::one_at(&ctx).div_c(&inv_gamma_yk(2, &z, &ctx, EvalMode::Product)?.value);
        let izpi = BigC::i_at(&ctx).mul_c(&z).scale_bf(&ctx.pi());
        let rhs = izpi.div_c(&izpi.sin_c(&ctx));
        worst = worst.max(lhs.sub_c(&rhs).abs_f64());
    }
    checks.push(Check::new(
        "r = 1 reduces to classical Euler reflection",
        worst < 1e-15,
        format!("max |Gamma_{{y2}}(1+z) - izpi/sin(izpi)| = {worst:.2e}"),
    ));
    Ok(checks)
}

fn zeros(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let ctx = PrecisionContext::new(opts.digits.max(50));
    let mut checks = Vec::new();
    for r in 1..=3u64 {
        let zeros = predicted_zeros(r, 3.2, &ctx);
        let mut worst_zero = 0.0f64;
        let mut worst_ctrl = f64::INFINITY;
        for p in &zeros {
            let v = inv_gamma_yk(r, p, &ctx, EvalMode::Product)?;
            worst_zero = worst_zero.max(v.value.abs_f64());
            let shifted = p.add_c(&BigC::from_f64s(0.3, 0.0, &ctx));
            let c = inv_gamma_yk(r, &shifted, &ctx, EvalMode::Product)?;
            worst_ctrl = worst_ctrl.min(c.value.abs_f64());
        }
        checks.push(Check::new(
            format!("inverse Gamma_{{y{r}}} vanishes exactly on G_{r}·Z_{{<=-1}}, |p| <= 3.2"),
            worst_zero < 1e-20 && worst_ctrl >= 0.01,
            format!(
                "{} zeros: max |value| = {worst_zero:.2e}; control points min |value| = {worst_ctrl:.2e}",
                zeros.len()
            ),
        ));
    }
    Ok(checks)
}

fn regularization(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    // Exhaustive morphism property through the solver, weights <= 5.
    let words = enumerate_y_words(4);
    let mut pairs = 0usize;
    let mut all = true;
    let mut worst = String::new();
    for u in &words {
        for v in &words {
            if u.is_empty() || v.is_empty() || u.weight() + v.weight() > 5 {
                continue;
            }
            pairs += 1;
            let prod = stuffle(
                &NCPolynomial::<Rat>::from_word(u.clone()),
                &NCPolynomial::<Rat>::from_word(v.clone()),
            )?;
            let mut lhs = RegularizedValue::one().scale_rat(&Rat::zero());
            for (w, c) in prod.terms() {
                lhs = lhs.add(&stuffle_regularize_by_solve(w).scale_rat(c));
            }
            let rhs = stuffle_regularize_by_solve(u).stuffle_mul(&stuffle_regularize_by_solve(v));
            if lhs != rhs {
                all = false;
                worst = format!("u={u} v={v}");
            }
        }
    }
    checks.push(Check::new(
        "regularization is a stuffle morphism, exhaustive weight <= 5",
        all,
        if all { format!("{pairs} pairs, exact") } else { worst },
    ));

    // Fixed points and g-powers.
    let mut fixed = true;
    for w in enumerate_y_words(5) {
        if w.is_empty() || !crate::words::is_convergent(&w) {
            continue;
        }
        if stuffle_regularize_by_solve(&w) != RegularizedValue::from_convergent(&w) {
            fixed = false;
        }
    }
    let y1 = NCPolynomial::<Rat>::from_word(Word::y_word(&[1]));
    let mut pow = NCPolynomial::<Rat>::one_poly(Alphabet::Y);
    let mut gpow = true;
    for k in 1..=5usize {
        pow = stuffle(&pow, &y1)?;
        let mut r = RegularizedValue::one().scale_rat(&Rat::zero());
        for (w, c) in pow.terms() {
            r = r.add(&stuffle_regularize_by_solve(w).scale_rat(c));
        }
        gpow &= r.degree() == k
            && r.part(k) == NCPolynomial::one_poly(Alphabet::Y)
            && (0..k).all(|j| r.part(j).is_zero_poly());
    }
    checks.push(Check::new(
        "solver fixes convergent words and sends y1^{st k} to g^k",
        fixed && gpow,
        "weights <= 5, exact",
    ));

    // gamma_char(y1 y1) against the asymptotic-fit oracle on H_{1,1}(N).
    let ctx = PrecisionContext::new(opts.digits.max(30));
    let char_val = gamma_char(&NCPolynomial::from_word(Word::y_word(&[1, 1])), &ctx)?;
    let gamma = to_f64(&euler_gamma(&ctx));
    let fit = |n: usize| -> f64 {
        let h11 = h_numeric(&Word::y_word(&[1, 1]), n);
        let l = (n as f64).ln() + gamma;
        let nf = n as f64;
        // H_{1,1}(N) = L^2/2 - zeta(2)/2 + (L+1)/(2N) - (L/6 + 1/4)/(2N^2) + O(L/N^3)
        h11 - l * l / 2.0 - (l + 1.0) / (2.0 * nf) + (l / 6.0 + 0.25) / (2.0 * nf * nf)
    };
    let lim_a = fit(100_000);
    let lim_b = fit(50_000);
    let oracle = gamma * gamma / 2.0 + lim_a;
    let diff = (char_val.value.approx().0 - oracle).abs();
    checks.push(Check::new(
        "gamma_char(y1 y1) = (gamma^2 - zeta(2))/2 vs asymptotic fit of H_{1,1}",
        diff < 1e-8 && (lim_a - lim_b).abs() < 1e-10,
        format!("|char - fit| = {diff:.2e}, fit stability {:.2e}", (lim_a - lim_b).abs()),
    ));
    Ok(checks)
}

fn dom_witness_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for t in [rat(1, 2), rat_int(1), rat_int(2)] {
        let w = dom_witness(&t, 12, 12)?;
        let li = li_coeffs(&w.series.to_poly(), 12)?;
        let ok = (0..=12).all(|n| li.coeff(n) == w.closed_form.coeff(n));
        checks.push(Check::new(
            format!("Li(S({t})) = (1-z)/(1-({t}+1)z) to order 12"),
            ok,
            "exact rational coefficients, word length cap 12",
        ));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suites_pass() {
        let opts = VerifyOptions::default();
        for name in ["surjection-lemma", "wi-star", "wik-exp", "group-law", "dom-witness"] {
            let r = run_suite(name, &opts).unwrap();
            assert!(r.passed(), "{}", r.summary_line());
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("no-such-suite", &VerifyOptions::default()).is_err());
    }
}
