//! Stuffle regularization and the γ-character.
//!
//! Every Y-word decomposes uniquely in the basis {y1^{⊎k} ⊎ u : u
//! convergent}; the decomposition is found by a weight-homogeneous exact
//! linear solve (one matrix inversion per weight, cached). Writing g for
//! the class of y1, the result is a polynomial in g with convergent-word
//! coefficients. Specializing g ↦ γ and convergent words to their
//! polyzetas yields the stuffle character γ_• with γ_{y1} = γ and
//! γ_{y_n} = ζ(n) for n ≥ 2.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use astro_float::BigFloat;
use num_traits::{One, Zero};

use crate::bigc::{to_f64, BigC, PrecisionContext};
use crate::error::{Error, Result};
use crate::ncalg::{stuffle, GradedSeries, NCPolynomial};
use crate::scalar::{PolyQ, Rat};
use crate::words::{is_convergent, y_words_of_weight, Alphabet, Word};

use super::consts::{euler_gamma, zeta_bigfloat, CharacterValue};
use super::mzv::mzv;

/// A polynomial in the symbol g (the regularized y1) whose coefficients
/// are rational combinations of convergent Y-words.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularizedValue {
    parts: Vec<NCPolynomial<Rat>>,
}

impl RegularizedValue {
    fn new(parts: Vec<NCPolynomial<Rat>>) -> Self {
        let mut v = RegularizedValue { parts };
        v.trim();
        debug_assert!(v.parts.iter().all(|p| p.terms().all(|(w, _)| is_convergent(w))));
        v
    }

    pub fn from_convergent(w: &Word) -> Self {
        assert!(is_convergent(w));
        RegularizedValue { parts: vec![NCPolynomial::from_word(w.clone())] }
    }

    pub fn one() -> Self {
        RegularizedValue { parts: vec![NCPolynomial::one_poly(Alphabet::Y)] }
    }

    fn trim(&mut self) {
        while self.parts.len() > 1 && self.parts.last().unwrap().is_zero_poly() {
            self.parts.pop();
        }
    }

    /// Degree in g.
    pub fn degree(&self) -> usize {
        self.parts.len() - 1
    }

    /// Coefficient of g^k (zero polynomial above the degree).
    pub fn part(&self, k: usize) -> NCPolynomial<Rat> {
        self.parts.get(k).cloned().unwrap_or_else(|| NCPolynomial::zero_poly(Alphabet::Y))
    }

    pub fn parts(&self) -> &[NCPolynomial<Rat>] {
        &self.parts
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.parts.len().max(other.parts.len());
        let mut parts = Vec::with_capacity(len);
        for k in 0..len {
            parts.push(self.part(k).add(&other.part(k)).expect("Y alphabet"));
        }
        RegularizedValue::new(parts)
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        RegularizedValue::new(self.parts.iter().map(|p| p.scale_rat(r)).collect())
    }

    /// Product in ℚ^{conv}⟨Y⟩\[g\]: polynomial multiplication in g with
    /// stuffle on the word coefficients.
    pub fn stuffle_mul(&self, other: &Self) -> Self {
        let deg = self.degree() + other.degree();
        let mut parts = vec![NCPolynomial::zero_poly(Alphabet::Y); deg + 1];
        for (i, a) in self.parts.iter().enumerate() {
            if a.is_zero_poly() {
                continue;
            }
            for (j, b) in other.parts.iter().enumerate() {
                if b.is_zero_poly() {
                    continue;
                }
                let prod = stuffle(a, b).expect("Y alphabet");
                parts[i + j] = parts[i + j].add(&prod).expect("Y alphabet");
            }
        }
        RegularizedValue::new(parts)
    }
}

impl fmt::Display for RegularizedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, p) in self.parts.iter().enumerate() {
            if p.is_zero_poly() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{p}")?,
                1 => write!(f, "g*({p})")?,
                _ => write!(f, "g^{k}*({p})")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Precomputed decomposition data for one weight: the word basis and the
/// inverse of the matrix whose columns are y1^{⊎k} ⊎ u in that basis.
struct WeightBasis {
    index: HashMap<Word, usize>,
    columns: Vec<(usize, Word)>,
    inverse: Vec<Vec<Rat>>,
}

static BASIS_CACHE: Mutex<Option<HashMap<u64, Arc<WeightBasis>>>> = Mutex::new(None);

fn weight_basis(weight: u64) -> Arc<WeightBasis> {
    {
        let guard = BASIS_CACHE.lock().unwrap();
        if let Some(b) = guard.as_ref().and_then(|m| m.get(&weight)) {
            return b.clone();
        }
    }
    let words = y_words_of_weight(weight);
    let n = words.len();
    let index: HashMap<Word, usize> =
        words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();

    let mut columns = Vec::new();
    let mut matrix: Vec<Vec<Rat>> = Vec::new();
    let y1 = NCPolynomial::<Rat>::from_word(Word::y_word(&[1]));
    let mut y1_pow = NCPolynomial::<Rat>::one_poly(Alphabet::Y);
    for k in 0..=weight {
        if k > 0 {
            y1_pow = stuffle(&y1_pow, &y1).expect("Y alphabet");
        }
        for u in y_words_of_weight(weight - k) {
            if !is_convergent(&u) {
                continue;
            }
            let col_poly = stuffle(&y1_pow, &NCPolynomial::from_word(u.clone())).expect("Y");
            let mut col = vec![Rat::zero(); n];
            for (w, c) in col_poly.terms() {
                col[index[w]] = c.clone();
            }
            columns.push((k as usize, u));
            matrix.push(col);
        }
    }
    assert_eq!(columns.len(), n, "regularization basis must be square at weight {weight}");
    let inverse = invert_rational(&matrix, n);

    let basis = Arc::new(WeightBasis { index, columns, inverse });
    let mut guard = BASIS_CACHE.lock().unwrap();
    guard.get_or_insert_with(HashMap::new).insert(weight, basis.clone());
    basis
}

/// Gauss-Jordan inverse of a column-major exact rational matrix. The
/// regularization matrix is provably invertible; a vanishing pivot here is
/// a bug, not an input condition.
fn invert_rational(cols: &[Vec<Rat>], n: usize) -> Vec<Vec<Rat>> {
    // a[i][j] = entry in row i, column j; augmented with the identity.
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = (0..n).map(|j| cols[j][i].clone()).collect();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("regularization system is nonsingular");
        a.swap(col, pivot);
        let inv = a[col][col].clone().recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            let pivot_row = a[col].clone();
            for (x, p) in a[r].iter_mut().zip(pivot_row.iter()) {
                *x -= p * &factor;
            }
        }
    }
    // x[j][i] = (M^{-1})_{ji}
    (0..n).map(|j| (0..n).map(|i| a[j][n + i].clone()).collect()).collect()
}

/// Decomposes `w` by the weight-homogeneous linear solve, with no
/// convergent-word shortcut. Exposed so the verification suites can check
/// that the solver fixes convergent words.
pub fn stuffle_regularize_by_solve(w: &Word) -> RegularizedValue {
    assert_eq!(w.alphabet(), Alphabet::Y);
    let weight = w.weight();
    if weight == 0 {
        return RegularizedValue::one();
    }
    let basis = weight_basis(weight);
    let row = basis.index[w];
    let mut parts: Vec<NCPolynomial<Rat>> =
        vec![NCPolynomial::zero_poly(Alphabet::Y); weight as usize + 1];
    for (j, (k, u)) in basis.columns.iter().enumerate() {
        let x = basis.inverse[j][row].clone();
        parts[*k].insert_add(u.clone(), x);
    }
    RegularizedValue::new(parts)
}

/// The regularization map: fixes convergent words, sends y1 to g, and is a
/// ⊎-morphism. Convergent words are fixed points of the solve, so they are
/// returned directly above the exhaustively verified weights.
pub fn stuffle_regularize(w: &Word) -> RegularizedValue {
    assert_eq!(w.alphabet(), Alphabet::Y);
    if w.is_empty() {
        return RegularizedValue::one();
    }
    if is_convergent(w) && w.weight() > 6 {
        return RegularizedValue::from_convergent(w);
    }
    stuffle_regularize_by_solve(w)
}

/// Linear extension of regularization to polynomials.
pub fn stuffle_regularize_poly(p: &NCPolynomial<Rat>) -> Result<RegularizedValue> {
    if p.alphabet() != Alphabet::Y {
        return Err(Error::AlphabetMismatch { expected: Alphabet::Y, found: p.alphabet() });
    }
    let mut acc = RegularizedValue { parts: vec![NCPolynomial::zero_poly(Alphabet::Y)] };
    for (w, c) in p.terms() {
        acc = acc.add(&stuffle_regularize(w).scale_rat(c));
    }
    Ok(acc)
}

/// ζ({s}^k) = γ(y_s^k) through Newton's identity in the stuffle algebra:
/// k·γ(y_s^k) = Σ_{i=1}^{k} (-1)^{i-1} γ(y_s^{k-i}) ζ(is). Only high
/// precision zeta values enter, so the result carries full precision.
pub fn zeta_equal_letter(s: u64, k: usize, ctx: &PrecisionContext) -> BigFloat {
    assert!(s >= 2, "equal-letter route requires a convergent letter");
    let mut e: Vec<BigFloat> = vec![ctx.int(1)];
    for kk in 1..=k {
        let mut acc = ctx.int(0);
        for i in 1..=kk {
            let p = zeta_bigfloat(i as u64 * s, ctx);
            let term = ctx.mul(&p, &e[kk - i]);
            acc = if i % 2 == 1 { ctx.add(&acc, &term) } else { ctx.sub(&acc, &term) };
        }
        e.push(ctx.div(&acc, &ctx.int(kk as i64)));
    }
    e[k].clone()
}

fn all_letters_equal(w: &Word) -> Option<(u64, usize)> {
    let first = w.first()?;
    if w.indices().iter().all(|&s| s == first) {
        Some((first, w.len()))
    } else {
        None
    }
}

/// Numeric value of a convergent word: exact-route zeta values where the
/// structure allows it, the nested-summation oracle otherwise.
fn convergent_value(w: &Word, ctx: &PrecisionContext) -> Result<(BigFloat, f64)> {
    if w.is_empty() {
        return Ok((ctx.int(1), 0.0));
    }
    let eps = 10f64.powi(-(ctx.digits() as i32) + 2);
    if w.len() == 1 {
        let v = zeta_bigfloat(w.first().unwrap(), ctx);
        let err = eps * to_f64(&v).abs().max(1.0);
        return Ok((v, err));
    }
    if let Some((s, k)) = all_letters_equal(w) {
        let v = zeta_equal_letter(s, k, ctx);
        let err = eps * (k as f64 + 1.0) * to_f64(&v).abs().max(1.0);
        return Ok((v, err));
    }
    let cv = mzv(w, ctx)?;
    Ok((cv.value.re, cv.error_bound))
}

type CharCache = HashMap<(Word, usize), (BigFloat, f64)>;

static CHAR_CACHE: Mutex<Option<CharCache>> = Mutex::new(None);

/// γ_w for a single word, cached per precision.
fn gamma_char_word(w: &Word, ctx: &PrecisionContext) -> Result<(BigFloat, f64)> {
    let key = (w.clone(), ctx.bits());
    {
        let guard = CHAR_CACHE.lock().unwrap();
        if let Some(v) = guard.as_ref().and_then(|m| m.get(&key)) {
            return Ok(v.clone());
        }
    }
    let rv = stuffle_regularize(w);
    let gamma = euler_gamma(ctx);
    let gamma_f = to_f64(&gamma).abs();
    let mut value = ctx.int(0);
    let mut err = 0.0f64;
    let mut gamma_pow = ctx.int(1);
    for (k, part) in rv.parts().iter().enumerate() {
        if k > 0 {
            gamma_pow = ctx.mul(&gamma_pow, &gamma);
        }
        if part.is_zero_poly() {
            continue;
        }
        let mut part_val = ctx.int(0);
        let mut part_err = 0.0f64;
        for (u, c) in part.terms() {
            let (uv, uerr) = convergent_value(u, ctx)?;
            let cf = ctx.real_from_rat(c);
            part_val = ctx.add(&part_val, &ctx.mul(&cf, &uv));
            part_err += to_f64(&cf).abs() * uerr;
        }
        value = ctx.add(&value, &ctx.mul(&gamma_pow, &part_val));
        err += gamma_f.powi(k as i32) * part_err;
    }
    // Representation error of γ and the working precision itself.
    err += 10f64.powi(-(ctx.digits() as i32) + 2) * (1.0 + to_f64(&value).abs());
    let out = (value, err);
    let mut guard = CHAR_CACHE.lock().unwrap();
    guard.get_or_insert_with(HashMap::new).insert(key, out.clone());
    Ok(out)
}

/// The character γ_•: linear extension over a polynomial, with g ↦ γ and
/// convergent words sent to numeric polyzetas.
pub fn gamma_char(p: &NCPolynomial<Rat>, ctx: &PrecisionContext) -> Result<CharacterValue> {
    if p.alphabet() != Alphabet::Y {
        return Err(Error::AlphabetMismatch { expected: Alphabet::Y, found: p.alphabet() });
    }
    let mut value = ctx.int(0);
    let mut err = 0.0f64;
    for (w, c) in p.terms() {
        let (wv, werr) = gamma_char_word(w, ctx)?;
        let cf = ctx.real_from_rat(c);
        value = ctx.add(&value, &ctx.mul(&cf, &wv));
        err += to_f64(&cf).abs() * werr;
    }
    Ok(CharacterValue { value: BigC::real(value), error_bound: err })
}

fn poly_eval_bigc(p: &PolyQ, env: &BTreeMap<String, BigC>, ctx: &PrecisionContext) -> BigC {
    let mut acc = BigC::zero_at(ctx);
    for (m, c) in p.terms() {
        let mut term = BigC::real(ctx.real_from_rat(c));
        for (v, e) in m.exponents() {
            let x = env.get(v).unwrap_or_else(|| panic!("no value for parameter `{v}`"));
            term = term.mul_c(&x.powi_c(e as usize));
        }
        acc = acc.add_c(&term);
    }
    acc
}

/// γ̂ on a weight-truncated series with ℚ\[z\] coefficients, evaluated at
/// z = z0 with |z0| < 1: Σ_{n ≤ W} γ(\[S\]_n)(z0), plus a geometric estimate
/// of the discarded tail from the magnitudes of the last two homogeneous
/// contributions.
pub fn gamma_char_hat(
    s: &GradedSeries<PolyQ>,
    z0: &BigC,
    ctx: &PrecisionContext,
) -> Result<CharacterValue> {
    if s.alphabet() != Alphabet::Y {
        return Err(Error::AlphabetMismatch { expected: Alphabet::Y, found: s.alphabet() });
    }
    if to_f64(&z0.abs()) >= 1.0 {
        return Err(Error::Domain("gamma_char_hat requires |z0| < 1".into()));
    }
    let vars: Vec<String> = s
        .terms()
        .flat_map(|(_, p)| p.variables())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let env: BTreeMap<String, BigC> = vars.into_iter().map(|v| (v, z0.clone())).collect();

    let w_max = s.truncation();
    let mut value = BigC::zero_at(ctx);
    let mut err = 0.0f64;
    let mut component_mags = vec![0.0f64; w_max as usize + 1];
    for (w, poly) in s.terms() {
        let coeff = poly_eval_bigc(poly, &env, ctx);
        if coeff.is_zero() {
            continue;
        }
        let (wv, werr) = gamma_char_word(w, ctx)?;
        let term = coeff.scale_bf(&wv);
        component_mags[w.weight() as usize] += term.abs_f64();
        value = value.add_c(&term);
        err += coeff.abs_f64() * werr;
    }
    if s.is_truncated() {
        // Geometric extrapolation from the last two nonzero homogeneous
        // contributions (per weight step), capped away from 1.
        let nonzero: Vec<(usize, f64)> = component_mags
            .iter()
            .enumerate()
            .filter(|(n, m)| *n > 0 && **m > 0.0)
            .map(|(n, m)| (n, *m))
            .collect();
        err += match nonzero.as_slice() {
            [] => 0.0,
            [(_, only)] => *only,
            [.., (na, ma), (nb, mb)] => {
                let per_step = (mb / ma).powf(1.0 / (nb - na) as f64).min(0.95);
                mb * per_step / (1.0 - per_step)
            }
        };
    }
    Ok(CharacterValue { value, error_bound: err })
}

/// Coefficients (in one named parameter) of γ̂ applied to a series over
/// ℚ\[z\]: entry j is Σ_w \[z^j\](coeff of w) · γ_w.
pub fn gamma_char_poly_coeffs(
    s: &GradedSeries<PolyQ>,
    var: &str,
    ctx: &PrecisionContext,
) -> Result<Vec<CharacterValue>> {
    let mut degree = 0usize;
    for (_, p) in s.terms() {
        degree = degree.max(p.degree() as usize);
    }
    let mut values = vec![ctx.int(0); degree + 1];
    let mut errs = vec![0.0f64; degree + 1];
    for (w, poly) in s.terms() {
        let (wv, werr) = gamma_char_word(w, ctx)?;
        for (m, c) in poly.terms() {
            let j = m.degree() as usize;
            debug_assert!(
                m.exponents().all(|(v, _)| v == var),
                "series coefficients must be polynomials in `{var}`"
            );
            let cf = ctx.real_from_rat(c);
            values[j] = ctx.add(&values[j], &ctx.mul(&cf, &wv));
            errs[j] += to_f64(&cf).abs() * werr;
        }
    }
    Ok(values
        .into_iter()
        .zip(errs)
        .map(|(v, e)| CharacterValue { value: BigC::real(v), error_bound: e })
        .collect())
}
