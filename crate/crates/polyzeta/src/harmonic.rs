//! Exact harmonic sums H_w(N), Taylor coefficients of polylogarithms at 0,
//! the Li_S/(1-z) coefficient correspondence, and the preimage construction
//! mapping a Taylor series to a shuffle series supported on powers of x1.
//!
//! H is the primitive local object: the N-th Taylor coefficient of
//! Li_w/(1-z) is H_{π_Y(w)}(N), and Li coefficients are recovered as
//! first differences. Keeping everything routed through one table makes the
//! quasi-shuffle identities exactly checkable.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::comb::stirling2;
use crate::error::{Error, Result};
use crate::ncalg::{GradedSeries, NCPolynomial};
use crate::scalar::Rat;
use crate::taylor::TaylorSeries;
use crate::words::{pi_y, Alphabet, Word};

/// Values H_w(0..=N) for one word, exact.
#[derive(Debug, Clone)]
pub struct HarmonicTable {
    pub word: Word,
    pub values: Vec<Rat>,
}

impl HarmonicTable {
    /// Writes `N,value` CSV rows.
    pub fn to_csv<W: std::io::Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "N,value")?;
        for (n, v) in self.values.iter().enumerate() {
            writeln!(out, "{n},{v}")?;
        }
        Ok(())
    }
}

/// Concurrent-safe memo of suffix tables. Inserts are idempotent: the
/// computed values are deterministic, so racing writers agree.
#[derive(Debug, Default)]
pub struct HarmonicCache {
    tables: Mutex<HashMap<Word, Arc<Vec<Rat>>>>,
}

impl HarmonicCache {
    pub fn new() -> Self {
        HarmonicCache::default()
    }

    /// H_w(0..=n). The table is built by peeling letters from the right:
    /// H_{y_s v}(N) = Σ_{m=1}^{N} m^{-s} H_v(m-1), evaluated triangularly,
    /// and every suffix table is cached along the way.
    pub fn table(&self, w: &Word, n: usize) -> Arc<Vec<Rat>> {
        assert_eq!(w.alphabet(), Alphabet::Y, "harmonic sums index Y-words");
        {
            let guard = self.tables.lock().unwrap();
            if let Some(t) = guard.get(w) {
                if t.len() > n {
                    return t.clone();
                }
            }
        }
        // Build (or extend) the suffix chain without holding the lock.
        let indices = w.indices().to_vec();
        let mut suffix = Word::empty(Alphabet::Y);
        let mut table: Arc<Vec<Rat>> = Arc::new(vec![Rat::one(); n + 1]);
        self.store(suffix.clone(), table.clone());
        for pos in (0..indices.len()).rev() {
            suffix = suffix.prepend(indices[pos]);
            let cached = {
                let guard = self.tables.lock().unwrap();
                guard.get(&suffix).filter(|t| t.len() > n).cloned()
            };
            if let Some(t) = cached {
                table = t;
                continue;
            }
            let s = indices[pos];
            let mut vals = Vec::with_capacity(n + 1);
            vals.push(Rat::zero());
            for m in 1..=n {
                let pw = Rat::new(BigInt::one(), BigInt::from(m).pow(s as u32));
                let v = &vals[m - 1] + pw * &table[m - 1];
                vals.push(v);
            }
            table = Arc::new(vals);
            self.store(suffix.clone(), table.clone());
        }
        table
    }

    fn store(&self, w: Word, t: Arc<Vec<Rat>>) {
        let mut guard = self.tables.lock().unwrap();
        match guard.get(&w) {
            Some(existing) if existing.len() >= t.len() => {}
            _ => {
                guard.insert(w, t);
            }
        }
    }

    pub fn harmonic_table(&self, w: &Word, n: usize) -> HarmonicTable {
        let t = self.table(w, n);
        HarmonicTable { word: w.clone(), values: t[..=n].to_vec() }
    }
}

fn global_cache() -> &'static HarmonicCache {
    static CACHE: OnceLock<HarmonicCache> = OnceLock::new();
    CACHE.get_or_init(HarmonicCache::new)
}

/// H_w(N) = Σ_{N ≥ n1 > ... > nr > 0} Π n_i^{-s_i}, exact.
pub fn hsum(w: &Word, n: usize) -> Rat {
    global_cache().table(w, n)[n].clone()
}

/// Linear extension of H to polynomials over Y.
pub fn hsum_poly(p: &NCPolynomial<Rat>, n: usize) -> Result<Rat> {
    if p.alphabet() != Alphabet::Y {
        return Err(Error::AlphabetMismatch { expected: Alphabet::Y, found: p.alphabet() });
    }
    let mut acc = Rat::zero();
    for (w, c) in p.terms() {
        acc += c * hsum(w, n);
    }
    Ok(acc)
}

/// Brute-force oracle: direct evaluation of the defining nested sum by
/// enumerating decreasing tuples N ≥ n1 > ... > nr > 0. Guarded, since the
/// tuple count is C(N, r).
pub fn hsum_oracle(w: &Word, n: usize) -> Result<Rat> {
    assert_eq!(w.alphabet(), Alphabet::Y);
    let r = w.len();
    let tuples = binomial_approx(n, r);
    if tuples > 20_000_000.0 {
        return Err(Error::Domain(format!(
            "hsum_oracle guard: C({n}, {r}) too large for direct enumeration"
        )));
    }
    let idx = w.indices().to_vec();
    fn rec(idx: &[u64], level: usize, max: usize, acc: &Rat, total: &mut Rat) {
        if level == idx.len() {
            *total += acc;
            return;
        }
        for m in (idx.len() - level..=max).rev() {
            let term = acc * Rat::new(BigInt::one(), BigInt::from(m).pow(idx[level] as u32));
            rec(idx, level + 1, m - 1, &term, total);
        }
    }
    let mut total = Rat::zero();
    rec(&idx, 0, n, &Rat::one(), &mut total);
    Ok(total)
}

fn binomial_approx(n: usize, r: usize) -> f64 {
    if r > n {
        return 0.0;
    }
    let mut acc = 1.0f64;
    for i in 0..r {
        acc *= (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Taylor coefficients at 0 of Li_P up to order `d`, for P supported on
/// X*x1 ⊕ ℚ·1: the constant term is ⟨P|1⟩ and
/// c_N = H_{π_Y(P)}(N) - H_{π_Y(P)}(N-1) for N ≥ 1.
pub fn li_coeffs(p: &NCPolynomial<Rat>, d: usize) -> Result<TaylorSeries<Rat>> {
    if p.alphabet() != Alphabet::X {
        return Err(Error::AlphabetMismatch { expected: Alphabet::X, found: p.alphabet() });
    }
    let mut coeffs = vec![Rat::zero(); d + 1];
    for (w, c) in p.terms() {
        if w.is_empty() {
            coeffs[0] += c;
            continue;
        }
        let yw = pi_y(w)?;
        let table = global_cache().table(&yw, d);
        for n in 1..=d {
            coeffs[n] += c * (&table[n] - &table[n - 1]);
        }
    }
    Ok(TaylorSeries::from_coeffs("z", coeffs))
}

/// Taylor coefficients of Li_S/(1-z) up to order `d`:
/// a_N = Σ_n H_{π_Y(\[S\]_n)}(N). The truncation flag of S propagates, since
/// discarded homogeneous components would contribute to every a_N.
pub fn li_over_1mz_coeffs(s: &GradedSeries<Rat>, d: usize) -> Result<TaylorSeries<Rat>> {
    if s.alphabet() != Alphabet::X {
        return Err(Error::AlphabetMismatch { expected: Alphabet::X, found: s.alphabet() });
    }
    let mut coeffs = vec![Rat::zero(); d + 1];
    for (w, c) in s.terms() {
        if w.is_empty() {
            for a in coeffs.iter_mut() {
                *a += c;
            }
            continue;
        }
        let yw = pi_y(w)?;
        let table = global_cache().table(&yw, d);
        for n in 0..=d {
            coeffs[n] += c * &table[n];
        }
    }
    let mut t = TaylorSeries::from_coeffs("z", coeffs);
    t.truncated = s.is_truncated();
    Ok(t)
}

/// Coefficientwise product of Taylor series (re-export of the series op,
/// under the name the identity eq3 uses).
pub fn hadamard(f: &TaylorSeries<Rat>, g: &TaylorSeries<Rat>) -> Result<TaylorSeries<Rat>> {
    f.hadamard(g)
}

/// Preimage of a Taylor series under Li: S = Σ_N a_N (-(-x1)^+)^{⧢N},
/// truncated at word length `len_cap`. The coefficient of x1^n is
/// Σ_N (-1)^{N+n} a_N N! S2(n, N).
pub fn preimage_from_taylor(t: &TaylorSeries<Rat>, len_cap: usize) -> GradedSeries<Rat> {
    let mut p = NCPolynomial::<Rat>::zero_poly(Alphabet::X);
    let d = t.order();
    for n in 0..=len_cap {
        let mut c = Rat::zero();
        let mut nfact = BigInt::one();
        for (bign, a) in t.coeffs().iter().enumerate().take(n.min(d) + 1) {
            if bign > 0 {
                nfact *= BigInt::from(bign);
            }
            if a.is_zero() {
                continue;
            }
            let s2 = BigInt::from(stirling2(n, bign));
            let signed = if (bign + n) % 2 == 0 { s2 } else { -s2 };
            c += a * Rat::from_integer(signed * &nfact);
        }
        p.insert_add(Word::x_word(&vec![1u8; n]), c);
    }
    let mut s = GradedSeries::from_poly(&p, len_cap as u64);
    // The preimage of anything beyond a constant has unbounded support.
    let infinite = t.coeffs().iter().skip(1).any(|a| !a.is_zero());
    s.set_truncated(infinite || t.truncated);
    s
}

/// Report of the finite summability diagnostic. This is a heuristic check
/// on a finite window, not a convergence proof: `partial_sum` is
/// Σ |a_{n,N}| r^N over the window and `growth_flag` is raised when the
/// row sums show no geometric decay across the second half of the window.
#[derive(Debug, Clone)]
pub struct SummabilityReport {
    pub partial_sum: f64,
    pub row_sums: Vec<f64>,
    pub growth_flag: bool,
}

/// Σ_{n,N} |a_{n,N}| r^N over the given finite matrix (rows indexed by n).
pub fn summability_diagnostic(rows: &[Vec<f64>], r: f64) -> SummabilityReport {
    assert!(r > 0.0, "radius must be positive");
    let row_sums: Vec<f64> = rows
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(bign, a)| a.abs() * r.powi(bign as i32))
                .sum()
        })
        .collect();
    let partial_sum: f64 = row_sums.iter().sum();
    let half = row_sums.len() / 2;
    let tail_mass: f64 = row_sums[half..].iter().sum();
    let growth_flag = tail_mass > 1e-6 * (1.0 + partial_sum);
    SummabilityReport { partial_sum, row_sums, growth_flag }
}

/// The strictly-decreasing-domain witness S(t) = Σ_m t^m (x1^+)^{⧢m}
/// truncated at word length `len_cap`, together with the Taylor expansion
/// of its closed form (1-z)/(1-(t+1)z) to order `d`. The coefficient of
/// x1^n is Σ_m t^m m! S2(n, m).
#[derive(Debug, Clone)]
pub struct DomWitness {
    pub series: GradedSeries<Rat>,
    pub closed_form: TaylorSeries<Rat>,
}

pub fn dom_witness(t: &Rat, len_cap: usize, d: usize) -> Result<DomWitness> {
    if t.is_negative() {
        return Err(Error::Domain("dom_witness requires t >= 0".into()));
    }
    let mut p = NCPolynomial::<Rat>::zero_poly(Alphabet::X);
    for n in 0..=len_cap {
        let mut c = Rat::zero();
        let mut tm = Rat::one();
        let mut mfact = BigInt::one();
        for m in 0..=n {
            if m > 0 {
                tm *= t;
                mfact *= BigInt::from(m);
            }
            c += &tm * Rat::from_integer(&mfact * BigInt::from(stirling2(n, m)));
        }
        p.insert_add(Word::x_word(&vec![1u8; n]), c);
    }
    let mut series = GradedSeries::from_poly(&p, len_cap as u64);
    series.set_truncated(!t.is_zero());

    // (1-z)/(1-(t+1)z) = 1 + Σ_{N≥1} t (t+1)^{N-1} z^N.
    let mut coeffs = Vec::with_capacity(d + 1);
    coeffs.push(Rat::one());
    let tp1 = t + Rat::one();
    let mut pw = Rat::one();
    for _ in 1..=d {
        coeffs.push(t * &pw);
        pw *= &tp1;
    }
    let mut closed_form = TaylorSeries::from_coeffs("z", coeffs);
    closed_form.radius_hint = (t + Rat::one()).recip().to_f64();
    Ok(DomWitness { series, closed_form })
}
