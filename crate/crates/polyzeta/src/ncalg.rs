//! Noncommutative polynomials and weight-truncated series over a [`Scalar`]
//! ring, with the concatenation, shuffle and stuffle products, Kleene stars
//! of proper series, the stuffle exponential, and the umbral coding of
//! degree-one "plane" series whose stars are exactly the conc-characters.
//!
//! The products are weight-graded, so coefficients of weight ≤ W in any
//! result depend only on coefficients of weight ≤ W in the inputs. A
//! [`GradedSeries`] carries a sticky `truncated` flag recording whether
//! content above its truncation weight was discarded anywhere upstream.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{Rat, Scalar};
use crate::taylor::TaylorSeries;
use crate::words::{Alphabet, Word};

/// Finitely supported map Word → Scalar. Zero coefficients are pruned.
#[derive(Debug, Clone, PartialEq)]
pub struct NCPolynomial<K: Scalar> {
    alphabet: Alphabet,
    terms: BTreeMap<Word, K>,
}

impl<K: Scalar> NCPolynomial<K> {
    pub fn zero_poly(alphabet: Alphabet) -> Self {
        NCPolynomial { alphabet, terms: BTreeMap::new() }
    }

    /// The empty word with coefficient 1.
    pub fn one_poly(alphabet: Alphabet) -> Self {
        let mut p = Self::zero_poly(alphabet);
        p.insert_add(Word::empty(alphabet), K::one());
        p
    }

    pub fn from_word(w: Word) -> Self {
        let mut p = Self::zero_poly(w.alphabet());
        p.insert_add(w, K::one());
        p
    }

    pub fn from_terms(alphabet: Alphabet, terms: impl IntoIterator<Item = (Word, K)>) -> Result<Self> {
        let mut p = Self::zero_poly(alphabet);
        for (w, c) in terms {
            if w.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch { expected: alphabet, found: w.alphabet() });
            }
            p.insert_add(w, c);
        }
        Ok(p)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &K)> {
        self.terms.iter()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero_poly(&self) -> bool {
        self.terms.is_empty()
    }

    /// ⟨self | w⟩.
    pub fn coeff(&self, w: &Word) -> K {
        self.terms.get(w).cloned().unwrap_or_else(K::zero)
    }

    pub fn insert_add(&mut self, w: Word, c: K) {
        debug_assert_eq!(w.alphabet(), self.alphabet);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert_add(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert_add(w.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        NCPolynomial {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &K) -> Self {
        let mut out = Self::zero_poly(self.alphabet);
        for (w, c) in &self.terms {
            out.insert_add(w.clone(), c.clone() * k);
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        let mut out = Self::zero_poly(self.alphabet);
        for (w, c) in &self.terms {
            out.insert_add(w.clone(), c.scale_rat(r));
        }
        out
    }

    pub fn max_weight(&self) -> u64 {
        self.terms.keys().map(Word::weight).max().unwrap_or(0)
    }

    /// Restriction to words of weight n.
    pub fn weight_component(&self, n: u64) -> Self {
        let mut out = Self::zero_poly(self.alphabet);
        for (w, c) in &self.terms {
            if w.weight() == n {
                out.insert_add(w.clone(), c.clone());
            }
        }
        out
    }

    fn check_alphabet(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch { expected: self.alphabet, found: other.alphabet });
        }
        Ok(())
    }

    /// Map coefficients into another scalar ring.
    pub fn map_coeffs<L: Scalar>(&self, f: impl Fn(&K) -> L) -> NCPolynomial<L> {
        let mut out = NCPolynomial::zero_poly(self.alphabet);
        for (w, c) in &self.terms {
            out.insert_add(w.clone(), f(c));
        }
        out
    }
}

impl<K: Scalar> fmt::Display for NCPolynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(self.terms.iter(), f)
    }
}

fn fmt_terms<'a, K: Scalar + 'a>(
    terms: impl Iterator<Item = (&'a Word, &'a K)>,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    let mut first = true;
    for (w, c) in terms {
        let txt = c.to_string();
        let (neg, mag) = match txt.strip_prefix('-') {
            // A single leading sign with no further sign characters can be
            // pulled out in front of the term.
            Some(rest) if !rest.contains('+') && !rest.contains('-') => (true, rest.to_string()),
            _ => (false, txt),
        };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let simple = !mag.contains(['+', '-', '*', ' ']);
        if w.is_empty() {
            // The empty word prints as `1`, so a constant c prints as
            // `c*1` to stay inside the expression grammar.
            if mag == "1" {
                write!(f, "1")?;
            } else if simple {
                write!(f, "{mag}*1")?;
            } else {
                write!(f, "({mag})*1")?;
            }
        } else if mag == "1" {
            write!(f, "{w}")?;
        } else if simple {
            write!(f, "{mag}*{w}")?;
        } else {
            write!(f, "({mag})*{w}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Word-level shuffle: au ⧢ bv = a(u ⧢ bv) + b(au ⧢ v).
fn word_shuffle(u: &Word, v: &Word) -> Vec<(Word, u64)> {
    if u.is_empty() {
        return vec![(v.clone(), 1)];
    }
    if v.is_empty() {
        return vec![(u.clone(), 1)];
    }
    let mut acc: BTreeMap<Word, u64> = BTreeMap::new();
    let a = u.first().unwrap();
    let b = v.first().unwrap();
    for (w, m) in word_shuffle(&u.tail(), v) {
        *acc.entry(w.prepend(a)).or_insert(0) += m;
    }
    for (w, m) in word_shuffle(u, &v.tail()) {
        *acc.entry(w.prepend(b)).or_insert(0) += m;
    }
    acc.into_iter().collect()
}

/// Word-level stuffle: y_s u ⊎ y_t v = y_s(u ⊎ y_t v) + y_t(y_s u ⊎ v) + y_{s+t}(u ⊎ v).
fn word_stuffle(u: &Word, v: &Word) -> Vec<(Word, u64)> {
    if u.is_empty() {
        return vec![(v.clone(), 1)];
    }
    if v.is_empty() {
        return vec![(u.clone(), 1)];
    }
    let mut acc: BTreeMap<Word, u64> = BTreeMap::new();
    let s = u.first().unwrap();
    let t = v.first().unwrap();
    for (w, m) in word_stuffle(&u.tail(), v) {
        *acc.entry(w.prepend(s)).or_insert(0) += m;
    }
    for (w, m) in word_stuffle(u, &v.tail()) {
        *acc.entry(w.prepend(t)).or_insert(0) += m;
    }
    for (w, m) in word_stuffle(&u.tail(), &v.tail()) {
        *acc.entry(w.prepend(s + t)).or_insert(0) += m;
    }
    acc.into_iter().collect()
}

fn bilinear<K: Scalar>(
    p: &NCPolynomial<K>,
    q: &NCPolynomial<K>,
    word_product: impl Fn(&Word, &Word) -> Vec<(Word, u64)>,
) -> NCPolynomial<K> {
    let mut out = NCPolynomial::zero_poly(p.alphabet());
    for (u, cu) in p.terms() {
        for (v, cv) in q.terms() {
            let c = cu.clone() * cv;
            for (w, m) in word_product(u, v) {
                out.insert_add(w, c.scale_rat(&Rat::from_integer(m.into())));
            }
        }
    }
    out
}

/// Concatenation product (bilinear extension of word concatenation).
pub fn conc<K: Scalar>(p: &NCPolynomial<K>, q: &NCPolynomial<K>) -> Result<NCPolynomial<K>> {
    p.check_alphabet(q)?;
    let mut out = NCPolynomial::zero_poly(p.alphabet());
    for (u, cu) in p.terms() {
        for (v, cv) in q.terms() {
            out.insert_add(u.concat(v)?, cu.clone() * cv);
        }
    }
    Ok(out)
}

/// Shuffle product on either alphabet.
pub fn shuffle<K: Scalar>(p: &NCPolynomial<K>, q: &NCPolynomial<K>) -> Result<NCPolynomial<K>> {
    p.check_alphabet(q)?;
    Ok(bilinear(p, q, word_shuffle))
}

/// Stuffle (quasi-shuffle) product; defined on Y only.
pub fn stuffle<K: Scalar>(p: &NCPolynomial<K>, q: &NCPolynomial<K>) -> Result<NCPolynomial<K>> {
    if p.alphabet() != Alphabet::Y {
        return Err(Error::AlphabetMismatch { expected: Alphabet::Y, found: p.alphabet() });
    }
    p.check_alphabet(q)?;
    Ok(bilinear(p, q, word_stuffle))
}

/// ⟨P | Q⟩ = Σ_w ⟨P|w⟩⟨Q|w⟩ for polynomials.
pub fn pairing<K: Scalar>(p: &NCPolynomial<K>, q: &NCPolynomial<K>) -> Result<K> {
    p.check_alphabet(q)?;
    let mut acc = K::zero();
    for (w, c) in q.terms() {
        let cw = p.coeff(w);
        if !cw.is_zero() {
            acc = acc + &(cw * c);
        }
    }
    Ok(acc)
}

/// A series truncated at a weight bound W: only words of weight ≤ W are
/// stored, with a sticky flag recording discarded higher-weight content.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedSeries<K: Scalar> {
    alphabet: Alphabet,
    trunc: u64,
    terms: BTreeMap<Word, K>,
    truncated: bool,
}

impl<K: Scalar> GradedSeries<K> {
    pub fn zero_series(alphabet: Alphabet, trunc: u64) -> Self {
        GradedSeries { alphabet, trunc, terms: BTreeMap::new(), truncated: false }
    }

    pub fn one_series(alphabet: Alphabet, trunc: u64) -> Self {
        let mut s = Self::zero_series(alphabet, trunc);
        s.insert_add(Word::empty(alphabet), K::one());
        s
    }

    /// Builds a series from a polynomial; words above `trunc` are dropped
    /// and recorded in the truncation flag.
    pub fn from_poly(p: &NCPolynomial<K>, trunc: u64) -> Self {
        let mut s = Self::zero_series(p.alphabet(), trunc);
        for (w, c) in p.terms() {
            if w.weight() <= trunc {
                s.insert_add(w.clone(), c.clone());
            } else {
                s.truncated = true;
            }
        }
        s
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn truncation(&self) -> u64 {
        self.trunc
    }

    /// Whether content above the truncation weight was discarded here or in
    /// any input this series was computed from.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn set_truncated(&mut self, t: bool) {
        self.truncated = t;
    }

    pub fn coeff(&self, w: &Word) -> K {
        self.terms.get(w).cloned().unwrap_or_else(K::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &K)> {
        self.terms.iter()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    fn insert_add(&mut self, w: Word, c: K) {
        debug_assert!(w.weight() <= self.trunc);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Everything stored, as a polynomial.
    pub fn to_poly(&self) -> NCPolynomial<K> {
        NCPolynomial { alphabet: self.alphabet, terms: self.terms.clone() }
    }

    /// \[S\]_n: the homogeneous component of weight n.
    pub fn homogeneous_component(&self, n: u64) -> Result<NCPolynomial<K>> {
        if n > self.trunc {
            return Err(Error::Truncation(format!(
                "component {n} requested above truncation weight {}",
                self.trunc
            )));
        }
        let mut out = NCPolynomial::zero_poly(self.alphabet);
        for (w, c) in &self.terms {
            if w.weight() == n {
                out.insert_add(w.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// ⟨S | P⟩; errors if P has support above the truncation weight.
    pub fn pairing(&self, p: &NCPolynomial<K>) -> Result<K> {
        if p.alphabet() != self.alphabet {
            return Err(Error::AlphabetMismatch { expected: self.alphabet, found: p.alphabet() });
        }
        let mut acc = K::zero();
        for (w, c) in p.terms() {
            if w.weight() > self.trunc {
                return Err(Error::Truncation(format!(
                    "pairing: word `{w}` of weight {} exceeds truncation {}",
                    w.weight(),
                    self.trunc
                )));
            }
            let cw = self.coeff(w);
            if !cw.is_zero() {
                acc = acc + &(cw * c);
            }
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero_series(self.alphabet, trunc);
        out.truncated = self.truncated || other.truncated || self.trunc != other.trunc;
        for (w, c) in self.terms.iter().chain(other.terms.iter()) {
            if w.weight() <= trunc {
                out.insert_add(w.clone(), c.clone());
            } else {
                out.truncated = true;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-K::one()))
    }

    pub fn scale(&self, k: &K) -> Self {
        let mut out = Self::zero_series(self.alphabet, self.trunc);
        out.truncated = self.truncated;
        for (w, c) in &self.terms {
            out.insert_add(w.clone(), c.clone() * k);
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        let mut out = Self::zero_series(self.alphabet, self.trunc);
        out.truncated = self.truncated;
        for (w, c) in &self.terms {
            out.insert_add(w.clone(), c.scale_rat(r));
        }
        out
    }

    fn check_compat(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch { expected: self.alphabet, found: other.alphabet });
        }
        Ok(())
    }

    fn graded_product(
        &self,
        other: &Self,
        word_product: impl Fn(&Word, &Word) -> Vec<(Word, u64)>,
        concat: bool,
    ) -> Result<Self> {
        self.check_compat(other)?;
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero_series(self.alphabet, trunc);
        // The product always has content above any finite truncation unless
        // one factor is 0; mark conservatively when a pair is skipped.
        out.truncated = self.truncated || other.truncated;
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                if u.weight() + v.weight() > trunc {
                    out.truncated = true;
                    continue;
                }
                let c = cu.clone() * cv;
                if concat {
                    out.insert_add(u.concat(v)?, c);
                } else {
                    for (w, m) in word_product(u, v) {
                        out.insert_add(w, c.scale_rat(&Rat::from_integer(m.into())));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn conc(&self, other: &Self) -> Result<Self> {
        self.graded_product(other, |_, _| unreachable!(), true)
    }

    pub fn shuffle(&self, other: &Self) -> Result<Self> {
        self.graded_product(other, word_shuffle, false)
    }

    pub fn stuffle(&self, other: &Self) -> Result<Self> {
        if self.alphabet != Alphabet::Y {
            return Err(Error::AlphabetMismatch { expected: Alphabet::Y, found: self.alphabet });
        }
        self.graded_product(other, word_stuffle, false)
    }

    /// ⟨S|1⟩ = 0, i.e. no constant term.
    pub fn is_proper(&self) -> bool {
        self.coeff(&Word::empty(self.alphabet)).is_zero()
    }

    /// Kleene star under concatenation: Σ_{m≥0} S^m truncated at `trunc`.
    /// Requires a proper S, which bounds m by the truncation weight.
    pub fn conc_star(&self, trunc: u64) -> Result<Self> {
        if !self.is_proper() {
            return Err(Error::NotProper("conc_star requires <S|1> = 0".into()));
        }
        let base = self.retrunc(trunc);
        let mut acc = Self::one_series(self.alphabet, trunc);
        acc.truncated = base.truncated || !base.terms.is_empty();
        let mut power = Self::one_series(self.alphabet, trunc);
        for _ in 1..=trunc {
            power = power.conc(&base)?;
            if power.terms.is_empty() {
                break;
            }
            for (w, c) in &power.terms {
                acc.insert_add(w.clone(), c.clone());
            }
        }
        Ok(acc)
    }

    /// Stuffle exponential: Σ_{m≥0} S^{⊎m}/m! truncated at `trunc`.
    pub fn stuffle_exp(&self, trunc: u64) -> Result<Self> {
        if self.alphabet != Alphabet::Y {
            return Err(Error::AlphabetMismatch { expected: Alphabet::Y, found: self.alphabet });
        }
        if !self.is_proper() {
            return Err(Error::NotProper("stuffle_exp requires <S|1> = 0".into()));
        }
        let base = self.retrunc(trunc);
        let mut acc = Self::one_series(self.alphabet, trunc);
        acc.truncated = base.truncated || !base.terms.is_empty();
        let mut term = Self::one_series(self.alphabet, trunc);
        for m in 1..=trunc {
            term = term.stuffle(&base)?.scale_rat(&Rat::new(1.into(), m.into()));
            if term.terms.is_empty() {
                break;
            }
            for (w, c) in &term.terms {
                acc.insert_add(w.clone(), c.clone());
            }
        }
        Ok(acc)
    }

    fn retrunc(&self, trunc: u64) -> Self {
        let mut out = Self::zero_series(self.alphabet, trunc);
        out.truncated = self.truncated;
        for (w, c) in &self.terms {
            if w.weight() <= trunc {
                out.insert_add(w.clone(), c.clone());
            } else {
                out.truncated = true;
            }
        }
        out
    }
}

impl<K: Scalar> fmt::Display for GradedSeries<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(self.terms.iter(), f)?;
        if self.truncated {
            write!(f, " + O(weight>{})", self.trunc)?;
        }
        Ok(())
    }
}

/// Homogeneous degree-one series Σ_{i≥1} α_i y_i, stored as the coefficient
/// list (α_1, ..., α_W). Stars of these are exactly the conc-characters.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneSeries<K: Scalar> {
    coeffs: Vec<K>,
}

impl<K: Scalar> PlaneSeries<K> {
    /// coeffs\[i\] is the coefficient α_{i+1} of y_{i+1}.
    pub fn new(coeffs: Vec<K>) -> Self {
        PlaneSeries { coeffs }
    }

    pub fn zero_plane(trunc: usize) -> Self {
        PlaneSeries { coeffs: vec![K::zero(); trunc] }
    }

    /// α_k · y_k as a plane series truncated at `trunc`.
    pub fn single(k: usize, alpha: K, trunc: usize) -> Self {
        assert!(k >= 1 && k <= trunc, "letter index outside the truncation");
        let mut coeffs = vec![K::zero(); trunc];
        coeffs[k - 1] = alpha;
        PlaneSeries { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    /// α_s (1-based letter index).
    pub fn alpha(&self, s: usize) -> K {
        assert!(s >= 1);
        self.coeffs.get(s - 1).cloned().unwrap_or_else(K::zero)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn is_zero_plane(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The plane series as a weight-truncated graded series over Y.
    pub fn to_graded(&self, trunc: u64) -> GradedSeries<K> {
        let mut s = GradedSeries::zero_series(Alphabet::Y, trunc);
        for (i, c) in self.coeffs.iter().enumerate() {
            let weight = (i + 1) as u64;
            if c.is_zero() {
                continue;
            }
            if weight <= trunc {
                s.insert_add(Word::y_word(&[weight]), c.clone());
            } else {
                s.set_truncated(true);
            }
        }
        s
    }

    /// Kleene star of the plane series, truncated at weight `trunc`.
    pub fn star(&self, trunc: u64) -> GradedSeries<K> {
        self.to_graded(trunc).conc_star(trunc).expect("plane series are proper")
    }

    /// Umbral coding: Σ α_n y_n ↦ Σ α_n q^n.
    pub fn umbral_encode(&self) -> TaylorSeries<K> {
        let mut coeffs = vec![K::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        TaylorSeries::from_coeffs("q", coeffs)
    }

    /// Inverse umbral coding; the constant term must vanish.
    pub fn umbral_decode(t: &TaylorSeries<K>) -> Result<Self> {
        if !t.coeff(0).is_zero() {
            return Err(Error::Domain(
                "umbral decode requires a zero constant term".into(),
            ));
        }
        Ok(PlaneSeries { coeffs: (1..=t.order()).map(|n| t.coeff(n)).collect() })
    }
}

/// Closed-form stuffle of conc-characters: A^* ⊎ B^* = C^* with
/// C = A + B + Σ_{i,j} α_i β_j y_{i+j}; in umbral coding
/// 1 + Ĉ = (1 + Â)(1 + B̂).
pub fn char_stuffle_product<K: Scalar>(a: &PlaneSeries<K>, b: &PlaneSeries<K>) -> PlaneSeries<K> {
    let w = a.truncation().max(b.truncation());
    let mut coeffs = vec![K::zero(); w];
    for n in 1..=w {
        let mut c = a.alpha(n) + &b.alpha(n);
        for i in 1..n {
            c = c + &(a.alpha(i) * &b.alpha(n - i));
        }
        coeffs[n - 1] = c;
    }
    PlaneSeries { coeffs }
}

/// Inverse in the character group: B with (1 + Â)(1 + B̂) = 1.
pub fn char_stuffle_inverse<K: Scalar>(a: &PlaneSeries<K>) -> PlaneSeries<K> {
    let w = a.truncation();
    let mut b = vec![K::zero(); w];
    for n in 1..=w {
        let mut c = -a.alpha(n);
        for j in 1..n {
            c = c - &(b[j - 1].clone() * &a.alpha(n - j));
        }
        b[n - 1] = c;
    }
    PlaneSeries { coeffs: b }
}

/// One-parameter stuffle group G(z) = (π_Y^{Umbra}(e^{zT} - 1))^*, for a
/// Taylor series T with zero constant term. Coefficients stay in the scalar
/// ring of `z` (ℚ\[z\] when z is a formal parameter).
pub fn one_param_group<K: Scalar>(
    t: &TaylorSeries<K>,
    z: &K,
    trunc: u64,
) -> Result<GradedSeries<K>> {
    if !t.coeff(0).is_zero() {
        return Err(Error::NotProper("one_param_group requires T(0) = 0".into()));
    }
    let scaled = t.truncate(trunc as usize).scale(z);
    let exp_m1 = scaled.exp_proper()?.sub(&TaylorSeries::one_series(t.var(), trunc as usize))?;
    let plane = PlaneSeries::umbral_decode(&exp_m1)?;
    Ok(plane.star(trunc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int, PolyQ};
    use crate::words::enumerate_y_words;
    use num_traits::One;

    fn yw(v: &[u64]) -> Word {
        Word::y_word(v)
    }

    fn xw(v: &[u8]) -> Word {
        Word::x_word(v)
    }

    fn poly(terms: &[(Word, Rat)]) -> NCPolynomial<Rat> {
        NCPolynomial::from_terms(terms[0].0.alphabet(), terms.to_vec()).unwrap()
    }

    #[test]
    fn conc_examples() {
        let x0 = NCPolynomial::<Rat>::from_word(xw(&[0]));
        let x1 = NCPolynomial::<Rat>::from_word(xw(&[1]));
        assert_eq!(conc(&x0, &x1).unwrap(), NCPolynomial::from_word(xw(&[0, 1])));

        let one = NCPolynomial::<Rat>::one_poly(Alphabet::Y);
        let p = poly(&[(yw(&[1]), rat_int(2)), (yw(&[2, 1]), rat(1, 3))]);
        assert_eq!(conc(&one, &p).unwrap(), p);

        let q = poly(&[(yw(&[1]), rat_int(1)), (yw(&[2]), rat_int(1))]);
        let r = conc(&q, &NCPolynomial::from_word(yw(&[1]))).unwrap();
        assert_eq!(r, poly(&[(yw(&[1, 1]), rat_int(1)), (yw(&[2, 1]), rat_int(1))]));
    }

    #[test]
    fn shuffle_examples() {
        let x1 = NCPolynomial::<Rat>::from_word(xw(&[1]));
        let sq = shuffle(&x1, &x1).unwrap();
        assert_eq!(sq, poly(&[(xw(&[1, 1]), rat_int(2))]));

        let x01 = NCPolynomial::<Rat>::from_word(xw(&[0, 1]));
        let p = shuffle(&x01, &x1).unwrap();
        assert_eq!(
            p,
            poly(&[(xw(&[0, 1, 1]), rat_int(2)), (xw(&[1, 0, 1]), rat_int(1))])
        );

        let one = NCPolynomial::<Rat>::one_poly(Alphabet::X);
        assert_eq!(shuffle(&one, &x01).unwrap(), x01);
    }

    #[test]
    fn stuffle_examples() {
        let y1 = NCPolynomial::<Rat>::from_word(yw(&[1]));
        let y2 = NCPolynomial::<Rat>::from_word(yw(&[2]));
        assert_eq!(
            stuffle(&y1, &y1).unwrap(),
            poly(&[(yw(&[1, 1]), rat_int(2)), (yw(&[2]), rat_int(1))])
        );
        assert_eq!(
            stuffle(&y1, &y2).unwrap(),
            poly(&[
                (yw(&[1, 2]), rat_int(1)),
                (yw(&[2, 1]), rat_int(1)),
                (yw(&[3]), rat_int(1))
            ])
        );
        let one = NCPolynomial::<Rat>::one_poly(Alphabet::Y);
        assert_eq!(stuffle(&one, &y2).unwrap(), y2);
        // Stuffle is Y-only.
        let x1 = NCPolynomial::<Rat>::from_word(xw(&[1]));
        assert!(stuffle(&x1, &x1).is_err());
    }

    /// Shuffle oracle: enumerate position subsets for the left factor.
    fn shuffle_oracle(u: &Word, v: &Word) -> NCPolynomial<Rat> {
        let n = u.len() + v.len();
        let mut out = NCPolynomial::zero_poly(u.alphabet());
        let ui: Vec<u64> = u.indices().to_vec();
        let vi: Vec<u64> = v.indices().to_vec();
        // Choose which positions of the result receive letters of u.
        let mut positions: Vec<usize> = Vec::new();
        #[allow(clippy::too_many_arguments)]
        fn choose(
            start: usize,
            need: usize,
            n: usize,
            positions: &mut Vec<usize>,
            ui: &[u64],
            vi: &[u64],
            out: &mut NCPolynomial<Rat>,
            alphabet: Alphabet,
        ) {
            if need == 0 {
                let mut idx = vec![0u64; n];
                let mut iu = 0;
                let mut iv = 0;
                for (p, slot) in idx.iter_mut().enumerate() {
                    if positions.contains(&p) {
                        *slot = ui[iu];
                        iu += 1;
                    } else {
                        *slot = vi[iv];
                        iv += 1;
                    }
                }
                let w = match alphabet {
                    Alphabet::Y => Word::y_word(&idx),
                    Alphabet::X => {
                        Word::x_word(&idx.iter().map(|&i| i as u8).collect::<Vec<_>>())
                    }
                };
                out.insert_add(w, rat_int(1));
                return;
            }
            for p in start..=n - need {
                positions.push(p);
                choose(p + 1, need - 1, n, positions, ui, vi, out, alphabet);
                positions.pop();
            }
        }
        choose(0, ui.len(), n, &mut positions, &ui, &vi, &mut out, u.alphabet());
        out
    }

    /// Stuffle oracle: surjective order-preserving overlap maps. Choose the
    /// result length n, then which result positions receive u-letters and
    /// which receive v-letters (jointly covering all n positions); overlaps
    /// add the indices.
    fn stuffle_oracle(u: &Word, v: &Word) -> NCPolynomial<Rat> {
        let r = u.len();
        let s = v.len();
        let mut out = NCPolynomial::zero_poly(Alphabet::Y);
        for n in r.max(s)..=r + s {
            // a_mask: positions taking a u-letter; b_mask likewise. Both are
            // increasing placements, encoded as subsets of size r and s.
            let a_sets = subsets(n, r);
            let b_sets = subsets(n, s);
            for a in &a_sets {
                for b in &b_sets {
                    let covered = (0..n).all(|p| a.contains(&p) || b.contains(&p));
                    if !covered {
                        continue;
                    }
                    let mut idx = vec![0u64; n];
                    for (i, &p) in a.iter().enumerate() {
                        idx[p] += u.indices()[i];
                    }
                    for (j, &p) in b.iter().enumerate() {
                        idx[p] += v.indices()[j];
                    }
                    out.insert_add(Word::y_word(&idx), rat_int(1));
                }
            }
        }
        out
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            let need = k - cur.len();
            for p in start..=n - need {
                cur.push(p);
                rec(p + 1, k, n, cur, out);
                cur.pop();
            }
        }
        rec(0, k, n, &mut cur, &mut out);
        out
    }

    #[test]
    fn products_match_enumeration_oracles() {
        let words = enumerate_y_words(5);
        for u in &words {
            for v in &words {
                if u.weight() + v.weight() > 6 || u.is_empty() || v.is_empty() {
                    continue;
                }
                let pu = NCPolynomial::<Rat>::from_word(u.clone());
                let pv = NCPolynomial::<Rat>::from_word(v.clone());
                assert_eq!(stuffle(&pu, &pv).unwrap(), stuffle_oracle(u, v), "stuffle {u} | {v}");
                assert_eq!(shuffle(&pu, &pv).unwrap(), shuffle_oracle(u, v), "shuffle {u} | {v}");
            }
        }
    }

    #[test]
    fn shuffle_matches_oracle_on_x_words() {
        // All X-word pairs up to length 3.
        let mut xs = vec![Word::empty(Alphabet::X)];
        for len in 1..=3usize {
            for code in 0..(1u32 << len) {
                let idx: Vec<u8> = (0..len).map(|b| ((code >> b) & 1) as u8).collect();
                xs.push(Word::x_word(&idx));
            }
        }
        for u in &xs {
            for v in &xs {
                if u.is_empty() || v.is_empty() {
                    continue;
                }
                let pu = NCPolynomial::<Rat>::from_word(u.clone());
                let pv = NCPolynomial::<Rat>::from_word(v.clone());
                assert_eq!(shuffle(&pu, &pv).unwrap(), shuffle_oracle(u, v), "shuffle {u} | {v}");
            }
        }
    }

    #[test]
    fn stuffle_exp_is_additive() {
        // exp_st(S + T) = exp_st(S) st exp_st(T) for proper series.
        let mut state = 0xabcdef12u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..5 {
            let mut s = NCPolynomial::<Rat>::zero_poly(Alphabet::Y);
            let mut t = NCPolynomial::<Rat>::zero_poly(Alphabet::Y);
            for _ in 0..3 {
                let ws = 1 + next() % 4;
                let wt = 1 + next() % 4;
                s.insert_add(yw(&[ws]), rat((next() % 9) as i64 - 4, 1 + (next() % 3) as i64));
                t.insert_add(yw(&[wt, 1]), rat((next() % 9) as i64 - 4, 1 + (next() % 3) as i64));
            }
            let gs = GradedSeries::from_poly(&s, 6);
            let gt = GradedSeries::from_poly(&t, 6);
            let lhs = gs.add(&gt).unwrap().stuffle_exp(6).unwrap();
            let rhs = gs.stuffle_exp(6).unwrap().stuffle(&gt.stuffle_exp(6).unwrap()).unwrap();
            assert_eq!(lhs.to_poly(), rhs.to_poly());
        }
    }

    #[test]
    fn products_commute_and_associate() {
        // Deterministic triple sample over small words.
        let words = enumerate_y_words(3);
        let mut count = 0usize;
        'outer: for u in &words {
            for v in &words {
                for w in &words {
                    if u.weight() + v.weight() + w.weight() > 5 {
                        continue;
                    }
                    let (pu, pv, pw) = (
                        NCPolynomial::<Rat>::from_word(u.clone()),
                        NCPolynomial::<Rat>::from_word(v.clone()),
                        NCPolynomial::<Rat>::from_word(w.clone()),
                    );
                    type Product = fn(&NCPolynomial<Rat>, &NCPolynomial<Rat>) -> Result<NCPolynomial<Rat>>;
                    for product in [stuffle as Product, shuffle as Product] {
                        let uv = product(&pu, &pv).unwrap();
                        let vu = product(&pv, &pu).unwrap();
                        assert_eq!(uv, vu, "commutativity at {u},{v}");
                        let uv_w = product(&uv, &pw).unwrap();
                        let v_w = product(&pv, &pw).unwrap();
                        let u_vw = product(&pu, &v_w).unwrap();
                        assert_eq!(uv_w, u_vw, "associativity at {u},{v},{w}");
                    }
                    count += 1;
                    if count > 120 {
                        break 'outer;
                    }
                }
            }
        }
    }

    #[test]
    fn products_are_weight_graded() {
        let words = enumerate_y_words(4);
        for u in &words {
            for v in &words {
                if u.weight() + v.weight() > 6 {
                    continue;
                }
                let p = stuffle(
                    &NCPolynomial::<Rat>::from_word(u.clone()),
                    &NCPolynomial::<Rat>::from_word(v.clone()),
                )
                .unwrap();
                for (w, _) in p.terms() {
                    assert_eq!(w.weight(), u.weight() + v.weight());
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let p = poly(&[(yw(&[1, 2]), rat_int(1)), (yw(&[3]), rat_int(3))]);
        let q = NCPolynomial::<Rat>::from_word(yw(&[3]));
        assert_eq!(pairing(&p, &q).unwrap(), rat_int(3));
        let zero = NCPolynomial::<Rat>::zero_poly(Alphabet::Y);
        assert_eq!(pairing(&p, &zero).unwrap(), rat_int(0));

        let a = poly(&[(xw(&[0]), rat(1, 2)), (xw(&[0, 1]), rat_int(1))]);
        let b = poly(&[(xw(&[0]), rat_int(1)), (xw(&[0, 1]), rat_int(2))]);
        assert_eq!(pairing(&a, &b).unwrap(), rat(5, 2));
    }

    #[test]
    fn homogeneous_components() {
        let p = poly(&[
            (Word::empty(Alphabet::Y), rat_int(1)),
            (yw(&[1]), rat_int(1)),
            (yw(&[2]), rat_int(1)),
            (yw(&[1, 1]), rat_int(1)),
        ]);
        let s = GradedSeries::from_poly(&p, 4);
        let c2 = s.homogeneous_component(2).unwrap();
        assert_eq!(c2, poly(&[(yw(&[2]), rat_int(1)), (yw(&[1, 1]), rat_int(1))]));
        let c0 = s.homogeneous_component(0).unwrap();
        assert_eq!(c0, NCPolynomial::one_poly(Alphabet::Y));
        assert!(s.homogeneous_component(5).is_err());
    }

    #[test]
    fn conc_star_geometric() {
        let p = poly(&[(xw(&[0]), rat(1, 2))]);
        let star = GradedSeries::from_poly(&p, 3).conc_star(3).unwrap();
        assert_eq!(star.coeff(&Word::empty(Alphabet::X)), rat_int(1));
        assert_eq!(star.coeff(&xw(&[0])), rat(1, 2));
        assert_eq!(star.coeff(&xw(&[0, 0])), rat(1, 4));
        assert_eq!(star.coeff(&xw(&[0, 0, 0])), rat(1, 8));

        let y1 = NCPolynomial::<Rat>::from_word(yw(&[1]));
        let star = GradedSeries::from_poly(&y1, 2).conc_star(2).unwrap();
        assert_eq!(star.support_size(), 3);
        assert_eq!(star.coeff(&yw(&[1, 1])), rat_int(1));

        // Non-proper input is rejected.
        let one = NCPolynomial::<Rat>::one_poly(Alphabet::Y);
        assert!(GradedSeries::from_poly(&one, 2).conc_star(2).is_err());
    }

    #[test]
    fn conc_star_of_plane_over_polynomials() {
        // (z*y2)^* truncated at weight 6 over Q[z].
        let z = PolyQ::var("z");
        let plane = PlaneSeries::single(2, z.clone(), 6);
        let star = plane.star(6);
        assert_eq!(star.coeff(&yw(&[2, 2])), z.pow(2));
        assert_eq!(star.coeff(&yw(&[2, 2, 2])), z.pow(3));
        assert_eq!(star.homogeneous_component(4).unwrap().support_size(), 1);
        assert!(star.coeff(&yw(&[4])).is_zero());
    }

    #[test]
    fn stuffle_exp_examples() {
        let y1 = NCPolynomial::<Rat>::from_word(yw(&[1]));
        let e = GradedSeries::from_poly(&y1, 2).stuffle_exp(2).unwrap();
        assert_eq!(e.coeff(&Word::empty(Alphabet::Y)), rat_int(1));
        assert_eq!(e.coeff(&yw(&[1])), rat_int(1));
        assert_eq!(e.coeff(&yw(&[1, 1])), rat_int(1));
        assert_eq!(e.coeff(&yw(&[2])), rat(1, 2));

        let zero = GradedSeries::<Rat>::zero_series(Alphabet::Y, 3);
        let e = zero.stuffle_exp(3).unwrap();
        assert_eq!(e, GradedSeries::one_series(Alphabet::Y, 3));
    }

    #[test]
    fn umbral_roundtrip() {
        let p = PlaneSeries::new(vec![rat_int(1), Rat::zero(), rat(1, 2)]);
        let t = p.umbral_encode();
        assert_eq!(t.coeff(1), rat_int(1));
        assert_eq!(t.coeff(3), rat(1, 2));
        assert_eq!(PlaneSeries::umbral_decode(&t).unwrap(), p);

        let q2 = TaylorSeries::monomial("q", rat_int(1), 2, 4);
        let p = PlaneSeries::umbral_decode(&q2).unwrap();
        assert_eq!(p.alpha(2), rat_int(1));

        let bad = TaylorSeries::from_coeffs("q", vec![rat_int(1), rat_int(1)]);
        assert!(PlaneSeries::<Rat>::umbral_decode(&bad).is_err());
    }

    #[test]
    fn char_product_small_cases() {
        let a = PlaneSeries::single(1, rat_int(1), 4);
        let c = char_stuffle_product(&a, &a);
        assert_eq!(c.alpha(1), rat_int(2));
        assert_eq!(c.alpha(2), rat_int(1));
        // (y1)^* stuffle (y1)^* = (2 y1 + y2)^*
        let lhs = a.star(4).stuffle(&a.star(4)).unwrap();
        let rhs = c.star(4);
        assert_eq!(lhs.to_poly(), rhs.to_poly());

        let b = PlaneSeries::single(2, rat_int(1), 4);
        let c = char_stuffle_product(&a, &b);
        assert_eq!(c.alpha(1), rat_int(1));
        assert_eq!(c.alpha(2), rat_int(1));
        assert_eq!(c.alpha(3), rat_int(1));

        let zero = PlaneSeries::zero_plane(4);
        assert_eq!(char_stuffle_product(&a, &zero), a);
    }

    #[test]
    fn char_inverse() {
        let a = PlaneSeries::single(1, rat_int(1), 6);
        let b = char_stuffle_inverse(&a);
        for n in 1..=6usize {
            assert_eq!(b.alpha(n), rat_int(if n % 2 == 0 { 1 } else { -1 }));
        }
        assert_eq!(char_stuffle_inverse(&PlaneSeries::<Rat>::zero_plane(5)), PlaneSeries::zero_plane(5));
        // Group law against a structured series.
        let a = PlaneSeries::new(vec![rat(1, 2), rat_int(-1), rat(2, 3), Rat::zero(), rat(1, 5), rat_int(3), rat(-7, 2), rat(1, 8)]);
        let b = char_stuffle_inverse(&a);
        assert!(char_stuffle_product(&a, &b).is_zero_plane());
        let lhs = a.star(8).stuffle(&b.star(8)).unwrap();
        assert_eq!(lhs.to_poly(), GradedSeries::<Rat>::one_series(Alphabet::Y, 8).to_poly());
    }

    #[test]
    fn one_param_group_basics() {
        let t = TaylorSeries::monomial("q", PolyQ::one(), 1, 6);
        // z = 0 gives the unit series.
        let g0 = one_param_group(&t, &PolyQ::zero_poly(), 4).unwrap();
        assert_eq!(g0.to_poly(), NCPolynomial::one_poly(Alphabet::Y));
        // Formal z: coefficient of y1 is z, of y2 is z^2/2.
        let z = PolyQ::var("z");
        let g = one_param_group(&t, &z, 2).unwrap();
        assert_eq!(g.coeff(&yw(&[1])), z.clone());
        assert_eq!(g.coeff(&yw(&[2])), z.pow(2).scale_rat(&rat(1, 2)));
    }

    #[test]
    fn one_param_group_law_formal() {
        // G(z1) ⊎ G(z2) = G(z1 + z2) with formal parameters, truncated at 4.
        let t = TaylorSeries::from_coeffs(
            "q",
            vec![PolyQ::zero_poly(), PolyQ::one(), PolyQ::constant(rat(1, 2)), PolyQ::constant(rat(-1, 3)), PolyQ::zero_poly()],
        );
        let z1 = PolyQ::var("z1");
        let z2 = PolyQ::var("z2");
        let g1 = one_param_group(&t, &z1, 4).unwrap();
        let g2 = one_param_group(&t, &z2, 4).unwrap();
        let sum = one_param_group(&t, &(z1 + &z2), 4).unwrap();
        assert_eq!(g1.stuffle(&g2).unwrap().to_poly(), sum.to_poly());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_y_poly() -> impl Strategy<Value = NCPolynomial<Rat>> {
            let word = prop::collection::vec(1u64..4, 1..4).prop_map(|v| Word::y_word(&v));
            let coeff = (-6i64..7, 1i64..5)
                .prop_map(|(n, d)| rat(if n == 0 { 1 } else { n }, d));
            prop::collection::vec((word, coeff), 1..4).prop_map(|terms| {
                let mut p = NCPolynomial::zero_poly(Alphabet::Y);
                for (w, c) in terms {
                    p.insert_add(w, c);
                }
                p
            })
        }

        fn arb_plane() -> impl Strategy<Value = PlaneSeries<Rat>> {
            prop::collection::vec(
                (-6i64..7, 1i64..5).prop_map(|(n, d)| rat(n, d)),
                6..=6,
            )
            .prop_map(PlaneSeries::new)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn stuffle_commutes_and_shuffle_too(p in arb_y_poly(), q in arb_y_poly()) {
                prop_assert_eq!(stuffle(&p, &q).unwrap(), stuffle(&q, &p).unwrap());
                prop_assert_eq!(shuffle(&p, &q).unwrap(), shuffle(&q, &p).unwrap());
            }

            #[test]
            fn stuffle_associates(p in arb_y_poly(), q in arb_y_poly(), r in arb_y_poly()) {
                let lhs = stuffle(&stuffle(&p, &q).unwrap(), &r).unwrap();
                let rhs = stuffle(&p, &stuffle(&q, &r).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn products_distribute_over_addition(p in arb_y_poly(), q in arb_y_poly(), r in arb_y_poly()) {
                let lhs = stuffle(&p.add(&q).unwrap(), &r).unwrap();
                let rhs = stuffle(&p, &r).unwrap().add(&stuffle(&q, &r).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn char_inverse_is_two_sided(a in arb_plane()) {
                let b = char_stuffle_inverse(&a);
                prop_assert!(char_stuffle_product(&a, &b).is_zero_plane());
                prop_assert!(char_stuffle_product(&b, &a).is_zero_plane());
            }

            #[test]
            fn char_product_matches_star_stuffle(a in arb_plane(), b in arb_plane()) {
                let closed = char_stuffle_product(&a, &b).star(6);
                let recursive = a.star(6).stuffle(&b.star(6)).unwrap();
                prop_assert_eq!(closed.to_poly(), recursive.to_poly());
            }

            #[test]
            fn umbral_roundtrip_random(a in arb_plane()) {
                prop_assert_eq!(PlaneSeries::umbral_decode(&a.umbral_encode()).unwrap(), a);
            }
        }
    }

    #[test]
    fn truncation_flag_is_sticky() {
        let p = poly(&[(yw(&[1]), rat_int(1)), (yw(&[2, 2, 2]), rat_int(1))]);
        let s = GradedSeries::from_poly(&p, 3);
        assert!(s.is_truncated());
        let t = GradedSeries::from_poly(&NCPolynomial::from_word(yw(&[1])), 3);
        assert!(!t.is_truncated());
        assert!(s.stuffle(&t).unwrap().is_truncated());
        // A product whose full expansion fits below the truncation stays exact.
        let u = GradedSeries::from_poly(&NCPolynomial::from_word(yw(&[2])), 3);
        assert!(!t.stuffle(&u).unwrap().is_truncated());
        // One that discards cross terms is marked even if inputs are exact.
        assert!(u.stuffle(&u).unwrap().is_truncated());
    }
}
