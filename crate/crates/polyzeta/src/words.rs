//! Words over the alphabets X = {x0, x1} and Y = {y1, y2, ...}, their
//! weights, and the coding maps π_X / π_Y between them.
//!
//! A Y-letter y_s corresponds to the X-block x0^{s-1} x1; π_X substitutes
//! letterwise and π_Y inverts it on words that are empty or end in x1.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which alphabet a word lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alphabet {
    X,
    Y,
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alphabet::X => write!(f, "X"),
            Alphabet::Y => write!(f, "Y"),
        }
    }
}

/// A single letter: x0/x1 or y_s with s ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    /// X-letter with index 0 or 1.
    X(u8),
    /// Y-letter with index s ≥ 1.
    Y(u64),
}

impl Letter {
    pub fn x(i: u8) -> Self {
        assert!(i <= 1, "X-letter index must be 0 or 1");
        Letter::X(i)
    }

    pub fn y(s: u64) -> Self {
        assert!(s >= 1, "Y-letter index must be >= 1");
        Letter::Y(s)
    }

    pub fn alphabet(&self) -> Alphabet {
        match self {
            Letter::X(_) => Alphabet::X,
            Letter::Y(_) => Alphabet::Y,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X(i) => write!(f, "x{i}"),
            Letter::Y(s) => write!(f, "y{s}"),
        }
    }
}

/// A word: an ordered sequence of letter indices over one alphabet.
/// The empty word is the monoid unit and is written `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    // X: indices in {0, 1}; Y: indices >= 1.
    indices: Vec<u64>,
}

impl Word {
    pub fn empty(alphabet: Alphabet) -> Self {
        Word { alphabet, indices: Vec::new() }
    }

    /// Word over X from indices in {0, 1}.
    pub fn x_word(indices: &[u8]) -> Self {
        assert!(indices.iter().all(|&i| i <= 1), "X-letter index must be 0 or 1");
        Word { alphabet: Alphabet::X, indices: indices.iter().map(|&i| u64::from(i)).collect() }
    }

    /// Word over Y from indices ≥ 1.
    pub fn y_word(indices: &[u64]) -> Self {
        assert!(indices.iter().all(|&s| s >= 1), "Y-letter index must be >= 1");
        Word { alphabet: Alphabet::Y, indices: indices.to_vec() }
    }

    pub fn from_letters(alphabet: Alphabet, letters: &[Letter]) -> Result<Self> {
        let mut indices = Vec::with_capacity(letters.len());
        for l in letters {
            if l.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch { expected: alphabet, found: l.alphabet() });
            }
            indices.push(match l {
                Letter::X(i) => u64::from(*i),
                Letter::Y(s) => *s,
            });
        }
        Ok(Word { alphabet, indices })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[u64] {
        &self.indices
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        let alphabet = self.alphabet;
        self.indices.iter().map(move |&i| match alphabet {
            Alphabet::X => Letter::X(i as u8),
            Alphabet::Y => Letter::Y(i),
        })
    }

    /// Weight: sum of indices over Y, length over X.
    pub fn weight(&self) -> u64 {
        match self.alphabet {
            Alphabet::X => self.indices.len() as u64,
            Alphabet::Y => self.indices.iter().sum(),
        }
    }

    /// Concatenation with another word of the same alphabet.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch { expected: self.alphabet, found: other.alphabet });
        }
        let mut indices = self.indices.clone();
        indices.extend_from_slice(&other.indices);
        Ok(Word { alphabet: self.alphabet, indices })
    }

    /// Prepend a single letter index (same-alphabet, unchecked index range
    /// is the caller's invariant).
    pub(crate) fn prepend(&self, index: u64) -> Word {
        let mut indices = Vec::with_capacity(self.indices.len() + 1);
        indices.push(index);
        indices.extend_from_slice(&self.indices);
        Word { alphabet: self.alphabet, indices }
    }

    pub(crate) fn first(&self) -> Option<u64> {
        self.indices.first().copied()
    }

    pub(crate) fn tail(&self) -> Word {
        Word { alphabet: self.alphabet, indices: self.indices[1..].to_vec() }
    }
}

// Canonical total order: alphabet, then weight, then lexicographic on the
// index sequence. Keeps iteration and printing deterministic.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.alphabet
            .cmp(&other.alphabet)
            .then_with(|| self.weight().cmp(&other.weight()))
            .then_with(|| self.indices.cmp(&other.indices))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for l in self.letters() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses the word literal syntax: whitespace-separated letters
    /// (`x0 x1`, `y2 y1`), with `1` for the empty word. The alphabet is
    /// inferred from the letters; a bare `1` parses as the empty Y-word.
    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.len() == 1 && toks[0] == "1" {
            return Ok(Word::empty(Alphabet::Y));
        }
        let mut letters = Vec::with_capacity(toks.len());
        for t in &toks {
            letters.push(parse_letter(t)?);
        }
        if letters.is_empty() {
            return Err(Error::Parse(crate::error::ParseError {
                position: 0,
                expected: "word literal".into(),
                found: "empty input".into(),
            }));
        }
        let alphabet = letters[0].alphabet();
        Word::from_letters(alphabet, &letters)
    }
}

pub(crate) fn parse_letter(t: &str) -> Result<Letter> {
    let err = |expected: &str| {
        Error::Parse(crate::error::ParseError {
            position: 0,
            expected: expected.into(),
            found: t.into(),
        })
    };
    if let Some(rest) = t.strip_prefix('x') {
        match rest {
            "0" => Ok(Letter::X(0)),
            "1" => Ok(Letter::X(1)),
            _ => Err(err("x0 or x1")),
        }
    } else if let Some(rest) = t.strip_prefix('y') {
        let s: u64 = rest.parse().map_err(|_| err("y<positive integer>"))?;
        if s == 0 {
            return Err(err("y<positive integer> (indices start at 1)"));
        }
        Ok(Letter::Y(s))
    } else {
        Err(err("letter x0|x1|y<n>"))
    }
}

/// π_X: letterwise substitution y_s ↦ x0^{s-1} x1.
pub fn pi_x(w: &Word) -> Word {
    assert_eq!(w.alphabet(), Alphabet::Y, "pi_x expects a Y-word");
    let mut indices = Vec::with_capacity(w.weight() as usize);
    for &s in w.indices() {
        indices.extend(std::iter::repeat_n(0, (s - 1) as usize));
        indices.push(1);
    }
    Word { alphabet: Alphabet::X, indices }
}

/// π_Y: inverse of π_X on X*x1 ⊕ ℚ·1. Fails on words ending in x0.
pub fn pi_y(w: &Word) -> Result<Word> {
    assert_eq!(w.alphabet(), Alphabet::X, "pi_y expects an X-word");
    if w.is_empty() {
        return Ok(Word::empty(Alphabet::Y));
    }
    if *w.indices().last().unwrap() != 1 {
        return Err(Error::Domain(format!(
            "pi_y: word `{w}` ends in x0, outside Im(pi_X) = X*x1"
        )));
    }
    let mut out = Vec::new();
    let mut zeros: u64 = 0;
    for &i in w.indices() {
        if i == 0 {
            zeros += 1;
        } else {
            out.push(zeros + 1);
            zeros = 0;
        }
    }
    Ok(Word { alphabet: Alphabet::Y, indices: out })
}

/// A Y-word indexes a convergent polyzeta iff it is empty or starts with an
/// index ≥ 2 (equivalently w ∉ y1 Y*).
pub fn is_convergent(w: &Word) -> bool {
    assert_eq!(w.alphabet(), Alphabet::Y, "is_convergent expects a Y-word");
    match w.first() {
        None => true,
        Some(s) => s >= 2,
    }
}

/// All Y-words of weight exactly `w` (compositions of w), in canonical order.
pub fn y_words_of_weight(w: u64) -> Vec<Word> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u64, current: &mut Vec<u64>, out: &mut Vec<Word>) {
        if remaining == 0 {
            out.push(Word::y_word(current));
            return;
        }
        for first in 1..=remaining {
            current.push(first);
            rec(remaining - first, current, out);
            current.pop();
        }
    }
    rec(w, &mut current, &mut out);
    out.sort();
    out
}

/// All Y-words of weight ≤ `max_weight`, including the empty word.
pub fn enumerate_y_words(max_weight: u64) -> Vec<Word> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        out.extend(y_words_of_weight(w));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(v: &[u64]) -> Word {
        Word::y_word(v)
    }

    fn x(v: &[u8]) -> Word {
        Word::x_word(v)
    }

    #[test]
    fn weights() {
        assert_eq!(y(&[3, 1]).weight(), 4);
        assert_eq!(Word::empty(Alphabet::Y).weight(), 0);
        assert_eq!(x(&[0, 1, 1]).weight(), 3);
    }

    #[test]
    fn pi_x_substitution() {
        assert_eq!(pi_x(&y(&[2, 1])), x(&[0, 1, 1]));
        assert_eq!(pi_x(&Word::empty(Alphabet::Y)), Word::empty(Alphabet::X));
        assert_eq!(pi_x(&y(&[3])), x(&[0, 0, 1]));
    }

    #[test]
    fn pi_y_inverse() {
        assert_eq!(pi_y(&x(&[0, 1, 1])).unwrap(), y(&[2, 1]));
        assert_eq!(pi_y(&Word::empty(Alphabet::X)).unwrap(), Word::empty(Alphabet::Y));
        assert!(matches!(pi_y(&x(&[1, 0])), Err(Error::Domain(_))));
    }

    #[test]
    fn pi_roundtrip_and_weight() {
        // All Y-words of weight <= 6.
        for w in crate::words::enumerate_y_words(6) {
            let im = pi_x(&w);
            assert_eq!(pi_y(&im).unwrap(), w);
            assert_eq!(im.len() as u64, w.weight());
        }
    }

    #[test]
    fn convergence() {
        assert!(is_convergent(&y(&[2, 1])));
        assert!(!is_convergent(&y(&[1, 2])));
        assert!(is_convergent(&Word::empty(Alphabet::Y)));
    }

    #[test]
    fn convergent_iff_image_avoids_leading_x1() {
        for w in crate::words::enumerate_y_words(5) {
            if w.is_empty() {
                continue;
            }
            let im = pi_x(&w);
            assert_eq!(is_convergent(&w), im.first() != Some(1));
        }
    }

    #[test]
    fn word_order_is_by_weight_then_lex() {
        let y2 = y(&[2]);
        let y11 = y(&[1, 1]);
        // Same weight; [1,1] < [2] lexicographically.
        assert!(y11 < y2);
        assert!(y(&[1]) < y11);
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in ["1", "y2 y1", "x0 x1 x1", "y12"] {
            let w: Word = s.parse().unwrap();
            let printed = w.to_string();
            let again: Word = printed.parse().unwrap();
            // `1` normalizes to the empty Y-word.
            assert_eq!(w, again);
        }
        assert!("y0".parse::<Word>().is_err());
        assert!("x2".parse::<Word>().is_err());
    }
}
