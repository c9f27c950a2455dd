//! Coefficient rings for the word algebras: exact rationals, polynomials
//! over ℚ in named parameters, and (in `bigc`) arbitrary-precision complex
//! floats. Algebra containers are generic over [`Scalar`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Rational n/d.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(n.into(), d.into())
}

/// Commutative coefficient ring with a ℚ-action. The exact variants obey
/// the ring laws exactly; `BigC` is floating point at a fixed precision.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiply by an exact rational.
    fn scale_rat(&self, r: &Rat) -> Self;

    /// Embed an exact rational. For floating-point scalars this rounds to
    /// the value's working precision.
    fn from_rat(r: &Rat) -> Self;
}

impl Scalar for Rat {
    fn scale_rat(&self, r: &Rat) -> Self {
        self * r
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

/// A monomial: variable name → positive exponent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(BTreeMap<String, u32>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(BTreeMap::from([(name.to_string(), 1)]))
    }

    pub fn var_pow(name: &str, e: u32) -> Self {
        if e == 0 {
            return Monomial::unit();
        }
        Monomial(BTreeMap::from([(name.to_string(), e)]))
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (v, e) in &other.0 {
            *out.entry(v.clone()).or_insert(0) += e;
        }
        Monomial(out)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(v, e)| (v.as_str(), *e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Sparse polynomial over ℚ in named formal parameters (z, t, g, ...).
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PolyQ {
    terms: BTreeMap<Monomial, Rat>,
}

impl PolyQ {
    pub fn zero_poly() -> Self {
        PolyQ { terms: BTreeMap::new() }
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        PolyQ { terms }
    }

    pub fn var(name: &str) -> Self {
        PolyQ { terms: BTreeMap::from([(Monomial::var(name), Rat::one())]) }
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        PolyQ { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return Some(self.coeff(&Monomial::unit()));
        }
        None
    }

    pub fn pow(&self, e: u32) -> PolyQ {
        let mut acc = PolyQ::constant(Rat::one());
        for _ in 0..e {
            acc = acc * self;
        }
        acc
    }

    fn insert_add(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Substitute exact rationals for every variable. Panics if a variable
    /// has no assignment.
    pub fn eval_rat(&self, env: &BTreeMap<String, Rat>) -> Rat {
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.exponents() {
                let x = env
                    .get(v)
                    .unwrap_or_else(|| panic!("no value for parameter `{v}`"));
                for _ in 0..e {
                    term *= x;
                }
            }
            total += term;
        }
        total
    }

    /// Variables appearing in the polynomial.
    pub fn variables(&self) -> Vec<String> {
        let mut vars: Vec<String> = self
            .terms
            .keys()
            .flat_map(|m| m.exponents().map(|(v, _)| v.to_string()))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }
}

impl Add for PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: PolyQ) -> PolyQ {
        self + &rhs
    }
}

impl Add<&PolyQ> for PolyQ {
    type Output = PolyQ;
    fn add(mut self, rhs: &PolyQ) -> PolyQ {
        for (m, c) in &rhs.terms {
            self.insert_add(m.clone(), c.clone());
        }
        self
    }
}

impl Sub for PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: PolyQ) -> PolyQ {
        self - &rhs
    }
}

impl Sub<&PolyQ> for PolyQ {
    type Output = PolyQ;
    fn sub(mut self, rhs: &PolyQ) -> PolyQ {
        for (m, c) in &rhs.terms {
            self.insert_add(m.clone(), -c.clone());
        }
        self
    }
}

impl Mul for PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: PolyQ) -> PolyQ {
        self * &rhs
    }
}

impl Mul<&PolyQ> for PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        let mut out = PolyQ::zero_poly();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_add(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Zero for PolyQ {
    fn zero() -> Self {
        PolyQ::zero_poly()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PolyQ {
    fn one() -> Self {
        PolyQ::constant(Rat::one())
    }
}

impl Scalar for PolyQ {
    fn scale_rat(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return PolyQ::zero_poly();
        }
        PolyQ { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect() }
    }

    fn from_rat(r: &Rat) -> Self {
        PolyQ::constant(r.clone())
    }
}

// Ordered by (degree, monomial) for stable printing.
impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut entries: Vec<(&Monomial, &Rat)> = self.terms.iter().collect();
        entries.sort_by_key(|(m, _)| (m.degree(), (*m).clone()));
        let mut first = true;
        for (m, c) in entries {
            let negative = c < &Rat::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
            first = false;
        }
        Ok(())
    }
}
