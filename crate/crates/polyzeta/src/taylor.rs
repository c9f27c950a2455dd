//! Truncated power series in one variable with [`Scalar`] coefficients.
//!
//! A series of order D stores coefficients a_0..a_D. Binary operations
//! require the same variable and truncate to the smaller order, so every
//! stored coefficient of a result is the true coefficient of the
//! (mathematical) product of the inputs.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{Rat, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct TaylorSeries<K: Scalar> {
    var: String,
    coeffs: Vec<K>,
    /// True when the source of this data was itself weight-truncated, so
    /// the stored coefficients may miss contributions.
    pub truncated: bool,
    /// Optional radius-of-convergence hint carried for diagnostics.
    pub radius_hint: Option<f64>,
}

impl<K: Scalar> TaylorSeries<K> {
    pub fn zero_series(var: &str, order: usize) -> Self {
        TaylorSeries {
            var: var.to_string(),
            coeffs: vec![K::zero(); order + 1],
            truncated: false,
            radius_hint: None,
        }
    }

    pub fn from_coeffs(var: &str, coeffs: Vec<K>) -> Self {
        assert!(!coeffs.is_empty(), "a Taylor series stores at least a_0");
        TaylorSeries { var: var.to_string(), coeffs, truncated: false, radius_hint: None }
    }

    pub fn one_series(var: &str, order: usize) -> Self {
        let mut s = Self::zero_series(var, order);
        s.coeffs[0] = K::one();
        s
    }

    /// The monomial c·var^n, truncated at `order`.
    pub fn monomial(var: &str, c: K, n: usize, order: usize) -> Self {
        let mut s = Self::zero_series(var, order);
        if n <= order {
            s.coeffs[n] = c;
        }
        s
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> K {
        self.coeffs.get(n).cloned().unwrap_or_else(K::zero)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn is_zero_series(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(K::zero());
        }
        TaylorSeries {
            var: self.var.clone(),
            coeffs,
            truncated: self.truncated,
            radius_hint: self.radius_hint,
        }
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            return Err(Error::Domain(format!(
                "Taylor series in different variables: `{}` vs `{}`",
                self.var, other.var
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let d = self.order().min(other.order());
        let coeffs = (0..=d).map(|n| self.coeff(n) + &other.coeff(n)).collect();
        Ok(TaylorSeries {
            var: self.var.clone(),
            coeffs,
            truncated: self.truncated || other.truncated,
            radius_hint: None,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let d = self.order().min(other.order());
        let coeffs = (0..=d).map(|n| self.coeff(n) - &other.coeff(n)).collect();
        Ok(TaylorSeries {
            var: self.var.clone(),
            coeffs,
            truncated: self.truncated || other.truncated,
            radius_hint: None,
        })
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let d = self.order().min(other.order());
        let mut coeffs = vec![K::zero(); d + 1];
        for i in 0..=d {
            let a = self.coeff(i);
            if a.is_zero() {
                continue;
            }
            for j in 0..=d - i {
                let b = other.coeff(j);
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = std::mem::replace(&mut coeffs[i + j], K::zero()) + &(a.clone() * &b);
            }
        }
        Ok(TaylorSeries {
            var: self.var.clone(),
            coeffs,
            truncated: self.truncated || other.truncated,
            radius_hint: None,
        })
    }

    /// Coefficientwise (Hadamard) product, truncated to the smaller order.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let d = self.order().min(other.order());
        let coeffs = (0..=d).map(|n| self.coeff(n) * &other.coeff(n)).collect();
        Ok(TaylorSeries {
            var: self.var.clone(),
            coeffs,
            truncated: self.truncated || other.truncated,
            radius_hint: None,
        })
    }

    pub fn scale(&self, k: &K) -> Self {
        TaylorSeries {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|c| c.clone() * k).collect(),
            truncated: self.truncated,
            radius_hint: self.radius_hint,
        }
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        TaylorSeries {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|c| c.scale_rat(r)).collect(),
            truncated: self.truncated,
            radius_hint: self.radius_hint,
        }
    }

    pub fn neg(&self) -> Self {
        TaylorSeries {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            truncated: self.truncated,
            radius_hint: self.radius_hint,
        }
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one_series(&self.var, self.order());
        acc.truncated = self.truncated;
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// exp of a series with zero constant term: Σ self^m / m!.
    pub fn exp_proper(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::NotProper("exp of a series with nonzero constant term".into()));
        }
        let d = self.order();
        let mut acc = Self::one_series(&self.var, d);
        acc.truncated = self.truncated;
        let mut term = Self::one_series(&self.var, d);
        for m in 1..=d as u64 {
            term = term.mul(self)?.scale_rat(&Rat::new(1.into(), m.into()));
            if term.is_zero_series() {
                break;
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inverse_unit(&self) -> Result<Self> {
        if !self.coeff(0).is_one() {
            return Err(Error::NotProper("inverse requires constant term 1".into()));
        }
        let d = self.order();
        let mut inv = vec![K::zero(); d + 1];
        inv[0] = K::one();
        for n in 1..=d {
            let mut acc = K::zero();
            for (j, prev) in inv.iter().enumerate().take(n) {
                acc = acc + &(prev.clone() * &self.coeff(n - j));
            }
            inv[n] = -acc;
        }
        Ok(TaylorSeries {
            var: self.var.clone(),
            coeffs: inv,
            truncated: self.truncated,
            radius_hint: None,
        })
    }

    /// Writes `order,coefficient` CSV rows.
    pub fn to_csv<W: std::io::Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "order,coefficient")?;
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(out, "{n},{c}")?;
        }
        Ok(())
    }
}

impl TaylorSeries<Rat> {
    /// Evaluate at an exact rational point.
    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl<K: Scalar> fmt::Display for TaylorSeries<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            if n == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}^{n}", self.var)?;
            } else {
                write!(f, "({c})*{}^{n}", self.var)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use num_traits::One;

    fn geom(order: usize) -> TaylorSeries<Rat> {
        TaylorSeries::from_coeffs("z", vec![Rat::one(); order + 1])
    }

    #[test]
    fn cauchy_product() {
        // (1/(1-z))^2 = sum (n+1) z^n
        let g = geom(6);
        let sq = g.mul(&g).unwrap();
        for n in 0..=6 {
            assert_eq!(sq.coeff(n), rat_int(n as i64 + 1));
        }
    }

    #[test]
    fn hadamard_unit() {
        let g = geom(5);
        let f = TaylorSeries::from_coeffs(
            "z",
            (0..=5).map(|n| rat(1, n as i64 + 1)).collect::<Vec<_>>(),
        );
        assert_eq!(g.hadamard(&f).unwrap(), f);
    }

    #[test]
    fn exp_of_log_geometric() {
        // exp(-log(1-z)) = 1/(1-z)
        let log = TaylorSeries::from_coeffs(
            "z",
            (0..=8).map(|n| if n == 0 { Rat::zero() } else { rat(1, n as i64) }).collect::<Vec<_>>(),
        );
        assert_eq!(log.exp_proper().unwrap(), geom(8));
    }

    #[test]
    fn inverse_of_one_plus_z() {
        let one_plus = TaylorSeries::from_coeffs("z", vec![rat_int(1), rat_int(1), Rat::zero()]);
        let inv = one_plus.inverse_unit().unwrap();
        assert_eq!(inv.coeff(0), rat_int(1));
        assert_eq!(inv.coeff(1), rat_int(-1));
        assert_eq!(inv.coeff(2), rat_int(1));
    }

    #[test]
    fn variable_mismatch_is_error() {
        let a = geom(3);
        let b = TaylorSeries::from_coeffs("q", vec![Rat::one(); 4]);
        assert!(a.mul(&b).is_err());
    }
}
