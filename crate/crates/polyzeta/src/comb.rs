//! Exact combinatorial kernels: Stirling numbers of the second kind,
//! surjection counts through shuffle powers of x1^+, and the EGF identity
//! Σ_n m! S2(n,m) x^n/n! = (e^x - 1)^m.
//!
//! Everything here is big-integer or big-rational; no floating point.

use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ncalg::{GradedSeries, NCPolynomial};
use crate::scalar::Rat;
use crate::taylor::TaylorSeries;
use crate::words::Word;

/// Triangular table of S2(n, m), grown on demand.
#[derive(Debug, Default)]
pub struct StirlingCache {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingCache {
    pub fn new() -> Self {
        StirlingCache { rows: vec![vec![BigUint::one()]] }
    }

    /// S2(n, m) via S2(n, m) = m·S2(n-1, m) + S2(n-1, m-1).
    pub fn get(&mut self, n: usize, m: usize) -> BigUint {
        while self.rows.len() <= n {
            let prev = self.rows.last().unwrap();
            let nn = self.rows.len();
            let mut row = vec![BigUint::zero(); nn + 1];
            for m in 1..=nn {
                let carry = if m < prev.len() { &prev[m] * BigUint::from(m) } else { BigUint::zero() };
                let diag = if m - 1 < prev.len() { prev[m - 1].clone() } else { BigUint::zero() };
                row[m] = carry + diag;
            }
            self.rows.push(row);
        }
        self.rows[n].get(m).cloned().unwrap_or_else(BigUint::zero)
    }
}

static STIRLING: Mutex<Option<StirlingCache>> = Mutex::new(None);

/// Stirling partition number S2(n, m).
pub fn stirling2(n: usize, m: usize) -> BigUint {
    let mut guard = STIRLING.lock().unwrap();
    guard.get_or_insert_with(StirlingCache::new).get(n, m)
}

pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// ⟨(x1^+)^{⧢m} | x1^n⟩ computed through the shuffle engine. Equals
/// m!·S2(n, m), the number of surjections \[n\] → \[m\]; the equality is what
/// the surjection suite cross-checks.
pub fn shuffle_power_coeff(m: usize, n: usize) -> Result<BigUint> {
    if m > 10 || n > 10 {
        return Err(Error::Domain(format!(
            "shuffle_power_coeff guard: m, n <= 10 (got m={m}, n={n})"
        )));
    }
    // x1^+ = x1 + x1^2 + ... truncated at length n.
    let mut plus = NCPolynomial::<Rat>::zero_poly(crate::words::Alphabet::X);
    for j in 1..=n.max(1) {
        plus.insert_add(Word::x_word(&vec![1u8; j]), Rat::one());
    }
    let base = GradedSeries::from_poly(&plus, n as u64);
    let mut power = GradedSeries::one_series(crate::words::Alphabet::X, n as u64);
    for _ in 0..m {
        power = power.shuffle(&base)?;
    }
    let target = Word::x_word(&vec![1u8; n]);
    let c = power.coeff(&target);
    rat_to_biguint(&c).ok_or_else(|| {
        Error::Domain("shuffle power coefficient is not a nonnegative integer".into())
    })
}

fn rat_to_biguint(r: &Rat) -> Option<BigUint> {
    if !r.is_integer() || r < &Rat::zero() {
        return None;
    }
    r.to_integer().to_biguint()
}

/// Checks Σ_n m! S2(n,m) x^n/n! = (e^x - 1)^m coefficientwise to order `d`,
/// in exact rational Taylor arithmetic.
pub fn egf_check(m: usize, d: usize) -> bool {
    assert!(m <= 8 && d <= 20, "egf_check guard: m <= 8, d <= 20");
    let em1 = TaylorSeries::from_coeffs(
        "x",
        (0..=d)
            .map(|n| if n == 0 { Rat::zero() } else { Rat::new(1.into(), factorial(n).into()) })
            .collect::<Vec<_>>(),
    );
    let lhs = em1.pow(m as u32).expect("same variable");
    let mf = factorial(m);
    for n in 0..=d {
        let expected = Rat::new((&mf * stirling2(n, m)).into(), factorial(n).into());
        if lhs.coeff(n) != expected {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(3, 2), BigUint::from(3u32));
        assert_eq!(stirling2(4, 2), BigUint::from(7u32));
        for n in 0..=8 {
            assert_eq!(stirling2(n, n), BigUint::one());
        }
        assert_eq!(stirling2(0, 0), BigUint::one());
        assert_eq!(stirling2(5, 0), BigUint::zero());
        assert_eq!(stirling2(2, 5), BigUint::zero());
    }

    /// Count surjections [n] -> [m] by direct enumeration.
    fn surjections(n: usize, m: usize) -> u64 {
        if n == 0 {
            return u64::from(m == 0);
        }
        let mut count = 0u64;
        let total = (m as u64).pow(n as u32);
        for code in 0..total {
            let mut hit = vec![false; m];
            let mut c = code;
            for _ in 0..n {
                hit[(c % m as u64) as usize] = true;
                c /= m as u64;
            }
            if hit.iter().all(|&h| h) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn surjection_count_matches_bruteforce() {
        for n in 0..=6 {
            for m in 1..=6 {
                let expected = BigUint::from(surjections(n, m));
                assert_eq!(factorial(m) * stirling2(n, m), expected, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn shuffle_power_matches_formula() {
        assert_eq!(shuffle_power_coeff(2, 3).unwrap(), BigUint::from(6u32));
        assert_eq!(shuffle_power_coeff(1, 5).unwrap(), BigUint::one());
        assert_eq!(shuffle_power_coeff(3, 3).unwrap(), BigUint::from(6u32));
        for m in 0..=6 {
            for n in 0..=6 {
                assert_eq!(
                    shuffle_power_coeff(m, n).unwrap(),
                    factorial(m) * stirling2(n, m),
                    "m={m} n={n}"
                );
            }
        }
        assert!(shuffle_power_coeff(11, 2).is_err());
    }

    #[test]
    fn egf_identity() {
        assert!(egf_check(0, 5));
        assert!(egf_check(2, 10));
        assert!(egf_check(3, 12));
    }
}
