//! Exact symbolic calculus of polylogarithms and harmonic sums around
//! z = 0: shuffle and stuffle algebras on words over X = {x0, x1} and
//! Y = {y1, y2, ...}, Kleene stars of plane series and their character
//! group, exact harmonic sums and polylogarithm Taylor data, stuffle
//! regularization with the γ-character, and the eulerian functions
//! Γ_{y_k}^{-1} evaluated to arbitrary precision.
//!
//! The algebraic layer is exact (big rationals, or polynomials over ℚ in
//! formal parameters); the numeric layer carries explicit precision
//! contexts and error bounds. Identity-level results are wired into named
//! verification suites (see [`verify`]) runnable from the CLI or the
//! acceptance test.
//!
//! ```
//! use polyzeta::ncalg::{stuffle, NCPolynomial};
//! use polyzeta::scalar::Rat;
//! use polyzeta::words::Word;
//!
//! let y1 = NCPolynomial::<Rat>::from_word(Word::y_word(&[1]));
//! let y2 = NCPolynomial::<Rat>::from_word(Word::y_word(&[2]));
//! assert_eq!(stuffle(&y1, &y2).unwrap().to_string(), "y1 y2 + y2 y1 + y3");
//! ```

pub mod bigc;
pub mod cli;
pub mod comb;
pub mod error;
pub mod harmonic;
pub mod ncalg;
pub mod scalar;
pub mod taylor;
pub mod verify;
pub mod words;
pub mod zeta;

pub use bigc::{BigC, PrecisionContext};
pub use error::{Error, Result};
pub use ncalg::{GradedSeries, NCPolynomial, PlaneSeries};
pub use scalar::{PolyQ, Rat, Scalar};
pub use taylor::TaylorSeries;
pub use words::{Alphabet, Letter, Word};
