//! Crate-wide error type.

use std::fmt;

use crate::words::Alphabet;

/// Errors surfaced by the algebraic and numeric layers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two operands live over different alphabets.
    AlphabetMismatch { expected: Alphabet, found: Alphabet },
    /// Input is outside the domain of the operation (π_Y outside X*x1,
    /// divergent word where a convergent one is required, |z| ≥ 1, ...).
    Domain(String),
    /// A star or exponential was requested for a series with a nonzero
    /// constant term.
    NotProper(String),
    /// Polynomial support exceeds the truncation weight of a series.
    Truncation(String),
    /// The requested tolerance cannot be met within the configured budget.
    Tolerance(String),
    /// Expression syntax error, with byte position and expectation.
    Parse(ParseError),
}

/// Syntax error produced by the expression grammar.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    /// Byte offset into the input where the error was detected.
    pub position: usize,
    /// What the parser expected at that point.
    pub expected: String,
    /// What it found instead.
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at byte {}: expected {}, found {}",
            self.position, self.expected, self.found
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AlphabetMismatch { expected, found } => {
                write!(f, "alphabet mismatch: expected {expected}, found {found}")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NotProper(msg) => write!(f, "series is not proper: {msg}"),
            Error::Truncation(msg) => write!(f, "truncation exceeded: {msg}"),
            Error::Tolerance(msg) => write!(f, "tolerance not achievable: {msg}"),
            Error::Parse(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for Error {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
