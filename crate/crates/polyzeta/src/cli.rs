//! Command-line front end: parse word/series expressions, run computations,
//! emit text/JSON/CSV, and run the named verification suites.
//!
//! Exit codes: 0 success (identity holds), 1 identity violated, 2 parse
//! error, 3 domain error, 4 requested precision/tolerance not achievable.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bigc::{BigC, PrecisionContext};
use crate::error::{Error, ParseError, Result};
use crate::harmonic::{hsum_poly, li_coeffs, li_over_1mz_coeffs, HarmonicTable};
use crate::ncalg::{conc, shuffle, stuffle, GradedSeries, NCPolynomial};
use crate::scalar::Rat;
use num_traits::One;
use crate::verify::{run_all, run_suite, VerifyOptions};
use crate::words::{parse_letter, Alphabet, Word};
use crate::zeta::{
    ell, gamma_char, inv_gamma_yk, mzv, predicted_zeros, reflection_check, stuffle_regularize,
    zeta_int, CharacterValue, EvalMode,
};

// ------------------------------------------------------------- expression

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star,
    Number { numer: i64, denom: i64, literal_one: bool },
    Letter(crate::words::Letter),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        match c {
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: i64 = text[start..i].parse().map_err(|_| {
                    Error::Parse(ParseError {
                        position: start,
                        expected: "integer".into(),
                        found: text[start..i].into(),
                    })
                })?;
                let mut denom = 1i64;
                let mut literal_one = numer == 1;
                if i < bytes.len() && bytes[i] == b'/' {
                    literal_one = false;
                    i += 1;
                    let dstart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if dstart == i {
                        return Err(Error::Parse(ParseError {
                            position: i,
                            expected: "positive integer denominator".into(),
                            found: text.get(i..i + 1).unwrap_or("end of input").into(),
                        }));
                    }
                    denom = text[dstart..i].parse().map_err(|_| {
                        Error::Parse(ParseError {
                            position: dstart,
                            expected: "positive integer denominator".into(),
                            found: text[dstart..i].into(),
                        })
                    })?;
                    if denom == 0 {
                        return Err(Error::Parse(ParseError {
                            position: dstart,
                            expected: "nonzero denominator".into(),
                            found: "0".into(),
                        }));
                    }
                }
                out.push((start, Token::Number { numer, denom, literal_one }));
            }
            'x' | 'y' => {
                let start = i;
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let letter = parse_letter(&text[start..i]).map_err(|e| match e {
                    Error::Parse(mut p) => {
                        p.position = start;
                        Error::Parse(p)
                    }
                    other => other,
                })?;
                out.push((start, Token::Letter(letter)));
            }
            other => {
                return Err(Error::Parse(ParseError {
                    position: i,
                    expected: "letter, rational, `+`, `-` or `*`".into(),
                    found: other.to_string(),
                }));
            }
        }
    }
    Ok(out)
}

/// Parses the linear-combination grammar
/// `expr := term ((+|-) term)*; term := [rational *] word; word := 1 | letter+`
/// into an exact-rational polynomial. The alphabet is inferred from the
/// first letter; constant-only expressions default to Y.
pub fn parse_expression(text: &str) -> Result<NCPolynomial<Rat>> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse(ParseError {
            position: 0,
            expected: "expression".into(),
            found: "empty input".into(),
        }));
    }
    let alphabet = tokens
        .iter()
        .find_map(|(_, t)| match t {
            Token::Letter(l) => Some(l.alphabet()),
            _ => None,
        })
        .unwrap_or(Alphabet::Y);

    let mut poly = NCPolynomial::zero_poly(alphabet);
    let mut pos = 0usize;
    let mut sign = Rat::from_integer(1.into());
    loop {
        // Optional leading sign for the first term was consumed as an
        // operator below; parse one term here.
        let (coeff, word) = parse_term(text, &tokens, &mut pos, alphabet)?;
        poly.insert_add(word, coeff * &sign);
        if pos >= tokens.len() {
            break;
        }
        match &tokens[pos].1 {
            Token::Plus => sign = Rat::from_integer(1.into()),
            Token::Minus => sign = Rat::from_integer((-1).into()),
            _ => {
                return Err(Error::Parse(ParseError {
                    position: tokens[pos].0,
                    expected: "`+` or `-`".into(),
                    found: describe(&tokens[pos].1),
                }));
            }
        }
        pos += 1;
        if pos >= tokens.len() {
            return Err(Error::Parse(ParseError {
                position: text.len(),
                expected: "term after operator".into(),
                found: "end of input".into(),
            }));
        }
    }
    Ok(poly)
}

fn describe(t: &Token) -> String {
    match t {
        Token::Plus => "`+`".into(),
        Token::Minus => "`-`".into(),
        Token::Star => "`*`".into(),
        Token::Number { numer, denom, .. } => {
            if *denom == 1 {
                format!("number {numer}")
            } else {
                format!("number {numer}/{denom}")
            }
        }
        Token::Letter(l) => format!("letter {l}"),
    }
}

fn parse_term(
    text: &str,
    tokens: &[(usize, Token)],
    pos: &mut usize,
    alphabet: Alphabet,
) -> Result<(Rat, Word)> {
    // Leading sign on the very first term.
    let mut sign = Rat::from_integer(1.into());
    if *pos == 0 {
        if let Some((_, Token::Minus)) = tokens.first() {
            sign = -sign;
            *pos += 1;
        } else if let Some((_, Token::Plus)) = tokens.first() {
            *pos += 1;
        }
    }
    let Some((tpos, tok)) = tokens.get(*pos) else {
        return Err(Error::Parse(ParseError {
            position: text.len(),
            expected: "term".into(),
            found: "end of input".into(),
        }));
    };
    match tok {
        Token::Number { numer, denom, literal_one } => {
            *pos += 1;
            let coeff = Rat::new((*numer).into(), (*denom).into());
            match tokens.get(*pos) {
                Some((_, Token::Star)) => {
                    *pos += 1;
                    let word = parse_word(text, tokens, pos, alphabet)?;
                    Ok((coeff * sign, word))
                }
                _ if *literal_one => Ok((sign, Word::empty(alphabet))),
                _ => Err(Error::Parse(ParseError {
                    position: *tpos,
                    expected: "`*` followed by a word (bare numbers other than `1` are not words)"
                        .into(),
                    found: describe(tok),
                })),
            }
        }
        Token::Letter(_) => {
            let word = parse_word(text, tokens, pos, alphabet)?;
            Ok((sign, word))
        }
        other => Err(Error::Parse(ParseError {
            position: *tpos,
            expected: "term (rational, word or `1`)".into(),
            found: describe(other),
        })),
    }
}

fn parse_word(
    text: &str,
    tokens: &[(usize, Token)],
    pos: &mut usize,
    alphabet: Alphabet,
) -> Result<Word> {
    match tokens.get(*pos) {
        Some((_, Token::Number { literal_one: true, .. })) => {
            *pos += 1;
            Ok(Word::empty(alphabet))
        }
        Some((tpos, Token::Letter(_))) => {
            let mut letters = Vec::new();
            while let Some((lpos, Token::Letter(l))) = tokens.get(*pos) {
                if l.alphabet() != alphabet {
                    return Err(Error::Parse(ParseError {
                        position: *lpos,
                        expected: format!("letter over alphabet {alphabet}"),
                        found: format!("{l}"),
                    }));
                }
                letters.push(*l);
                *pos += 1;
            }
            Word::from_letters(alphabet, &letters).map_err(|_| {
                Error::Parse(ParseError {
                    position: *tpos,
                    expected: "word over one alphabet".into(),
                    found: "mixed alphabets".into(),
                })
            })
        }
        Some((tpos, other)) => Err(Error::Parse(ParseError {
            position: *tpos,
            expected: "word (`1` or letters)".into(),
            found: describe(other),
        })),
        None => Err(Error::Parse(ParseError {
            position: text.len(),
            expected: "word".into(),
            found: "end of input".into(),
        })),
    }
}

fn parse_y_word(text: &str) -> Result<Word> {
    let w: Word = text.parse()?;
    if w.alphabet() != Alphabet::Y {
        return Err(Error::Domain(format!("expected a Y-word, got `{w}`")));
    }
    Ok(w)
}

/// Re-tag a constants-only polynomial onto a required alphabet.
fn coerce_alphabet(p: NCPolynomial<Rat>, alphabet: Alphabet) -> Result<NCPolynomial<Rat>> {
    if p.alphabet() == alphabet {
        return Ok(p);
    }
    if p.terms().all(|(w, _)| w.is_empty()) {
        let mut out = NCPolynomial::zero_poly(alphabet);
        for (_, c) in p.terms() {
            out.insert_add(Word::empty(alphabet), c.clone());
        }
        return Ok(out);
    }
    Err(Error::AlphabetMismatch { expected: alphabet, found: p.alphabet() })
}

/// Parses `a+bi` complex literals (also bare reals and `i`).
fn parse_complex(text: &str, ctx: &PrecisionContext) -> Result<BigC> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || {
        Error::Parse(ParseError {
            position: 0,
            expected: "complex literal like `0.4+0.2i`".into(),
            found: text.into(),
        })
    };
    if let Some(im_part) = s.strip_suffix('i') {
        // Split at the last +/- that is not an exponent sign or leading.
        let chars: Vec<char> = im_part.chars().collect();
        let mut split = None;
        for j in (1..chars.len()).rev() {
            if (chars[j] == '+' || chars[j] == '-') && chars[j - 1] != 'e' && chars[j - 1] != 'E' {
                split = Some(j);
                break;
            }
        }
        let (re_str, im_str) = match split {
            Some(j) => (&im_part[..j], &im_part[j..]),
            None => ("0", im_part),
        };
        let im_str = match im_str {
            "" | "+" => "1",
            "-" => "-1",
            other => other,
        };
        let re: f64 = re_str.parse().map_err(|_| err())?;
        let im: f64 = im_str.parse().map_err(|_| err())?;
        Ok(BigC::from_f64s(re, im, ctx))
    } else {
        let re: f64 = s.parse().map_err(|_| err())?;
        Ok(BigC::from_f64s(re, 0.0, ctx))
    }
}

// ------------------------------------------------------------------ clap

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProductOp {
    Conc,
    Shuffle,
    Stuffle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GammaMode {
    Series,
    Product,
}

#[derive(Debug, Parser)]
#[command(
    name = "polyzeta",
    about = "Shuffle/stuffle word algebra, exact harmonic sums, polyzetas and eulerian functions",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Product of two expressions in the word algebra.
    Product {
        /// conc, shuffle or stuffle
        #[arg(long, value_enum)]
        op: ProductOp,
        a: String,
        b: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Exact harmonic sum H_P(N) of a Y-expression.
    Hsum {
        expr: String,
        /// Upper summation bound N.
        #[arg(long)]
        upper: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Taylor coefficients of Li_P at 0 (with --quotient, of Li_P/(1-z)).
    Li {
        expr: String,
        /// Truncation order D.
        #[arg(long)]
        order: usize,
        /// Expand Li_P/(1-z) instead of Li_P.
        #[arg(long)]
        quotient: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Kleene star (under concatenation) of a proper expression.
    Star {
        expr: String,
        /// Truncation weight W.
        #[arg(long)]
        trunc: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Stuffle exponential of a proper Y-expression.
    StuffleExp {
        expr: String,
        #[arg(long)]
        trunc: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Stuffle regularization of a Y-word: a polynomial in g over
    /// convergent words.
    Regularize {
        word: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// zeta(n) for integer n >= 2.
    Zeta {
        n: i64,
        #[arg(long, default_value_t = 50)]
        prec: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Numeric polyzeta of a convergent Y-word (oracle grade).
    Mzv {
        word: String,
        #[arg(long, default_value_t = 30)]
        prec: usize,
        /// Required tolerance; exit 4 if unachievable.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// gamma character of a Y-expression (g -> Euler gamma, convergent
    /// words -> polyzetas).
    GammaChar {
        expr: String,
        #[arg(long, default_value_t = 30)]
        prec: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Exponent series ell_k(z), |z| < 1.
    Ell {
        k: u64,
        z: String,
        #[arg(long, default_value_t = 50)]
        prec: usize,
        /// Fixed term count (default: adaptive).
        #[arg(long)]
        terms: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Inverse eulerian function Gamma_{y_k}^{-1}(1+z) = exp(ell_k(z)).
    InvGamma {
        k: u64,
        z: String,
        #[arg(long, value_enum, default_value = "product")]
        mode: GammaMode,
        #[arg(long, default_value_t = 50)]
        prec: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Predicted zeros of Gamma_{y_r}^{-1}(1+z) up to a radius.
    Zeros {
        r: u64,
        #[arg(long, default_value_t = 3.2)]
        bound: f64,
        #[arg(long, default_value_t = 30)]
        prec: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Check the generalized reflection formula at a point.
    Reflect {
        r: u64,
        z: String,
        #[arg(long, default_value_t = 50)]
        prec: usize,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Run a named verification suite (or `all`); exit 0 iff it holds.
    Verify {
        /// Suite name; `list` prints the available suites.
        suite: String,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
        #[arg(long, default_value_t = 50)]
        prec: usize,
    },
}

/// Entry point used by the binary. Returns the process exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        Error::Tolerance(_) => 4,
        Error::AlphabetMismatch { .. }
        | Error::Domain(_)
        | Error::NotProper(_)
        | Error::Truncation(_) => 3,
    }
}

fn print_character_value(
    operation: &str,
    inputs: serde_json::Value,
    v: &CharacterValue,
    digits: usize,
    format: OutputFormat,
) {
    match format {
        OutputFormat::Json => {
            let out = json!({
                "operation": operation,
                "inputs": inputs,
                "value": { "re": v.value.re.to_string(), "im": v.value.im.to_string() },
                "error_bound": v.error_bound,
                "precision_digits": digits,
            });
            println!("{out}");
        }
        _ => println!("{v}"),
    }
}

pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Product { op, a, b, format } => {
            let pa = parse_expression(&a)?;
            let pb = parse_expression(&b)?;
            // A constants-only operand adopts the other side's alphabet.
            let (pa, pb) = if pa.terms().all(|(w, _)| w.is_empty()) {
                (coerce_alphabet(pa, pb.alphabet())?, pb)
            } else {
                let pb = coerce_alphabet(pb, pa.alphabet())?;
                (pa, pb)
            };
            let result = match op {
                ProductOp::Conc => conc(&pa, &pb)?,
                ProductOp::Shuffle => shuffle(&pa, &pb)?,
                ProductOp::Stuffle => stuffle(&pa, &pb)?,
            };
            match format {
                OutputFormat::Json => {
                    let out = json!({
                        "operation": format!("product:{op:?}").to_lowercase(),
                        "inputs": { "a": a, "b": b },
                        "value": result.to_string(),
                    });
                    println!("{out}");
                }
                _ => println!("{result}"),
            }
            Ok(0)
        }
        Command::Hsum { expr, upper, format } => {
            let p = coerce_alphabet(parse_expression(&expr)?, Alphabet::Y)?;
            match format {
                OutputFormat::Csv => {
                    // Per-word tables only make sense for single words.
                    let mut words: Vec<_> = p.terms().collect();
                    if words.len() != 1 || !words[0].1.is_one() {
                        return Err(Error::Domain(
                            "CSV harmonic tables require a single word expression".into(),
                        ));
                    }
                    let w = words.remove(0).0.clone();
                    let cache = crate::harmonic::HarmonicCache::new();
                    let table: HarmonicTable = cache.harmonic_table(&w, upper);
                    table.to_csv(std::io::stdout().lock()).map_err(|e| Error::Domain(e.to_string()))?;
                }
                OutputFormat::Json => {
                    let v = hsum_poly(&p, upper)?;
                    println!("{}", json!({ "operation": "hsum", "inputs": { "expr": expr, "upper": upper }, "value": v.to_string() }));
                }
                OutputFormat::Text => println!("{}", hsum_poly(&p, upper)?),
            }
            Ok(0)
        }
        Command::Li { expr, order, quotient, format } => {
            let p = coerce_alphabet(parse_expression(&expr)?, Alphabet::X)?;
            let series = if quotient {
                li_over_1mz_coeffs(&GradedSeries::from_poly(&p, p.max_weight()), order)?
            } else {
                li_coeffs(&p, order)?
            };
            match format {
                OutputFormat::Csv => {
                    series.to_csv(std::io::stdout().lock()).map_err(|e| Error::Domain(e.to_string()))?;
                }
                OutputFormat::Json => {
                    let coeffs: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
                    println!("{}", json!({ "operation": if quotient { "li-over-1mz" } else { "li" }, "inputs": { "expr": expr, "order": order }, "value": coeffs }));
                }
                OutputFormat::Text => println!("{series}"),
            }
            Ok(0)
        }
        Command::Star { expr, trunc, format } => {
            let p = parse_expression(&expr)?;
            let star = GradedSeries::from_poly(&p, trunc).conc_star(trunc)?;
            match format {
                OutputFormat::Json => {
                    println!("{}", json!({ "operation": "star", "inputs": { "expr": expr, "trunc": trunc }, "value": star.to_string() }));
                }
                _ => println!("{star}"),
            }
            Ok(0)
        }
        Command::StuffleExp { expr, trunc, format } => {
            let p = coerce_alphabet(parse_expression(&expr)?, Alphabet::Y)?;
            let e = GradedSeries::from_poly(&p, trunc).stuffle_exp(trunc)?;
            match format {
                OutputFormat::Json => {
                    println!("{}", json!({ "operation": "stuffle-exp", "inputs": { "expr": expr, "trunc": trunc }, "value": e.to_string() }));
                }
                _ => println!("{e}"),
            }
            Ok(0)
        }
        Command::Regularize { word, format } => {
            let w = parse_y_word(&word)?;
            let r = stuffle_regularize(&w);
            match format {
                OutputFormat::Json => {
                    let parts: Vec<String> = r.parts().iter().map(|p| p.to_string()).collect();
                    println!("{}", json!({ "operation": "regularize", "inputs": { "word": word }, "value": r.to_string(), "g_parts": parts }));
                }
                _ => println!("{r}"),
            }
            Ok(0)
        }
        Command::Zeta { n, prec, format } => {
            let ctx = PrecisionContext::new(prec);
            let v = zeta_int(n, &ctx)?;
            print_character_value("zeta", json!({ "n": n }), &v, prec, format);
            Ok(0)
        }
        Command::Mzv { word, prec, tol, format } => {
            let mut ctx = PrecisionContext::new(prec);
            if let Some(t) = tol {
                ctx = ctx.with_tolerance(t);
            }
            let w = parse_y_word(&word)?;
            let v = mzv(&w, &ctx)?;
            if let Some(t) = tol {
                if v.error_bound > t {
                    return Err(Error::Tolerance(format!(
                        "achieved bound {:.3e} above requested {t:.3e}",
                        v.error_bound
                    )));
                }
            }
            print_character_value("mzv", json!({ "word": word }), &v, prec, format);
            Ok(0)
        }
        Command::GammaChar { expr, prec, format } => {
            let ctx = PrecisionContext::new(prec);
            let p = coerce_alphabet(parse_expression(&expr)?, Alphabet::Y)?;
            let v = gamma_char(&p, &ctx)?;
            print_character_value("gamma-char", json!({ "expr": expr }), &v, prec, format);
            Ok(0)
        }
        Command::Ell { k, z, prec, terms, format } => {
            let ctx = PrecisionContext::new(prec);
            let zc = parse_complex(&z, &ctx)?;
            let v = ell(k, &zc, &ctx, terms)?;
            print_character_value("ell", json!({ "k": k, "z": z }), &v, prec, format);
            Ok(0)
        }
        Command::InvGamma { k, z, mode, prec, format } => {
            let ctx = PrecisionContext::new(prec);
            let zc = parse_complex(&z, &ctx)?;
            let m = match mode {
                GammaMode::Series => EvalMode::Series,
                GammaMode::Product => EvalMode::Product,
            };
            let v = inv_gamma_yk(k, &zc, &ctx, m)?;
            print_character_value("inv-gamma", json!({ "k": k, "z": z, "mode": format!("{mode:?}").to_lowercase() }), &v, prec, format);
            Ok(0)
        }
        Command::Zeros { r, bound, prec, format } => {
            let ctx = PrecisionContext::new(prec);
            let zeros = predicted_zeros(r, bound, &ctx);
            match format {
                OutputFormat::Json => {
                    let pts: Vec<serde_json::Value> = zeros
                        .iter()
                        .map(|p| json!({ "re": p.re.to_string(), "im": p.im.to_string() }))
                        .collect();
                    println!("{}", json!({ "operation": "zeros", "inputs": { "r": r, "bound": bound }, "value": pts }));
                }
                _ => {
                    for p in &zeros {
                        let (re, im) = p.approx();
                        println!("{re:+.12} {im:+.12}i");
                    }
                }
            }
            Ok(0)
        }
        Command::Reflect { r, z, prec, tol, format } => {
            let ctx = PrecisionContext::new(prec);
            let zc = parse_complex(&z, &ctx)?;
            let rep = reflection_check(r, &zc, &ctx)?;
            let tol = tol.unwrap_or(1e-15);
            match format {
                OutputFormat::Json => {
                    println!(
                        "{}",
                        json!({
                            "operation": "reflect",
                            "inputs": { "r": r, "z": z },
                            "lhs": { "re": rep.lhs.re.to_string(), "im": rep.lhs.im.to_string() },
                            "rhs": { "re": rep.rhs.re.to_string(), "im": rep.rhs.im.to_string() },
                            "difference": rep.difference,
                            "pole_hit": rep.pole_hit,
                            "precision_digits": prec,
                        })
                    );
                }
                _ => match &rep.pole_hit {
                    Some(msg) => println!("pole: {msg}"),
                    None => println!(
                        "lhs = {}\nrhs = {}\n|difference| = {:.3e}",
                        rep.lhs, rep.rhs, rep.difference
                    ),
                },
            }
            if rep.pole_hit.is_some() {
                return Ok(3);
            }
            Ok(if rep.difference < tol { 0 } else { 1 })
        }
        Command::Verify { suite, kmax, prec } => {
            if suite == "list" {
                for (name, what) in crate::verify::SUITES {
                    println!("{name:<18} {what}");
                }
                return Ok(0);
            }
            let opts = VerifyOptions { digits: prec, kmax };
            let results = if suite == "all" {
                run_all(&opts)?
            } else {
                vec![run_suite(&suite, &opts)?]
            };
            let mut ok = true;
            for r in &results {
                println!("{}", r.summary_line());
                for c in &r.checks {
                    let mark = if c.passed { "ok " } else { "FAIL" };
                    println!("   [{mark}] {} - {}", c.label, c.detail);
                }
                ok &= r.passed();
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}
