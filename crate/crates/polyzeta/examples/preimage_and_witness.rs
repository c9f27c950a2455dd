//! Pulling Taylor series back through Li onto shuffle series in powers of
//! x1, the witness family S(t) whose Li is (1-z)/(1-(t+1)z), and the
//! finite summability diagnostic for double sequences.
//!
//! Run with: cargo run --example preimage_and_witness

use polyzeta::harmonic::{
    dom_witness, li_coeffs, preimage_from_taylor, summability_diagnostic, HarmonicCache,
};
use polyzeta::scalar::{rat, Rat};
use polyzeta::taylor::TaylorSeries;
use polyzeta::words::Word;
use num_traits::ToPrimitive;

fn main() {
    // Preimage of T(z) = z - z^3/3.
    let t = TaylorSeries::from_coeffs(
        "z",
        vec![Rat::new(0.into(), 1.into()), rat(1, 1), rat(0, 1), rat(-1, 3)],
    );
    let s = preimage_from_taylor(&t, 8);
    println!("preimage: {s}");
    let li = li_coeffs(&s.to_poly(), 6).unwrap();
    println!("Li of it: {li} (reproduces T up to the cap)");

    // The witness family: Li(S(t)) = (1-z)/(1-(t+1)z).
    let w = dom_witness(&rat(1, 2), 8, 8).unwrap();
    println!("\nS(1/2) coefficients on x1 powers:");
    println!("  {}", w.series);
    println!("closed form: {}", w.closed_form);
    let li = li_coeffs(&w.series.to_poly(), 8).unwrap();
    println!("match to order 8: {}", (0..=8).all(|n| li.coeff(n) == w.closed_form.coeff(n)));

    // Summability diagnostic on the rows H_{y_n}(N)/n with alternating
    // coefficients: the joint sum diverges for every radius, and the
    // finite window flags it.
    let cache = HarmonicCache::new();
    let rows: Vec<Vec<f64>> = (1..=25u64)
        .map(|n| {
            cache
                .table(&Word::y_word(&[n]), 20)
                .iter()
                .map(|v| (v / Rat::new(n.into(), 1.into())).to_f64().unwrap())
                .collect()
        })
        .collect();
    let report = summability_diagnostic(&rows, 0.5);
    println!(
        "\ndiagnostic at r = 1/2: partial sum {:.3}, growth flag {}",
        report.partial_sum, report.growth_flag
    );
}
