//! Exact harmonic sums H_w(N) and their CSV table form.
//!
//! Run with: cargo run --example harmonic_sums

use polyzeta::harmonic::{hsum, hsum_oracle, HarmonicCache};
use polyzeta::words::Word;

fn main() {
    let w = Word::y_word(&[2, 1]);
    for n in [1usize, 4, 10, 40] {
        println!("H_{{2,1}}({n}) = {}", hsum(&w, n));
    }

    // The memoized recursion agrees with the brute-force nested loop.
    let direct = hsum_oracle(&w, 12).unwrap();
    println!("oracle at N=12: {direct} (match: {})", direct == hsum(&w, 12));

    // Tables stream as CSV (same format the CLI emits).
    println!("\nCSV table for y1, N <= 6:");
    let cache = HarmonicCache::new();
    let table = cache.harmonic_table(&Word::y_word(&[1]), 6);
    table.to_csv(std::io::stdout().lock()).unwrap();
}
