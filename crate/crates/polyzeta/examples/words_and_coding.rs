//! Words over X = {x0, x1} and Y = {y1, y2, ...}, weights, and the coding
//! maps between them: y_s corresponds to the block x0^{s-1} x1.
//!
//! Run with: cargo run --example words_and_coding

use polyzeta::words::{is_convergent, pi_x, pi_y, Word};

fn main() {
    let w = Word::y_word(&[3, 1, 2]);
    println!("w          = {w}");
    println!("weight(w)  = {}", w.weight());
    println!("length(w)  = {}", w.len());

    let image = pi_x(&w);
    println!("pi_X(w)    = {image}");
    println!("pi_Y back  = {}", pi_y(&image).unwrap());

    // pi_Y is only defined on words ending in x1 (plus the empty word).
    let outside = Word::x_word(&[1, 0]);
    println!("pi_Y({outside}) -> {}", pi_y(&outside).unwrap_err());

    // A word indexes a convergent polyzeta iff it does not start with y1.
    for w in [Word::y_word(&[2, 1]), Word::y_word(&[1, 2]), Word::empty(polyzeta::Alphabet::Y)] {
        println!("is_convergent({w}) = {}", is_convergent(&w));
    }
}
