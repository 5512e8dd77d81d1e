//! Column inserting a word builds the same P tableau as row inserting
//! the reversed word. Sweeps every word in [3]^4 and prints one worked
//! instance with the intermediate insertion states.

use qgrowth::classical::{insert_word, insert_word_with_states, InsertionAlgo};
use qgrowth::tableaux::all_words;
use qgrowth::Word;

fn main() {
    for w in all_words(3, 4) {
        let (p_col, _) = insert_word(InsertionAlgo::Column, &w);
        let (p_row, _) = insert_word(InsertionAlgo::Row, &w.reversed());
        assert_eq!(p_col, p_row, "duality fails on {w}");
    }
    println!("P_col(w) = P_row(reverse(w)) for all 81 words in [3]^4");

    let w = Word::new(vec![3, 1, 3, 4, 2], 4).unwrap();
    let (p, q, states) = insert_word_with_states(InsertionAlgo::Column, &w);
    println!("\ncolumn inserting {w}:");
    for (m, state) in states.iter().enumerate() {
        println!("  after {m} letters: {state}");
    }
    println!("P rows {:?}", p.to_rows());
    println!("Q rows {:?}", q.to_rows());
}
