//! Process the word 2132 with q-column insertion and print the weighted
//! (P, Q) pair set; the weights always sum to exactly 1.

use qgrowth::{branch_insert_word, QColumn, Word};

fn main() {
    let w = Word::new(vec![2, 1, 3, 2], 3).unwrap();
    let out = branch_insert_word(&QColumn, &w).unwrap();
    println!("word {w}: {} pairs, total mass {}", out.len(), out.total());
    for ((p, q), weight) in out.iter() {
        println!("\n  weight {weight}");
        println!("  P rows {:?}", p.to_rows());
        println!("  Q rows {:?}", q.to_rows());
    }
}
