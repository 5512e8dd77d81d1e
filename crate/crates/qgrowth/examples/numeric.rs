//! Evaluate the q-column output of a word at exact rational q and print
//! the resulting probability distribution over (P, Q) pairs.

use num_rational::BigRational;
use num_traits::Zero;
use qgrowth::{branch_insert_word, QColumn, Word};

fn main() {
    let w = Word::new(vec![3, 1, 3, 4, 2], 4).unwrap();
    let out = branch_insert_word(&QColumn, &w).unwrap();
    let q0 = BigRational::new(1.into(), 3.into());
    let values = out.eval(&q0).unwrap();

    println!("word {w} at q = {q0}:");
    let mut total = BigRational::zero();
    for ((p, q), v) in &values {
        println!("  P {:<14} Q {:<14} {}", p.top().to_string(), q.as_shape_chain().top().to_string(), v);
        total += v;
    }
    println!("total {total}");
    assert!(total == BigRational::new(1.into(), 1.into()));
}
