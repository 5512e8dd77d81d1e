//! Insert a single letter with each algorithm and print the branch set.
//!
//! The classical algorithms are deterministic; the q-weighted ones
//! return a weighted set of output tableaux whose weights sum to 1.

use qgrowth::classical::{col_insert, row_insert};
use qgrowth::{branch_insert_letter, rule_by_name, ShapeChain};

fn main() {
    let rows = vec![vec![1, 1, 3, 4], vec![3, 5, 8], vec![6, 7], vec![8, 8]];
    let tableau = ShapeChain::from_rows(&rows, 8).unwrap();
    println!("tableau {tableau}");

    println!("\ncolumn insert 6: {}", col_insert(&tableau, 6).unwrap());
    println!("row insert 3:    {}", row_insert(&tableau, 3).unwrap());

    for name in ["qcol", "qrow", "dyn3"] {
        let rule = rule_by_name(name).unwrap();
        let out = branch_insert_letter(rule.as_ref(), &tableau, 5).unwrap();
        println!("\n{name} insert 5 ({} branches):", out.len());
        for (chain, w) in &out {
            println!("  {w}  ->  {chain}");
        }
    }
}
