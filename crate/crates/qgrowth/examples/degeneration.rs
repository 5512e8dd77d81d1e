//! At q = 0 the weighted insertions collapse to a point mass on the
//! classical algorithm: q-column to column insertion, q-row to row
//! insertion. Sweeps every word in [3]^3.

use qgrowth::checks::check_q_zero;
use qgrowth::tableaux::all_words;

fn main() {
    for rule in ["qcol", "qrow"] {
        let mut checked = 0;
        for w in all_words(3, 3) {
            let report = check_q_zero(rule, &w).unwrap();
            assert!(report.passed, "{rule} on {w}: {:?}", report.witnesses);
            checked += 1;
        }
        println!("{rule}: {checked} words degenerate to the classical algorithm");
    }
}
