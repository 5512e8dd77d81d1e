//! Symmetry sweep: for every permutation, inserting sigma^{-1} gives the
//! pair set of sigma with P and Q swapped. Runs the q-column and q-row
//! rules through both engines, and the three-parameter dynamics through
//! the insertion engine only.

use qgrowth::checks::{check_symmetry, Engine};

fn main() {
    for (rule, n, engine) in [
        ("qcol", 4, Engine::Both),
        ("qrow", 4, Engine::Both),
        ("dyn3", 4, Engine::Insertion),
    ] {
        let report = check_symmetry(rule, n, engine).unwrap();
        println!(
            "{:>4}  n={}  {}",
            rule,
            n,
            if report.passed { "symmetric" } else { "FAILED" }
        );
        assert!(report.passed);
    }
}
