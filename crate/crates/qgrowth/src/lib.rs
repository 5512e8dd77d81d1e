//! Classical and q-weighted Robinson-Schensted insertion on interlacing
//! partition chains, with exact rational-function weights in q.
//!
//! Two independent engines compute the weighted correspondence between
//! words and tableau pairs (P, Q): a branching insertion recursion
//! ([`branching`], [`rules`]) and growth-diagram local rules over a
//! permutation matrix ([`growth`]). They agree exactly, and both expose
//! the transposition symmetry: inverting the permutation swaps P and Q
//! while preserving every weight. The [`checks`] module verifies these
//! identities exhaustively at small sizes with no numeric tolerance.

pub mod branching;
pub mod checks;
pub mod classical;
pub mod cli;
pub mod error;
pub mod growth;
pub mod qrat;
pub mod rules;
pub mod shapes;
pub mod tableaux;

pub use branching::{branch_insert_letter, branch_insert_word, BranchingRule, WeightedPairSet};
pub use error::{Error, Result};
pub use growth::{growth_compute, growth_graph, Variant};
pub use qrat::{QPoly, QRat};
pub use rules::{rule_by_name, Dynamics3, QColumn, QRow};
pub use shapes::Partition;
pub use tableaux::{Permutation, RecordingChain, ShapeChain, Word};
