//! Exhaustive desk-scale verification: normalization, the transposition
//! symmetry (through either engine), the q → 0 degeneration to the
//! classical algorithms, and numeric sanity at exact rational q.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::branching::branch_insert_word;
use crate::classical::{insert_word, InsertionAlgo};
use crate::error::{Error, Result};
use crate::growth::{growth_compute, Variant};
use crate::rules::rule_by_name;
use crate::tableaux::{all_permutations, all_words, Word};

/// Which computation backs a symmetry sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Insertion,
    Growth,
    Both,
}

impl Engine {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "insertion" => Ok(Engine::Insertion),
            "growth" => Ok(Engine::Growth),
            "both" => Ok(Engine::Both),
            _ => Err(Error::Parse(format!("unknown engine '{name}'"))),
        }
    }
}

/// Outcome of one check: the parameters it ran with and the sorted
/// witnesses of every failure (empty when it passed).
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub name: String,
    pub params: String,
    pub passed: bool,
    pub witnesses: Vec<String>,
}

impl Report {
    fn finish(name: &str, params: String, mut witnesses: Vec<String>) -> Report {
        witnesses.sort();
        witnesses.dedup();
        Report {
            name: name.to_string(),
            params,
            passed: witnesses.is_empty(),
            witnesses,
        }
    }
}

/// Σ weights = 1 for every word in [alphabet_bound]^length.
pub fn check_normalization(rule_name: &str, alphabet_bound: usize, length: usize) -> Result<Report> {
    let rule = rule_by_name(rule_name)?;
    let mut witnesses = Vec::new();
    for w in all_words(alphabet_bound, length) {
        let out = branch_insert_word(rule.as_ref(), &w)?;
        if !out.total().is_one() {
            witnesses.push(format!("word {w}: total {}", out.total()));
        }
    }
    Ok(Report::finish(
        "normalization",
        format!("rule={rule_name} ell={alphabet_bound} n={length}"),
        witnesses,
    ))
}

/// The output of σ⁻¹ equals the pair-swapped output of σ for every
/// σ ∈ S_n, through the requested engine; with Engine::Both the two
/// engines are also checked against each other per permutation.
pub fn check_symmetry(rule_name: &str, n: usize, engine: Engine) -> Result<Report> {
    let rule = rule_by_name(rule_name)?;
    let variant = match (rule_name, engine) {
        (_, Engine::Insertion) => None,
        ("dyn3", _) => {
            return Err(Error::Parse(
                "rule 'dyn3' is only available through the insertion engine".to_string(),
            ))
        }
        (name, _) => Some(Variant::from_name(name)?),
    };
    let mut witnesses = Vec::new();
    for sigma in all_permutations(n) {
        let via_insertion = |s: &crate::tableaux::Permutation| {
            branch_insert_word(rule.as_ref(), &s.as_word())
        };
        let forward = match engine {
            Engine::Insertion => via_insertion(&sigma)?,
            Engine::Growth => growth_compute(variant.unwrap(), &sigma)?,
            Engine::Both => {
                let a = via_insertion(&sigma)?;
                let b = growth_compute(variant.unwrap(), &sigma)?;
                if a != b {
                    witnesses.push(format!("engines disagree on {sigma}"));
                }
                a
            }
        };
        let inverse = sigma.inverse();
        let backward = match engine {
            Engine::Insertion | Engine::Both => via_insertion(&inverse)?,
            Engine::Growth => growth_compute(variant.unwrap(), &inverse)?,
        };
        if backward != forward.swapped()? {
            witnesses.push(format!("pair swap fails on {sigma}"));
        }
    }
    Ok(Report::finish(
        "symmetry",
        format!("rule={rule_name} n={n} engine={engine:?}"),
        witnesses,
    ))
}

fn classical_counterpart(rule_name: &str) -> Result<InsertionAlgo> {
    match rule_name {
        "qcol" => Ok(InsertionAlgo::Column),
        "qrow" => Ok(InsertionAlgo::Row),
        _ => Err(Error::Parse(format!(
            "rule '{rule_name}' has no classical q=0 counterpart"
        ))),
    }
}

/// At q = 0 the weighted output collapses to mass 1 on the classical
/// insertion of the same word.
pub fn check_q_zero(rule_name: &str, w: &Word) -> Result<Report> {
    let rule = rule_by_name(rule_name)?;
    let algo = classical_counterpart(rule_name)?;
    let mut witnesses = Vec::new();
    let out = branch_insert_word(rule.as_ref(), w)?;
    match out.eval(&BigRational::zero()) {
        Err(e) => witnesses.push(format!("word {w}: {e}")),
        Ok(surviving) => {
            let expected = insert_word(algo, w);
            if surviving.len() != 1 {
                witnesses.push(format!("word {w}: {} surviving pairs", surviving.len()));
            } else {
                let ((p, q), v) = &surviving[0];
                if !v.is_one() || (p, q) != (&expected.0, &expected.1) {
                    witnesses.push(format!("word {w}: wrong point mass"));
                }
            }
        }
    }
    Ok(Report::finish("qzero", format!("rule={rule_name} word={w}"), witnesses))
}

/// At exact rational q0 ∈ (0, 1), every weight over S_n is nonnegative
/// and the totals are exactly 1.
pub fn check_numeric(rule_name: &str, q0: &BigRational, n: usize) -> Result<Report> {
    let rule = rule_by_name(rule_name)?;
    if !q0.is_positive() || *q0 >= BigRational::one() {
        return Err(Error::Parse(format!("q0 must be in (0, 1), got {q0}")));
    }
    let mut witnesses = Vec::new();
    for sigma in all_permutations(n) {
        let out = branch_insert_word(rule.as_ref(), &sigma.as_word())?;
        match out.eval(q0) {
            Err(e) => witnesses.push(format!("{sigma}: {e}")),
            Ok(values) => {
                let mut total = BigRational::zero();
                for ((_, _), v) in &values {
                    if v.is_negative() {
                        witnesses.push(format!("{sigma}: negative weight {v}"));
                    }
                    total += v;
                }
                if !total.is_one() {
                    witnesses.push(format!("{sigma}: total {total}"));
                }
            }
        }
    }
    Ok(Report::finish(
        "numeric",
        format!("rule={rule_name} q0={q0} n={n}"),
        witnesses,
    ))
}
