//! End-to-end acceptance sweep. Each criterion is a separate function
//! returning Err with a reason on failure; the single test prints one
//! PASS/FAIL line per criterion and fails if any criterion fails.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use qgrowth::branching::{branch_insert_letter, check_conditions};
use qgrowth::checks::{check_numeric, check_q_zero, check_symmetry, Engine};
use qgrowth::classical::{col_insert, insert_word, insert_word_with_states, row_insert, InsertionAlgo};
use qgrowth::growth::local_rule;
use qgrowth::qrat::{one_minus_qpow, qpow};
use qgrowth::tableaux::{all_permutations, all_words, recording_from_chain};
use qgrowth::{
    branch_insert_word, growth_compute, rule_by_name, Partition, QColumn, QRat, ShapeChain,
    Variant, Word,
};

type Check = std::result::Result<(), String>;

fn example_tableau() -> ShapeChain {
    ShapeChain::from_rows(
        &[vec![1, 1, 3, 4], vec![3, 5, 8], vec![6, 7], vec![8, 8]],
        8,
    )
    .unwrap()
}

fn chain(shapes: &[&[usize]], ell: usize) -> ShapeChain {
    let mut v = vec![Partition::empty()];
    v.extend(shapes.iter().map(|p| Partition::new(p.to_vec()).unwrap()));
    assert_eq!(v.len(), ell + 1);
    ShapeChain::from_shapes(v).unwrap()
}

fn one_plus_q() -> QRat {
    &one_minus_qpow(2) / &one_minus_qpow(1)
}

fn criterion_01_column_insertion() -> Check {
    let got = col_insert(&example_tableau(), 6).map_err(|e| e.to_string())?;
    let want = "∅≺2≺2≺31≺41≺42≺422≺432≺4422";
    if got.to_string() == want {
        Ok(())
    } else {
        Err(format!("got {got}, want {want}"))
    }
}

fn criterion_02_row_insertion() -> Check {
    let got = row_insert(&example_tableau(), 3).map_err(|e| e.to_string())?;
    let want = "∅≺2≺2≺41≺42≺421≺4211≺4221≺43221";
    if got.to_string() == want {
        Ok(())
    } else {
        Err(format!("got {got}, want {want}"))
    }
}

fn criterion_03_word_insertion_and_growth_states() -> Check {
    let w = Word::new(vec![3, 1, 3, 4, 2], 4).unwrap();
    let (p, q, states) = insert_word_with_states(InsertionAlgo::Column, &w);
    if p.to_rows() != vec![vec![1, 3, 3], vec![2], vec![4]] {
        return Err(format!("P rows {:?}", p.to_rows()));
    }
    if q.to_rows() != vec![vec![1, 2, 5], vec![3], vec![4]] {
        return Err(format!("Q rows {:?}", q.to_rows()));
    }
    let grid = [
        "∅≺∅≺∅≺1≺1",
        "∅≺1≺1≺2≺2",
        "∅≺1≺1≺21≺21",
        "∅≺1≺1≺21≺211",
        "∅≺1≺11≺31≺311",
    ];
    for (m, want) in grid.iter().enumerate() {
        let got = states[m + 1].to_string();
        if got != *want {
            return Err(format!("state after {} letters: {got}, want {want}", m + 1));
        }
    }
    if *states[5].at(4) != Partition::new(vec![3, 1, 1]).unwrap() {
        return Err(format!("vertex (5,4) is {}", states[5].at(4)));
    }
    Ok(())
}

fn criterion_04_qcol_letter_insertion() -> Check {
    let out = branch_insert_letter(&QColumn, &example_tableau(), 5).map_err(|e| e.to_string())?;
    let target = chain(
        &[
            &[2],
            &[2],
            &[3, 1],
            &[4, 1],
            &[4, 2, 1],
            &[4, 3, 1],
            &[4, 3, 2],
            &[4, 4, 2, 2],
        ],
        8,
    );
    let om = one_minus_qpow(1);
    let want = &(&qpow(1) * &(&om * &om)) / &one_plus_q();
    match out.get(&target) {
        Some(w) if *w == want => Ok(()),
        Some(w) => Err(format!("weight {w}, want {want}")),
        None => Err("target chain missing from the branch set".to_string()),
    }
}

fn criterion_05_qcol_word_2132() -> Check {
    // First displayed split: inserting 3 into ∅≺1≺2≺2.
    let pre = chain(&[&[1], &[2], &[2]], 3);
    let out = branch_insert_letter(&QColumn, &pre, 3).map_err(|e| e.to_string())?;
    let splits = [
        (chain(&[&[1], &[2], &[2, 1]], 3), one_minus_qpow(2)),
        (chain(&[&[1], &[2], &[3]], 3), qpow(2)),
    ];
    for (c, want) in &splits {
        if out.get(c) != Some(want) {
            return Err(format!("insert 3 split at {c} is wrong"));
        }
    }
    // Second displayed split: inserting 2 into ∅≺1≺2≺21.
    let pre = chain(&[&[1], &[2], &[2, 1]], 3);
    let out = branch_insert_letter(&QColumn, &pre, 2).map_err(|e| e.to_string())?;
    let om = one_minus_qpow(1);
    let opq = one_plus_q();
    let splits = [
        (chain(&[&[1], &[2, 1], &[2, 2]], 3), &om / &opq),
        (chain(&[&[1], &[2, 1], &[3, 1]], 3), &(&qpow(1) * &om) / &opq),
        (chain(&[&[1], &[3], &[3, 1]], 3), qpow(1)),
    ];
    for (c, want) in &splits {
        if out.get(c) != Some(want) {
            return Err(format!("insert 2 split at {c} is wrong"));
        }
    }
    let w = Word::new(vec![2, 1, 3, 2], 3).unwrap();
    let total = branch_insert_word(&QColumn, &w)
        .map_err(|e| e.to_string())?
        .total();
    if total.is_one() {
        Ok(())
    } else {
        Err(format!("total mass {total}"))
    }
}

fn criterion_06_growth_1423() -> Check {
    let p2 = Partition::new(vec![2]).unwrap();
    let p21 = Partition::new(vec![2, 1]).unwrap();
    let x_split: BTreeMap<_, _> = local_rule(Variant::QCol, &p2, &p2, &p2, true)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    let want_x: BTreeMap<_, _> = [
        (Partition::new(vec![3]).unwrap(), qpow(2)),
        (p21.clone(), one_minus_qpow(2)),
    ]
    .into_iter()
    .collect();
    if x_split != want_x {
        return Err("X-box split at (4,3) is wrong".to_string());
    }
    let branch_split: BTreeMap<_, _> = local_rule(Variant::QCol, &p2, &p21, &p21, false)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    let opq = one_plus_q();
    let want_branch: BTreeMap<_, _> = [
        (Partition::new(vec![3, 1]).unwrap(), &qpow(1) / &opq),
        (Partition::new(vec![2, 2]).unwrap(), &QRat::one() / &opq),
    ]
    .into_iter()
    .collect();
    if branch_split != want_branch {
        return Err("branch split at (4,4) is wrong".to_string());
    }

    let sigma = qgrowth::Permutation::new(vec![1, 4, 2, 3]).unwrap();
    let out = growth_compute(Variant::QCol, &sigma).map_err(|e| e.to_string())?;
    if !out.total().is_one() {
        return Err(format!("total mass {}", out.total()));
    }
    let p = ShapeChain::from_rows(&[vec![1, 2], vec![3, 4]], 4).unwrap();
    let q = recording_from_chain(&ShapeChain::from_rows(&[vec![1, 3], vec![2, 4]], 4).unwrap())
        .map_err(|e| e.to_string())?;
    let om = one_minus_qpow(1);
    let want = &qpow(1) * &(&om * &om);
    match out.get(&p, &q) {
        Some(w) if *w == want => Ok(()),
        Some(w) => Err(format!("pair weight {w}, want {want}")),
        None => Err("pair missing from the output".to_string()),
    }
}

fn criterion_07_symmetry_sweeps() -> Check {
    for n in 2..=5 {
        for rule in ["qcol", "qrow"] {
            let report = check_symmetry(rule, n, Engine::Both).map_err(|e| e.to_string())?;
            if !report.passed {
                return Err(format!("{rule} n={n}: {:?}", report.witnesses));
            }
        }
    }
    for n in 2..=4 {
        let report = check_symmetry("dyn3", n, Engine::Insertion).map_err(|e| e.to_string())?;
        if !report.passed {
            return Err(format!("dyn3 n={n}: {:?}", report.witnesses));
        }
    }
    Ok(())
}

fn criterion_08_engine_equivalence() -> Check {
    for (rule_name, variant) in [("qcol", Variant::QCol), ("qrow", Variant::QRow)] {
        let rule = rule_by_name(rule_name).unwrap();
        for sigma in all_permutations(4) {
            let a = branch_insert_word(rule.as_ref(), &sigma.as_word()).map_err(|e| e.to_string())?;
            let b = growth_compute(variant, &sigma).map_err(|e| e.to_string())?;
            if a != b {
                return Err(format!("{rule_name} engines disagree on {sigma}"));
            }
        }
    }
    Ok(())
}

fn criterion_09_normalization() -> Check {
    for rule in ["qcol", "qrow"] {
        for (ell, n) in [(3, 4), (2, 5)] {
            for w in all_words(ell, n) {
                let total = branch_insert_word(rule_by_name(rule).unwrap().as_ref(), &w)
                    .map_err(|e| e.to_string())?
                    .total();
                if !total.is_one() {
                    return Err(format!("{rule} on {w}: total {total}"));
                }
            }
        }
    }
    Ok(())
}

fn criterion_10_q_zero_degeneration() -> Check {
    for rule in ["qcol", "qrow"] {
        for w in all_words(3, 3) {
            let report = check_q_zero(rule, &w).map_err(|e| e.to_string())?;
            if !report.passed {
                return Err(format!("{rule} on {w}: {:?}", report.witnesses));
            }
        }
    }
    Ok(())
}

fn criterion_11_duality() -> Check {
    for w in all_words(3, 4) {
        let (p_col, _) = insert_word(InsertionAlgo::Column, &w);
        let (p_row, _) = insert_word(InsertionAlgo::Row, &w.reversed());
        if p_col != p_row {
            return Err(format!("duality fails on {w}"));
        }
    }
    Ok(())
}

fn criterion_12_conditions() -> Check {
    for name in ["qcol", "qrow", "dyn3"] {
        let rule = rule_by_name(name).unwrap();
        let report = check_conditions(rule.as_ref(), 5, 7);
        if !report.passed() {
            return Err(format!("{name}: {:?}", report.violations));
        }
    }
    let broken = check_conditions(&qgrowth::rules::QColumnLetterScaled, 5, 7);
    if broken.passed() {
        return Err("letter-scaled rule was not rejected".to_string());
    }
    if broken.violations.iter().any(|v| v.witness.is_empty()) {
        return Err("violation without a witness".to_string());
    }
    Ok(())
}

fn criterion_13_numeric_sanity() -> Check {
    for rule in ["qcol", "qrow"] {
        for (num, den) in [(1, 3), (1, 2)] {
            let q0 = BigRational::new(num.into(), den.into());
            let report = check_numeric(rule, &q0, 3).map_err(|e| e.to_string())?;
            if !report.passed {
                return Err(format!("{rule} at {q0}: {:?}", report.witnesses));
            }
            // Re-derive the claim directly for good measure.
            for sigma in all_permutations(3) {
                let out = branch_insert_word(rule_by_name(rule).unwrap().as_ref(), &sigma.as_word())
                    .map_err(|e| e.to_string())?;
                let values = out.eval(&q0).map_err(|e| e.to_string())?;
                let mut total = BigRational::zero();
                for ((_, _), v) in &values {
                    if v.is_negative() {
                        return Err(format!("{rule} {sigma}: negative weight {v}"));
                    }
                    total += v;
                }
                if !total.is_one() {
                    return Err(format!("{rule} {sigma}: total {total}"));
                }
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, fn() -> Check);
    let criteria: Vec<Criterion> = vec![
        ("01 column insertion of 6", criterion_01_column_insertion),
        ("02 row insertion of 3", criterion_02_row_insertion),
        ("03 word 31342 and its growth states", criterion_03_word_insertion_and_growth_states),
        ("04 qcol letter insertion weight", criterion_04_qcol_letter_insertion),
        ("05 qcol word 2132 branch weights", criterion_05_qcol_word_2132),
        ("06 growth diagram of 1423", criterion_06_growth_1423),
        ("07 symmetry sweeps", criterion_07_symmetry_sweeps),
        ("08 engine equivalence on S4", criterion_08_engine_equivalence),
        ("09 normalization", criterion_09_normalization),
        ("10 q = 0 degeneration", criterion_10_q_zero_degeneration),
        ("11 column/row duality", criterion_11_duality),
        ("12 sufficient conditions", criterion_12_conditions),
        ("13 numeric sanity", criterion_13_numeric_sanity),
    ];
    let mut failures = 0;
    for (name, f) in criteria {
        match f() {
            Ok(()) => println!("criterion {name}: PASS"),
            Err(reason) => {
                failures += 1;
                println!("criterion {name}: FAIL ({reason})");
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
