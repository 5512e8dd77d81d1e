//! The generic branching-insertion engine: letter insertion as a weighted
//! tree over triplets, word insertion as a weighted-pair-set recursion
//! with merging, and the sufficient-condition checker for the symmetry
//! property.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qrat::QRat;
use crate::shapes::{interlaces, partitions_up_to, Partition};
use crate::tableaux::{recording_from_chain, RecordingChain, ShapeChain, Word};

/// The corner shapes determining one branching step:
/// (λ^{i−1}, λ^i, λ̃^{i−1}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triplet {
    pub prev_lower: Partition,
    pub prev_upper: Partition,
    pub new_lower: Partition,
}

impl Triplet {
    pub fn new(prev_lower: Partition, prev_upper: Partition, new_lower: Partition) -> Result<Self> {
        if !interlaces(&prev_lower, &prev_upper)
            || (new_lower != prev_lower && prev_lower.added_row(&new_lower).is_none())
        {
            return Err(Error::InvalidTriplet(
                prev_lower.to_string(),
                prev_upper.to_string(),
                new_lower.to_string(),
            ));
        }
        Ok(Triplet {
            prev_lower,
            prev_upper,
            new_lower,
        })
    }

    /// The row where the lower shape grew, if it did.
    pub fn added_row(&self) -> Option<usize> {
        self.prev_lower.added_row(&self.new_lower)
    }
}

/// A branching insertion algorithm: three weight enumerators for the
/// initial (i = k), high (i > k) and low (i < k) phases. Enumerators
/// yield only valid successor shapes with nonzero weights.
pub trait BranchingRule {
    fn name(&self) -> &'static str;

    /// w₀: branch set at the inserted letter's level; new_lower equals
    /// prev_lower there.
    fn initial(&self, t: &Triplet, letter: usize) -> Vec<(Partition, QRat)>;

    /// w₁: branch set above the letter's level; new_lower is prev_lower
    /// plus one box. `level` is the chain level i, unused by the shipped
    /// rules (the weights do not depend on position).
    fn high(&self, t: &Triplet, level: usize) -> Vec<(Partition, QRat)>;

    /// w₂: branch set below the letter's level; the identity indicator.
    fn low(&self, t: &Triplet, level: usize) -> Vec<(Partition, QRat)> {
        let _ = level;
        vec![(t.prev_upper.clone(), QRat::one())]
    }
}

/// Keep only branches that extend the new chain legally.
pub fn valid_branch(new_lower: &Partition, target: &Partition) -> bool {
    interlaces(new_lower, target)
}

/// Insert a letter: expand the triplet tree level by level, multiply the
/// edge weights along each genealogy and merge equal output chains.
pub fn branch_insert_letter(
    rule: &dyn BranchingRule,
    chain: &ShapeChain,
    k: usize,
) -> Result<BTreeMap<ShapeChain, QRat>> {
    let mut merged = BTreeMap::new();
    for (shapes, w) in branch_insert_letter_unmerged(rule, chain, k)? {
        add_weight(&mut merged, ShapeChain::from_shapes(shapes)?, w);
    }
    drop_zeros(&mut merged);
    Ok(merged)
}

/// Raw genealogies of a letter insertion, one entry per leaf, unmerged.
pub fn branch_insert_letter_unmerged(
    rule: &dyn BranchingRule,
    chain: &ShapeChain,
    k: usize,
) -> Result<Vec<(Vec<Partition>, QRat)>> {
    let ell = chain.level_bound();
    if k == 0 || k > ell {
        return Err(Error::LetterOutOfRange { letter: k, bound: ell });
    }
    let mut frontier: Vec<(Vec<Partition>, QRat)> = vec![(vec![Partition::empty()], QRat::one())];
    for i in 1..=ell {
        let mut next = Vec::new();
        for (prefix, w) in frontier {
            let t = Triplet::new(
                chain.at(i - 1).clone(),
                chain.at(i).clone(),
                prefix[i - 1].clone(),
            )?;
            let branches = match i.cmp(&k) {
                std::cmp::Ordering::Less => rule.low(&t, i),
                std::cmp::Ordering::Equal => rule.initial(&t, k),
                std::cmp::Ordering::Greater => rule.high(&t, i),
            };
            for (target, bw) in branches {
                debug_assert!(!bw.is_zero(), "zero-weighted branch must be pruned");
                debug_assert!(valid_branch(&prefix[i - 1], &target));
                let mut shapes = prefix.clone();
                shapes.push(target);
                next.push((shapes, &w * &bw));
            }
        }
        frontier = next;
    }
    Ok(frontier)
}

fn add_weight<K: Ord>(map: &mut BTreeMap<K, QRat>, key: K, w: QRat) {
    let entry = map.entry(key).or_insert_with(QRat::zero);
    *entry = &*entry + &w;
}

fn drop_zeros<K: Ord>(map: &mut BTreeMap<K, QRat>) {
    map.retain(|_, w| !w.is_zero());
}

/// Finite association from (P, Q) chain pairs to exact weights; the
/// output φ_w / ψ_w of word insertion.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightedPairSet {
    entries: BTreeMap<(ShapeChain, RecordingChain), QRat>,
}

impl WeightedPairSet {
    pub fn unit(level_bound: usize) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(
            (ShapeChain::empty(level_bound), RecordingChain::start()),
            QRat::one(),
        );
        WeightedPairSet { entries }
    }

    pub fn from_entries(
        items: impl IntoIterator<Item = ((ShapeChain, RecordingChain), QRat)>,
    ) -> Self {
        let mut entries = BTreeMap::new();
        for (key, w) in items {
            add_weight(&mut entries, key, w);
        }
        drop_zeros(&mut entries);
        WeightedPairSet { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(ShapeChain, RecordingChain), &QRat)> {
        self.entries.iter()
    }

    pub fn get(&self, p: &ShapeChain, q: &RecordingChain) -> Option<&QRat> {
        self.entries.get(&(p.clone(), q.clone()))
    }

    /// Σ weights, exact.
    pub fn total(&self) -> QRat {
        self.entries
            .values()
            .fold(QRat::zero(), |acc, w| &acc + w)
    }

    /// The set with every pair (P, Q) swapped to (Q, P); requires every P
    /// to be a standard chain (permutation input).
    pub fn swapped(&self) -> Result<WeightedPairSet> {
        let mut entries = BTreeMap::new();
        for ((p, q), w) in &self.entries {
            let key = (q.as_shape_chain(), recording_from_chain(p)?);
            add_weight(&mut entries, key, w.clone());
        }
        drop_zeros(&mut entries);
        Ok(WeightedPairSet { entries })
    }

    /// Exact specialization of every weight at q = q0, dropping zeros.
    pub fn eval(
        &self,
        q0: &BigRational,
    ) -> Result<Vec<((ShapeChain, RecordingChain), BigRational)>> {
        let mut out = Vec::new();
        for ((p, q), w) in &self.entries {
            let v = w.eval(q0)?;
            if !v.is_zero() {
                out.push(((p.clone(), q.clone()), v));
            }
        }
        Ok(out)
    }
}

impl Serialize for WeightedPairSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            p: &'a ShapeChain,
            q: &'a RecordingChain,
            weight: &'a QRat,
            display: String,
        }
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for ((p, q), w) in &self.entries {
            seq.serialize_element(&Entry {
                p,
                q,
                weight: w,
                display: w.to_string(),
            })?;
        }
        seq.end()
    }
}

/// Insert a word: iterate letter insertion from {(∅, ∅): 1}, pair each
/// new P with the matching-shape Q extension and merge identical pairs
/// after every letter.
pub fn branch_insert_word(rule: &dyn BranchingRule, w: &Word) -> Result<WeightedPairSet> {
    let mut states: BTreeMap<(ShapeChain, RecordingChain), QRat> = BTreeMap::new();
    states.insert(
        (
            ShapeChain::empty(w.alphabet_bound()),
            RecordingChain::start(),
        ),
        QRat::one(),
    );
    for &letter in w.letters() {
        let mut next = BTreeMap::new();
        for ((p, q), weight) in &states {
            for (new_p, iw) in branch_insert_letter(rule, p, letter)? {
                let new_q = q.extended(new_p.top().clone())?;
                add_weight(&mut next, (new_p, new_q), weight * &iw);
            }
        }
        drop_zeros(&mut next);
        states = next;
    }
    Ok(WeightedPairSet {
        entries: states,
    })
}

/// Word insertion with no intermediate merging: every genealogy is kept
/// separate and grouping happens only once at the very end. Slow; used
/// as an independent oracle for the merged recursion.
pub fn branch_insert_word_unmerged(rule: &dyn BranchingRule, w: &Word) -> Result<WeightedPairSet> {
    let mut states: Vec<(ShapeChain, RecordingChain, QRat)> = vec![(
        ShapeChain::empty(w.alphabet_bound()),
        RecordingChain::start(),
        QRat::one(),
    )];
    for &letter in w.letters() {
        let mut next = Vec::new();
        for (p, q, weight) in &states {
            for (shapes, iw) in branch_insert_letter_unmerged(rule, p, letter)? {
                let new_p = ShapeChain::from_shapes(shapes)?;
                let new_q = q.extended(new_p.top().clone())?;
                next.push((new_p, new_q, weight * &iw));
            }
        }
        states = next;
    }
    Ok(WeightedPairSet::from_entries(
        states.into_iter().map(|(p, q, w)| ((p, q), w)),
    ))
}

/// One violation of the sufficient conditions, with its witness.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionViolation {
    pub condition: &'static str,
    pub witness: String,
}

impl fmt::Display for ConditionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {} violated at {}", self.condition, self.witness)
    }
}

/// Outcome of the exhaustive sufficient-condition sweep.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionsReport {
    pub rule: String,
    pub size_bound: usize,
    pub letter_bound: usize,
    pub triplets_checked: usize,
    pub violations: Vec<ConditionViolation>,
}

impl ConditionsReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn branch_map(branches: Vec<(Partition, QRat)>) -> BTreeMap<Partition, QRat> {
    branches.into_iter().collect()
}

/// Exhaustively verify the four sufficient conditions for the symmetry
/// property over all triplets built from partitions of size ≤ size_bound
/// and letters/levels ≤ letter_bound.
pub fn check_conditions(
    rule: &dyn BranchingRule,
    size_bound: usize,
    letter_bound: usize,
) -> ConditionsReport {
    let shapes = partitions_up_to(size_bound);
    let mut violations = Vec::new();
    let mut checked = 0usize;

    for lower in &shapes {
        for upper in &shapes {
            if !interlaces(lower, upper) {
                continue;
            }

            // Initial phase: new_lower = prev_lower. Letters valid for
            // this triplet start at max(l(lower)+1, l(upper)).
            let t = Triplet::new(lower.clone(), upper.clone(), lower.clone()).unwrap();
            let k_min = (lower.len() + 1).max(upper.len()).max(1);
            let mut initial_sets = Vec::new();
            for k in k_min..=letter_bound.max(k_min) {
                checked += 1;
                let set = branch_map(rule.initial(&t, k));
                for target in set.keys() {
                    if upper.added_row(target).is_none() {
                        violations.push(ConditionViolation {
                            condition: "(i)",
                            witness: format!(
                                "w0 support: ({lower}, {upper}, {lower}) -> {target} at letter {k}"
                            ),
                        });
                    }
                }
                initial_sets.push((k, set));
            }
            // (iii): letter independence on diagonal triplets.
            if lower == upper {
                for pair in initial_sets.windows(2) {
                    if pair[0].1 != pair[1].1 {
                        violations.push(ConditionViolation {
                            condition: "(iii)",
                            witness: format!(
                                "w0(({lower}, {lower}, {lower}), ·) differs between letters {} and {}",
                                pair[0].0, pair[1].0
                            ),
                        });
                    }
                }
            }

            // Low phase must be the identity indicator.
            for level in 1..=letter_bound.max(2) {
                checked += 1;
                let set = branch_map(rule.low(&t, level));
                let identity: BTreeMap<Partition, QRat> =
                    [(upper.clone(), QRat::one())].into_iter().collect();
                if set != identity {
                    violations.push(ConditionViolation {
                        condition: "(i)",
                        witness: format!("w2(({lower}, {upper}, {lower}), ·) is not the identity"),
                    });
                }
            }

            // High phase: new_lower = prev_lower + e_i.
            for i in 1..=lower.len() + 1 {
                let Some(new_lower) = lower.add_box(i) else {
                    continue;
                };
                let t = Triplet::new(lower.clone(), upper.clone(), new_lower.clone()).unwrap();
                let mut high_sets = Vec::new();
                for level in 2..=letter_bound.max(3) {
                    checked += 1;
                    let set = branch_map(rule.high(&t, level));
                    for target in set.keys() {
                        if upper.added_row(target).is_none() {
                            violations.push(ConditionViolation {
                                condition: "(i)",
                                witness: format!(
                                    "w1 support: ({lower}, {upper}, {new_lower}) -> {target}"
                                ),
                            });
                        }
                    }
                    high_sets.push(set);
                }
                // (ii): forced stay when the box column is saturated.
                if upper.part(i) == lower.part(i) {
                    let expected: BTreeMap<Partition, QRat> = upper
                        .add_box(i)
                        .map(|s| [(s, QRat::one())].into_iter().collect())
                        .unwrap_or_default();
                    if high_sets.iter().any(|set| *set != expected) {
                        violations.push(ConditionViolation {
                            condition: "(ii)",
                            witness: format!(
                                "w1(({lower}, {upper}, {new_lower}), ·) with row {i} saturated"
                            ),
                        });
                    }
                }
                // (iv): level independence on one-box-up triplets.
                if *upper == new_lower {
                    for pair in high_sets.windows(2) {
                        if pair[0] != pair[1] {
                            violations.push(ConditionViolation {
                                condition: "(iv)",
                                witness: format!(
                                    "w1(({lower}, {upper}, {new_lower}), ·) differs between levels"
                                ),
                            });
                        }
                    }
                }
            }
        }
    }

    ConditionsReport {
        rule: rule.name().to_string(),
        size_bound,
        letter_bound,
        triplets_checked: checked,
        violations,
    }
}
