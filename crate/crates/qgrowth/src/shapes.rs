//! Integer partitions, the interlacing relation and box-adding operators.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers; trailing zeros are
/// trimmed so equality is sequence equality. Indexed reads beyond the
/// stored length return 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// l(λ), the number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// λ_j with 1-based j; 0 beyond the stored length. λ_0 is not defined.
    pub fn part(&self, j: usize) -> usize {
        assert!(j >= 1, "partition rows are 1-based");
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// λ + e_j when the result is still a partition.
    pub fn add_box(&self, j: usize) -> Option<Partition> {
        assert!(j >= 1);
        if j > self.len() + 1 {
            return None;
        }
        if j > 1 && self.part(j - 1) == self.part(j) {
            return None;
        }
        let mut parts = self.parts.clone();
        if j == self.len() + 1 {
            parts.push(1);
        } else {
            parts[j - 1] += 1;
        }
        Some(Partition { parts })
    }

    /// If rhs = self + e_j, the row index j.
    pub fn added_row(&self, rhs: &Partition) -> Option<usize> {
        if rhs.size() != self.size() + 1 || rhs.len() < self.len() {
            return None;
        }
        let mut row = None;
        for j in 1..=rhs.len() {
            match rhs.part(j).checked_sub(self.part(j)) {
                Some(0) => {}
                Some(1) if row.is_none() => row = Some(j),
                _ => return None,
            }
        }
        row
    }

    /// Entrywise maximum (μ¹ ∪ μ² for shapes one box apart).
    pub fn union(&self, rhs: &Partition) -> Partition {
        let n = self.len().max(rhs.len());
        Partition {
            parts: (1..=n).map(|j| self.part(j).max(rhs.part(j))).collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 && self.parts.iter().any(|&x| x > 9) {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

/// μ ≺ λ: λ₁ ≥ μ₁ ≥ λ₂ ≥ μ₂ ≥ … with trailing zeros.
pub fn interlaces(mu: &Partition, lambda: &Partition) -> bool {
    let n = mu.len().max(lambda.len());
    for j in 1..=n {
        if lambda.part(j) < mu.part(j) || mu.part(j) < lambda.part(j + 1) {
            return false;
        }
    }
    true
}

/// I^k λ = λ + e_{max{j ≤ k : λ + e_j ∈ W}}; j = 1 is always admissible.
pub fn op_i(lambda: &Partition, k: usize) -> Partition {
    assert!(k >= 1);
    for j in (1..=k).rev() {
        if let Some(next) = lambda.add_box(j) {
            return next;
        }
    }
    unreachable!("adding a box to row 1 is always admissible")
}

/// Λ^k(λ) = {I^j λ : j ≤ k}; `None` means the full set Λ(λ) with
/// k = l(λ) + 1.
pub fn lambda_set(lambda: &Partition, k: Option<usize>) -> BTreeSet<Partition> {
    let k = k.unwrap_or(lambda.len() + 1);
    (1..=k).map(|j| op_i(lambda, j)).collect()
}

/// I^j(λ; μ) = λ + e_{max({i ≤ j : μ_{i-1} > λ_i} ∪ {1})}.
pub fn op_i_rel(lambda: &Partition, mu: &Partition, j: usize) -> Partition {
    let mut row = 1;
    for i in (2..=j).rev() {
        if mu.part(i - 1) > lambda.part(i) {
            row = i;
            break;
        }
    }
    lambda
        .add_box(row)
        .expect("I^j(λ;μ) always lands on a partition")
}

/// All partitions of every size in 0..=n, in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    let mut out = BTreeSet::new();
    fn rec(remaining: usize, max_part: usize, acc: &mut Vec<usize>, out: &mut BTreeSet<Partition>) {
        out.insert(Partition::new(acc.clone()).unwrap());
        for p in (1..=remaining.min(max_part)).rev() {
            acc.push(p);
            rec(remaining - p, p, acc, out);
            acc.pop();
        }
    }
    let mut acc = vec![];
    rec(n, n, &mut acc, &mut out);
    out.into_iter().collect()
}
