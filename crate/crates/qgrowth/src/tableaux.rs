//! Tableaux as interlacing shape chains, recording chains, words and
//! permutations.
//!
//! Chains are the internal representation everywhere; row arrays exist
//! only at the I/O boundary.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{interlaces, Partition};

/// A tableau identified by the shapes of its subtableaux:
/// ∅ = λ⁰ ≺ λ¹ ≺ … ≺ λ^ℓ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct ShapeChain {
    shapes: Vec<Partition>,
}

impl ShapeChain {
    pub fn empty(level_bound: usize) -> Self {
        ShapeChain {
            shapes: vec![Partition::empty(); level_bound + 1],
        }
    }

    pub fn from_shapes(shapes: Vec<Partition>) -> Result<Self> {
        if shapes.is_empty() || !shapes[0].is_empty() {
            return Err(Error::InvalidChain(0));
        }
        for i in 1..shapes.len() {
            if !interlaces(&shapes[i - 1], &shapes[i]) {
                return Err(Error::InvalidChain(i));
            }
        }
        Ok(ShapeChain { shapes })
    }

    /// ℓ, the alphabet bound the chain encodes.
    pub fn level_bound(&self) -> usize {
        self.shapes.len() - 1
    }

    /// λ^i.
    pub fn at(&self, i: usize) -> &Partition {
        &self.shapes[i]
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// sh P = λ^ℓ.
    pub fn top(&self) -> &Partition {
        self.shapes.last().unwrap()
    }

    /// True when successive sizes increase by exactly one box.
    pub fn is_standard(&self) -> bool {
        self.shapes
            .windows(2)
            .all(|w| w[1].size() == w[0].size() + 1)
    }

    /// Row-array form: entry k appears λ^k_r − λ^{k−1}_r times in row r.
    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = vec![vec![]; self.top().len()];
        for k in 1..self.shapes.len() {
            for r in 1..=self.shapes[k].len() {
                let grow = self.shapes[k].part(r) - self.shapes[k - 1].part(r);
                rows[r - 1].extend(std::iter::repeat_n(k, grow));
            }
        }
        rows
    }

    /// Parse a row-array Young tableau with entries ≤ level_bound.
    pub fn from_rows(rows: &[Vec<usize>], level_bound: usize) -> Result<Self> {
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} is not weakly increasing",
                    r + 1
                )));
            }
            for (c, &e) in row.iter().enumerate() {
                if e == 0 || e > level_bound {
                    return Err(Error::InvalidTableau(format!(
                        "entry {e} outside 1..={level_bound}"
                    )));
                }
                if r > 0 {
                    match rows[r - 1].get(c) {
                        Some(&above) if above < e => {}
                        _ => {
                            return Err(Error::InvalidTableau(format!(
                                "column {} is not strictly increasing at row {}",
                                c + 1,
                                r + 1
                            )))
                        }
                    }
                }
            }
        }
        let mut shapes = Vec::with_capacity(level_bound + 1);
        for k in 0..=level_bound {
            let parts: Vec<usize> = rows
                .iter()
                .map(|row| row.iter().filter(|&&e| e <= k).count())
                .collect();
            let shape =
                Partition::new(parts).map_err(|_| Error::InvalidTableau("bad shape".into()))?;
            shapes.push(shape);
        }
        ShapeChain::from_shapes(shapes)
    }
}

impl fmt::Display for ShapeChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.shapes.iter().enumerate() {
            if i > 0 {
                write!(f, "≺")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl TryFrom<Vec<Partition>> for ShapeChain {
    type Error = Error;
    fn try_from(v: Vec<Partition>) -> Result<Self> {
        ShapeChain::from_shapes(v)
    }
}

impl From<ShapeChain> for Vec<Partition> {
    fn from(c: ShapeChain) -> Vec<Partition> {
        c.shapes
    }
}

/// The recording tableau Q as a chain sh P(0) ≺ sh P(1) ≺ … ≺ sh P(n),
/// adding exactly one box per step.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct RecordingChain {
    shapes: Vec<Partition>,
}

impl RecordingChain {
    pub fn start() -> Self {
        RecordingChain {
            shapes: vec![Partition::empty()],
        }
    }

    pub fn from_shapes(shapes: Vec<Partition>) -> Result<Self> {
        if shapes.is_empty() || !shapes[0].is_empty() {
            return Err(Error::InvalidRecordingChain(0));
        }
        for i in 1..shapes.len() {
            if shapes[i].size() != shapes[i - 1].size() + 1
                || shapes[i - 1].added_row(&shapes[i]).is_none()
            {
                return Err(Error::InvalidRecordingChain(i));
            }
        }
        Ok(RecordingChain { shapes })
    }

    /// Number of recorded steps n.
    pub fn steps(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn top(&self) -> &Partition {
        self.shapes.last().unwrap()
    }

    pub fn extended(&self, shape: Partition) -> Result<Self> {
        let mut shapes = self.shapes.clone();
        shapes.push(shape);
        RecordingChain::from_shapes(shapes)
    }

    /// Standard-tableau row arrays (entry m in the row grown at step m).
    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = vec![vec![]; self.top().len()];
        for m in 1..self.shapes.len() {
            let r = self.shapes[m - 1].added_row(&self.shapes[m]).unwrap();
            rows[r - 1].push(m);
        }
        rows
    }

    /// View as a shape chain with level bound n.
    pub fn as_shape_chain(&self) -> ShapeChain {
        ShapeChain {
            shapes: self.shapes.clone(),
        }
    }
}

impl TryFrom<Vec<Partition>> for RecordingChain {
    type Error = Error;
    fn try_from(v: Vec<Partition>) -> Result<Self> {
        RecordingChain::from_shapes(v)
    }
}

impl From<RecordingChain> for Vec<Partition> {
    fn from(c: RecordingChain) -> Vec<Partition> {
        c.shapes
    }
}

/// A standard chain read back as a recording chain.
pub fn recording_from_chain(chain: &ShapeChain) -> Result<RecordingChain> {
    RecordingChain::from_shapes(chain.shapes.clone())
}

/// A word w₁w₂…w_n over the alphabet [ℓ].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
    alphabet_bound: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, alphabet_bound: usize) -> Result<Self> {
        for &w in &letters {
            if w == 0 || w > alphabet_bound {
                return Err(Error::LetterOutOfRange {
                    letter: w,
                    bound: alphabet_bound,
                });
            }
        }
        Ok(Word {
            letters,
            alphabet_bound,
        })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn alphabet_bound(&self) -> usize {
        self.alphabet_bound
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// w^r, the reversed word.
    pub fn reversed(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
            alphabet_bound: self.alphabet_bound,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&w| w <= 9) {
            for w in &self.letters {
                write!(f, "{w}")?;
            }
            Ok(())
        } else {
            let strs: Vec<String> = self.letters.iter().map(|w| w.to_string()).collect();
            write!(f, "{}", strs.join(","))
        }
    }
}

/// All words in [ℓ]^n.
pub fn all_words(alphabet_bound: usize, length: usize) -> Vec<Word> {
    let mut out = vec![vec![]];
    for _ in 0..length {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=alphabet_bound).map(move |k| {
                    let mut w = w.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|letters| Word::new(letters, alphabet_bound).unwrap())
        .collect()
}

/// σ as the sequence of images σ(1), …, σ(n).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// σ(m), 1-based.
    pub fn image(&self, m: usize) -> usize {
        self.images[m - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (m, &v) in self.images.iter().enumerate() {
            inv[v - 1] = m + 1;
        }
        Permutation { images: inv }
    }

    /// The word σ(1)σ(2)…σ(n) over [n].
    pub fn as_word(&self) -> Word {
        Word {
            letters: self.images.clone(),
            alphabet_bound: self.images.len(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_word())
    }
}

/// All of S_n in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    use itertools::Itertools;
    (1..=n)
        .permutations(n)
        .map(|images| Permutation { images })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn chain(shapes: &[&[usize]]) -> ShapeChain {
        ShapeChain::from_shapes(shapes.iter().map(|s| p(s)).collect()).unwrap()
    }

    #[test]
    fn paper_example_rows_to_chain() {
        let rows = vec![vec![1, 1, 3, 4], vec![3, 5, 8], vec![6, 7], vec![8, 8]];
        let c = ShapeChain::from_rows(&rows, 8).unwrap();
        let expected = chain(&[
            &[],
            &[2],
            &[2],
            &[3, 1],
            &[4, 1],
            &[4, 2],
            &[4, 2, 1],
            &[4, 2, 2],
            &[4, 3, 2, 2],
        ]);
        assert_eq!(c, expected);
        assert_eq!(c.to_rows(), rows);
    }

    #[test]
    fn empty_and_singleton_conversions() {
        let c = ShapeChain::from_rows(&[], 1).unwrap();
        assert_eq!(c, ShapeChain::empty(1));
        let single = ShapeChain::from_rows(&[vec![1]], 1).unwrap();
        assert_eq!(single, chain(&[&[], &[1]]));
    }

    #[test]
    fn invalid_rows_rejected() {
        // row not weakly increasing
        assert!(ShapeChain::from_rows(&[vec![2, 1]], 2).is_err());
        // column not strictly increasing
        assert!(ShapeChain::from_rows(&[vec![1, 1], vec![1]], 2).is_err());
        // second row longer than first
        assert!(ShapeChain::from_rows(&[vec![1], vec![2, 2]], 2).is_err());
    }

    #[test]
    fn inverse_examples() {
        let id = Permutation::identity(4);
        assert_eq!(id.inverse(), id);
        let tr = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(tr.inverse(), tr);
        let s = Permutation::new(vec![1, 4, 2, 3]).unwrap();
        assert_eq!(s.inverse(), Permutation::new(vec![1, 3, 4, 2]).unwrap());
    }

    #[test]
    fn recording_chain_is_standard_shape_chain() {
        let q = RecordingChain::from_shapes(vec![p(&[]), p(&[1]), p(&[1, 1]), p(&[2, 1])]).unwrap();
        assert!(q.as_shape_chain().is_standard());
        assert_eq!(q.to_rows(), vec![vec![1, 3], vec![2]]);
        // a chain repeating a shape is not a recording chain
        assert!(RecordingChain::from_shapes(vec![p(&[]), p(&[1]), p(&[1])]).is_err());
    }

    fn arb_rows() -> impl Strategy<Value = (Vec<Vec<usize>>, usize)> {
        prop::sample::select(all_words(3, 4)).prop_map(|w| {
            let (pc, _) = crate::classical::insert_word(
                crate::classical::InsertionAlgo::Column,
                &w,
            );
            (pc.to_rows(), 3)
        })
    }

    proptest! {
        #[test]
        fn conversion_round_trips((rows, ell) in arb_rows()) {
            let c = ShapeChain::from_rows(&rows, ell).unwrap();
            prop_assert_eq!(c.to_rows(), rows);
            let back = ShapeChain::from_rows(&c.to_rows(), ell).unwrap();
            prop_assert_eq!(back, c);
        }

        #[test]
        fn inverse_composes_to_identity(images in prop::sample::select(all_permutations(5))) {
            let inv = images.inverse();
            let composed: Vec<usize> = (1..=5).map(|i| inv.image(images.image(i))).collect();
            prop_assert_eq!(composed, (1..=5).collect::<Vec<_>>());
        }
    }
}
