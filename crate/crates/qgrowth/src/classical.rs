//! Classical Robinson-Schensted column and row insertion expressed as
//! shape-chain recursions, plus the deterministic growth diagram for
//! permutation input.

use crate::error::{Error, Result};
use crate::shapes::Partition;
use crate::tableaux::{Permutation, RecordingChain, ShapeChain, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertionAlgo {
    Column,
    Row,
}

/// Column insertion of a letter via the row-index recursion
/// j_{k-1} = k, j_i = max({j ≤ j_{i-1} : λ^{i-1}_{j-1} > λ^i_j} ∪ {1}).
pub fn col_insert(chain: &ShapeChain, k: usize) -> Result<ShapeChain> {
    let ell = chain.level_bound();
    if k == 0 || k > ell {
        return Err(Error::LetterOutOfRange { letter: k, bound: ell });
    }
    let mut shapes: Vec<Partition> = chain.shapes()[..k].to_vec();
    let mut j_prev = k;
    for i in k..=ell {
        let mut j = 1;
        for cand in (2..=j_prev).rev() {
            if chain.at(i - 1).part(cand - 1) > chain.at(i).part(cand) {
                j = cand;
                break;
            }
        }
        shapes.push(chain.at(i).add_box(j).expect("column insertion row is admissible"));
        j_prev = j;
    }
    ShapeChain::from_shapes(shapes)
}

/// Row insertion of a letter via the level recursion
/// k_0 = k, k_j = min({k' > k_{j-1} : λ^{k'}_j > λ^{k'-1}_j} ∪ {ℓ+1}).
pub fn row_insert(chain: &ShapeChain, k: usize) -> Result<ShapeChain> {
    let ell = chain.level_bound();
    if k == 0 || k > ell {
        return Err(Error::LetterOutOfRange { letter: k, bound: ell });
    }
    let mut shapes: Vec<Partition> = chain.shapes()[..k].to_vec();
    let mut k_prev = k;
    let mut j = 1;
    while k_prev <= ell {
        let mut k_next = ell + 1;
        for cand in (k_prev + 1)..=ell {
            if chain.at(cand).part(j) > chain.at(cand - 1).part(j) {
                k_next = cand;
                break;
            }
        }
        for i in k_prev..k_next {
            shapes.push(chain.at(i).add_box(j).expect("row insertion row is admissible"));
        }
        k_prev = k_next;
        j += 1;
    }
    ShapeChain::from_shapes(shapes)
}

/// Insert a word letter by letter; Q records the top shapes sh P(m).
pub fn insert_word(algo: InsertionAlgo, w: &Word) -> (ShapeChain, RecordingChain) {
    let (p, q, _) = insert_word_with_states(algo, w);
    (p, q)
}

/// Same as [`insert_word`], also returning every intermediate chain P(m)
/// (the growth-diagram vertex labels λ^k(m)).
pub fn insert_word_with_states(
    algo: InsertionAlgo,
    w: &Word,
) -> (ShapeChain, RecordingChain, Vec<ShapeChain>) {
    let mut p = ShapeChain::empty(w.alphabet_bound());
    let mut q = RecordingChain::start();
    let mut states = vec![p.clone()];
    for &letter in w.letters() {
        p = match algo {
            InsertionAlgo::Column => col_insert(&p, letter),
            InsertionAlgo::Row => row_insert(&p, letter),
        }
        .expect("word letters are within the alphabet bound");
        q = q.extended(p.top().clone()).expect("top shape grows by one box");
        states.push(p.clone());
    }
    (p, q, states)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FillOrder {
    ColumnMajor,
    RowMajor,
}

/// The five-case deterministic growth diagram for a permutation; equals
/// column insertion of the word σ(1)…σ(n).
pub fn classical_growth(sigma: &Permutation) -> Result<(ShapeChain, RecordingChain)> {
    classical_growth_with_order(sigma, FillOrder::ColumnMajor)
}

/// Local rule at one box: λ southwest, μ¹ west, μ² south.
fn classical_local(
    lambda: &Partition,
    mu1: &Partition,
    mu2: &Partition,
    has_x: bool,
) -> Partition {
    if has_x {
        debug_assert!(lambda == mu1 && lambda == mu2);
        // Case 1: new row at the bottom.
        return lambda.add_box(lambda.len() + 1).unwrap();
    }
    if lambda == mu1 {
        return mu2.clone(); // Case 2 (also the boring intersection)
    }
    if lambda == mu2 {
        return mu1.clone(); // Case 3
    }
    let i = lambda.added_row(mu1).expect("μ¹ is λ plus one box");
    let j = lambda.added_row(mu2).expect("μ² is λ plus one box");
    if i != j {
        mu1.union(mu2) // Case 4
    } else {
        // Case 5: i' = max({j ≤ i : μ¹_{j-1} > μ¹_j} ∪ {1})
        let mut row = 1;
        for cand in (2..=i).rev() {
            if mu1.part(cand - 1) > mu1.part(cand) {
                row = cand;
                break;
            }
        }
        mu1.add_box(row).expect("case 5 target is a partition")
    }
}

/// Growth diagram filled in an explicit box order; the labels are
/// order-independent because the local rule is deterministic.
pub fn classical_growth_with_order(
    sigma: &Permutation,
    order: FillOrder,
) -> Result<(ShapeChain, RecordingChain)> {
    let n = sigma.len();
    // grid[m][k] = label of vertex (m, k)
    let mut grid = vec![vec![Partition::empty(); n + 1]; n + 1];
    let boxes: Vec<(usize, usize)> = match order {
        FillOrder::ColumnMajor => (1..=n)
            .flat_map(|m| (1..=n).map(move |k| (m, k)))
            .collect(),
        FillOrder::RowMajor => (1..=n)
            .flat_map(|k| (1..=n).map(move |m| (m, k)))
            .collect(),
    };
    for (m, k) in boxes {
        let nu = classical_local(
            &grid[m - 1][k - 1],
            &grid[m - 1][k],
            &grid[m][k - 1],
            sigma.image(m) == k,
        );
        grid[m][k] = nu;
    }
    let p = ShapeChain::from_shapes(grid[n].clone())?;
    let q = RecordingChain::from_shapes((0..=n).map(|m| grid[m][n].clone()).collect())?;
    Ok((p, q))
}
