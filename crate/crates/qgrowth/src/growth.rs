//! The growth-graph engine: five-case local rules over a permutation
//! matrix, a merged column-by-column dynamic program, and full graph
//! export with branch genealogies.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::branching::WeightedPairSet;
use crate::error::{Error, Result};
use crate::qrat::{one_minus_qpow, qpow, QRat};
use crate::rules::{qcol_w1, qrow_g};
use crate::shapes::Partition;
use crate::tableaux::{Permutation, RecordingChain, ShapeChain};

/// Which family of local rules drives the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    QCol,
    QRow,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::QCol => "qcol",
            Variant::QRow => "qrow",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "qcol" => Ok(Variant::QCol),
            "qrow" => Ok(Variant::QRow),
            _ => Err(Error::UnknownAlgorithm(name.to_string())),
        }
    }
}

fn connected(lambda: &Partition, mu: &Partition) -> bool {
    mu == lambda || lambda.added_row(mu).is_some()
}

/// The weighted set of northeast labels ν for a box with southwest λ,
/// northwest μ¹, southeast μ², and an X mark or not. Branches are
/// listed by descending row of the added box.
pub fn local_rule(
    variant: Variant,
    lambda: &Partition,
    mu1: &Partition,
    mu2: &Partition,
    has_x: bool,
) -> Result<Vec<(Partition, QRat)>> {
    if !connected(lambda, mu1) || !connected(lambda, mu2) {
        return Err(Error::InvalidTriplet(
            lambda.to_string(),
            mu1.to_string(),
            mu2.to_string(),
        ));
    }
    if has_x && (mu1 != lambda || mu2 != lambda) {
        return Err(Error::InvalidTriplet(
            lambda.to_string(),
            mu1.to_string(),
            mu2.to_string(),
        ));
    }

    if has_x {
        return Ok(match variant {
            Variant::QCol => {
                // every addable row, split geometrically: row j gets
                // q^{λ_j} − q^{λ_{j−1}}, read as q^{λ_1} for j = 1
                let mut out = Vec::new();
                for j in (1..=lambda.len() + 1).rev() {
                    if let Some(nu) = lambda.add_box(j) {
                        let w = if j == 1 {
                            qpow(lambda.part(1))
                        } else {
                            &qpow(lambda.part(j)) - &qpow(lambda.part(j - 1))
                        };
                        if !w.is_zero() {
                            out.push((nu, w));
                        }
                    }
                }
                out
            }
            Variant::QRow => vec![(lambda.add_box(1).unwrap(), QRat::one())],
        });
    }

    // the deterministic cases
    if mu1 == lambda && mu2 == lambda {
        return Ok(vec![(lambda.clone(), QRat::one())]);
    }
    if mu1 == lambda {
        return Ok(vec![(mu2.clone(), QRat::one())]);
    }
    if mu2 == lambda {
        return Ok(vec![(mu1.clone(), QRat::one())]);
    }
    if mu1 != mu2 {
        return Ok(vec![(mu1.union(mu2), QRat::one())]);
    }

    // μ¹ = μ² = λ + e_i: the branching case
    let i = lambda.added_row(mu1).unwrap();
    let mu = mu1;
    Ok(match variant {
        Variant::QCol => {
            if i == 1 {
                // no displayed closed form at i = 1; the insertion-side
                // high weight is deterministic there
                let mut out = Vec::new();
                let w = qcol_w1(lambda, mu, 1, 1);
                if !w.is_zero() {
                    out.push((mu.add_box(1).unwrap(), w));
                }
                out
            } else {
                let den = one_minus_qpow(lambda.part(i - 1) - lambda.part(i));
                let mut out = Vec::new();
                for j in (1..=i).rev() {
                    let Some(nu) = mu.add_box(j) else { continue };
                    let w = if j == i {
                        &one_minus_qpow(lambda.part(i - 1) - lambda.part(i) - 1) / &den
                    } else if j >= 2 {
                        &(&(&one_minus_qpow(1) / &den)
                            * &qpow(lambda.part(j) - lambda.part(i) - 1))
                            * &one_minus_qpow(lambda.part(j - 1) - lambda.part(j))
                    } else {
                        &(&one_minus_qpow(1) / &den) * &qpow(lambda.part(1) - lambda.part(i) - 1)
                    };
                    if !w.is_zero() {
                        out.push((nu, w));
                    }
                }
                out
            }
        }
        Variant::QRow => {
            let g = qrow_g(i, lambda, mu);
            let stay = &QRat::one() - &g;
            let mut out = Vec::new();
            if let Some(nu) = mu.add_box(i + 1) {
                if !g.is_zero() {
                    out.push((nu, g));
                }
            }
            if let Some(nu) = mu.add_box(i) {
                if !stay.is_zero() {
                    out.push((nu, stay));
                }
            }
            out
        }
    })
}

/// Run the growth diagram of σ as a merged dynamic program: states are
/// (current column labels, recording prefix) with weights added when
/// they collide. Returns the weighted (P, Q) pair set off the right and
/// top edges.
pub fn growth_compute(variant: Variant, sigma: &Permutation) -> Result<WeightedPairSet> {
    let n = sigma.len();
    let mut states: BTreeMap<(Vec<Partition>, Vec<Partition>), QRat> = BTreeMap::new();
    states.insert(
        (vec![Partition::empty(); n + 1], vec![Partition::empty()]),
        QRat::one(),
    );
    for m in 1..=n {
        let x_level = sigma.image(m);
        let mut next: BTreeMap<(Vec<Partition>, Vec<Partition>), QRat> = BTreeMap::new();
        for ((col, qpre), w) in &states {
            let mut partials: Vec<(Vec<Partition>, QRat)> =
                vec![(vec![Partition::empty()], QRat::one())];
            for k in 1..=n {
                let mut grown = Vec::new();
                for (pcol, pw) in &partials {
                    let targets =
                        local_rule(variant, &col[k - 1], &col[k], &pcol[k - 1], x_level == k)?;
                    for (nu, tw) in targets {
                        let mut extended = pcol.clone();
                        extended.push(nu);
                        grown.push((extended, pw * &tw));
                    }
                }
                partials = grown;
            }
            for (ncol, pw) in partials {
                let mut qnew = qpre.clone();
                qnew.push(ncol[n].clone());
                let entry = next.entry((ncol, qnew)).or_insert_with(QRat::zero);
                *entry = &*entry + &(w * &pw);
            }
        }
        next.retain(|_, w| !w.is_zero());
        states = next;
    }
    let mut pairs = Vec::new();
    for ((col, qpre), w) in states {
        let p = ShapeChain::from_shapes(col)?;
        let q = RecordingChain::from_shapes(qpre)?;
        pairs.push(((p, q), w));
    }
    Ok(WeightedPairSet::from_entries(pairs))
}

/// One labeled corner of the unmerged growth graph. `west` and `south`
/// are indices into the graph's node list; `weight` is the local branch
/// weight of the box whose northeast corner this node is.
#[derive(Debug, Clone, Serialize)]
pub struct GraphNode {
    pub name: String,
    pub column: usize,
    pub level: usize,
    pub branch: usize,
    pub shape: Partition,
    pub west: Option<usize>,
    pub south: Option<usize>,
    pub weight: QRat,
    pub weight_display: String,
}

/// The fully expanded growth graph of a permutation: every genealogy is
/// a separate node chain, so merged weights are sums over genealogies.
#[derive(Debug, Clone, Serialize)]
pub struct GrowthGraph {
    pub variant: String,
    pub n: usize,
    pub level_bound: usize,
    pub x_marks: Vec<(usize, usize)>,
    pub nodes: Vec<GraphNode>,
}

impl GrowthGraph {
    /// Collapse genealogies into the weighted (P, Q) pair set.
    pub fn pairs(&self) -> Result<WeightedPairSet> {
        let mut entries = Vec::new();
        for (id, node) in self.nodes.iter().enumerate() {
            if node.column != self.n || node.level != self.level_bound {
                continue;
            }
            let mut weight = QRat::one();
            let mut q_shapes = Vec::new();
            let mut top = Some(id);
            while let Some(t) = top {
                q_shapes.push(self.nodes[t].shape.clone());
                let mut cur = Some(t);
                while let Some(c) = cur {
                    weight = &weight * &self.nodes[c].weight;
                    cur = self.nodes[c].south;
                }
                top = self.nodes[t].west;
            }
            q_shapes.reverse();
            let mut p_shapes = Vec::new();
            let mut cur = Some(id);
            while let Some(c) = cur {
                p_shapes.push(self.nodes[c].shape.clone());
                cur = self.nodes[c].south;
            }
            p_shapes.reverse();
            let p = ShapeChain::from_shapes(p_shapes)?;
            let q = RecordingChain::from_shapes(q_shapes)?;
            entries.push(((p, q), weight));
        }
        Ok(WeightedPairSet::from_entries(entries))
    }

    /// Graphviz rendering: vertical and horizontal edges both labeled
    /// with the (shared) local weight, X boxes annotated on their
    /// northeast corner nodes.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph growth {\n");
        out.push_str("  rankdir=BT;\n  node [shape=box];\n");
        for (m, k) in &self.x_marks {
            out.push_str(&format!("  // X at box ({m}, {k})\n"));
        }
        for node in &self.nodes {
            let x = self
                .x_marks
                .iter()
                .any(|&(m, k)| m == node.column && k == node.level);
            let mark = if x { " X" } else { "" };
            out.push_str(&format!(
                "  \"{}\" [label=\"{}{}\"];\n",
                node.name, node.shape, mark
            ));
        }
        for node in &self.nodes {
            let label = if node.south.is_some() || node.west.is_some() {
                format!(" [label=\"{}\"]", node.weight_display)
            } else {
                String::new()
            };
            if let Some(s) = node.south {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\"{};\n",
                    self.nodes[s].name, node.name, label
                ));
            }
            if let Some(w) = node.west {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\"{} [style=dashed];\n",
                    self.nodes[w].name, node.name, label
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Build the unmerged growth graph of σ: one node per (genealogy, box
/// corner), with branch ids assigned within each (column, level) cell
/// in order of creation (branches fan by descending target row).
pub fn growth_graph(variant: Variant, sigma: &Permutation) -> Result<GrowthGraph> {
    let n = sigma.len();
    let mut nodes: Vec<GraphNode> = Vec::new();
    let mut vsucc: Vec<Vec<usize>> = Vec::new();
    let mut cell_counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();

    let push_node = |nodes: &mut Vec<GraphNode>,
                         vsucc: &mut Vec<Vec<usize>>,
                         cell_counts: &mut BTreeMap<(usize, usize), usize>,
                         column: usize,
                         level: usize,
                         shape: Partition,
                         west: Option<usize>,
                         south: Option<usize>,
                         weight: QRat|
     -> usize {
        let branch = *cell_counts
            .entry((column, level))
            .and_modify(|c| *c += 1)
            .or_insert(0);
        let id = nodes.len();
        let display = weight.to_string();
        nodes.push(GraphNode {
            name: format!("{column}_{level}_{branch}"),
            column,
            level,
            branch,
            shape,
            west,
            south,
            weight,
            weight_display: display,
        });
        vsucc.push(Vec::new());
        if let Some(s) = south {
            vsucc[s].push(id);
        }
        id
    };

    // boundary column m = 0
    let mut prev_top: Vec<usize> = Vec::new();
    let mut south = None;
    for k in 0..=n {
        let id = push_node(
            &mut nodes,
            &mut vsucc,
            &mut cell_counts,
            0,
            k,
            Partition::empty(),
            None,
            south,
            QRat::one(),
        );
        prev_top.push(id);
        south = Some(id);
    }
    let mut col_zero: usize = prev_top[0];

    for m in 1..=n {
        let x_level = sigma.image(m);
        let zero = push_node(
            &mut nodes,
            &mut vsucc,
            &mut cell_counts,
            m,
            0,
            Partition::empty(),
            Some(col_zero),
            None,
            QRat::one(),
        );
        let mut frontier = vec![zero];
        for k in 1..=n {
            let mut grown = Vec::new();
            for &s in &frontier {
                let lam_id = nodes[s].west.expect("interior nodes have a west parent");
                for mu1_id in vsucc[lam_id].clone() {
                    let targets = local_rule(
                        variant,
                        &nodes[lam_id].shape,
                        &nodes[mu1_id].shape,
                        &nodes[s].shape,
                        x_level == k,
                    )?;
                    for (nu, w) in targets {
                        let id = push_node(
                            &mut nodes,
                            &mut vsucc,
                            &mut cell_counts,
                            m,
                            k,
                            nu,
                            Some(mu1_id),
                            Some(s),
                            w,
                        );
                        grown.push(id);
                    }
                }
            }
            frontier = grown;
        }
        col_zero = zero;
    }

    Ok(GrowthGraph {
        variant: variant.name().to_string(),
        n,
        level_bound: n,
        x_marks: (1..=n).map(|m| (m, sigma.image(m))).collect(),
        nodes,
    })
}
