//! Compute the growth graph of the permutation 1423 and print it as
//! Graphviz DOT, then show that collapsing its genealogies reproduces
//! the insertion engine's weighted pair set.

use qgrowth::{branch_insert_word, growth_graph, Permutation, QColumn, Variant};

fn main() {
    let sigma = Permutation::new(vec![1, 4, 2, 3]).unwrap();
    let graph = growth_graph(Variant::QCol, &sigma).unwrap();
    print!("{}", graph.to_dot());

    let pairs = graph.pairs().unwrap();
    let via_insertion = branch_insert_word(&QColumn, &sigma.as_word()).unwrap();
    eprintln!(
        "graph has {} nodes; pair sets agree with insertion: {}",
        graph.nodes.len(),
        pairs == via_insertion
    );
}
