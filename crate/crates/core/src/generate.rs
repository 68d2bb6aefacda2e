//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::election::Election;
use crate::graph::{PermutationDiagram, UndirectedGraph};

/// `n` votes over candidates `1..=m`, each uniform over all orders.
pub fn random_election<R: Rng + ?Sized>(m: usize, n: usize, rng: &mut R) -> Election {
    let votes = (0..n)
        .map(|_| {
            let mut v: Vec<usize> = (0..m).collect();
            v.shuffle(rng);
            v
        })
        .collect();
    Election::numbered(m, votes).expect("valid random profile")
}

/// Each pair is an edge independently with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(v: usize, p: f64, rng: &mut R) -> UndirectedGraph {
    let mut g = UndirectedGraph::numbered(v);
    for a in 0..v {
        for b in a + 1..v {
            if rng.gen_bool(p) {
                g.add_edge(a, b).expect("fresh pair");
            }
        }
    }
    g
}

/// Random recursive tree with shuffled labels.
pub fn random_tree<R: Rng + ?Sized>(v: usize, rng: &mut R) -> UndirectedGraph {
    let mut label: Vec<usize> = (0..v).collect();
    label.shuffle(rng);
    let mut g = UndirectedGraph::numbered(v);
    for i in 1..v {
        let parent = rng.gen_range(0..i);
        g.add_edge(label[parent], label[i]).expect("tree edge");
    }
    g
}

pub fn random_permutation_diagram<R: Rng + ?Sized>(v: usize, rng: &mut R) -> PermutationDiagram {
    let mut pi1: Vec<usize> = (0..v).collect();
    let mut pi2 = pi1.clone();
    pi1.shuffle(rng);
    pi2.shuffle(rng);
    PermutationDiagram::new(crate::election::numbered_names(v), pi1, pi2).expect("two permutations")
}

/// Comparability graph of a random partial order: a random DAG along a
/// shuffled order (arc probability `p`), transitively closed.
pub fn random_comparability_graph<R: Rng + ?Sized>(
    v: usize,
    p: f64,
    rng: &mut R,
) -> UndirectedGraph {
    let mut order: Vec<usize> = (0..v).collect();
    order.shuffle(rng);
    // below[i][j]: order[i] < order[j] in the poset
    let mut below = vec![vec![false; v]; v];
    for j in 0..v {
        for i in 0..j {
            if rng.gen_bool(p) {
                below[i][j] = true;
            }
        }
    }
    for j in 0..v {
        for i in (0..j).rev() {
            if below[i][j] {
                continue;
            }
            below[i][j] = (i + 1..j).any(|k| below[i][k] && below[k][j]);
        }
    }
    let mut g = UndirectedGraph::numbered(v);
    for j in 0..v {
        for i in 0..j {
            if below[i][j] {
                g.add_edge(order[i], order[j]).expect("fresh pair");
            }
        }
    }
    g
}
