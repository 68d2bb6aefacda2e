use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::orientation::{transitive_orientation, ComparabilityVerdict};
use super::{GraphError, UndirectedGraph};

/// Two orders of the same vertex set. The graph it witnesses has an edge
/// exactly for the pairs the two orders disagree on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationDiagram {
    vertices: Vec<String>,
    pi1: Vec<usize>,
    pi2: Vec<usize>,
}

fn check_permutation(n: usize, p: &[usize]) -> bool {
    let mut seen = vec![false; n];
    p.len() == n
        && p.iter()
            .all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

impl PermutationDiagram {
    /// `pi1` and `pi2` list vertex indices (into `vertices`) in order.
    pub fn new(
        vertices: Vec<String>,
        pi1: Vec<usize>,
        pi2: Vec<usize>,
    ) -> Result<Self, GraphError> {
        let n = vertices.len();
        if !check_permutation(n, &pi1) || !check_permutation(n, &pi2) {
            return Err(GraphError::Diagram(format!(
                "both orders must be permutations of the {n} vertices"
            )));
        }
        // validates names
        UndirectedGraph::new(vertices.clone())?;
        Ok(PermutationDiagram { vertices, pi1, pi2 })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn pi1(&self) -> &[usize] {
        &self.pi1
    }

    pub fn pi2(&self) -> &[usize] {
        &self.pi2
    }

    pub fn pi1_names(&self) -> Vec<&str> {
        self.pi1
            .iter()
            .map(|&v| self.vertices[v].as_str())
            .collect()
    }

    pub fn pi2_names(&self) -> Vec<&str> {
        self.pi2
            .iter()
            .map(|&v| self.vertices[v].as_str())
            .collect()
    }

    /// The witnessed graph, edges in sorted index order.
    pub fn graph(&self) -> UndirectedGraph {
        let n = self.vertices.len();
        let p1 = positions(&self.pi1);
        let p2 = positions(&self.pi2);
        let mut g = UndirectedGraph::new(self.vertices.clone()).expect("validated on construction");
        for u in 0..n {
            for v in u + 1..n {
                if (p1[u] < p1[v]) != (p2[u] < p2[v]) {
                    g.add_edge(u, v).expect("fresh pair");
                }
            }
        }
        g
    }

    /// Swaps the two orders; same graph.
    pub fn swapped(&self) -> Self {
        PermutationDiagram {
            vertices: self.vertices.clone(),
            pi1: self.pi2.clone(),
            pi2: self.pi1.clone(),
        }
    }

    /// Reverses both orders; same graph.
    pub fn reversed(&self) -> Self {
        PermutationDiagram {
            vertices: self.vertices.clone(),
            pi1: self.pi1.iter().rev().copied().collect(),
            pi2: self.pi2.iter().rev().copied().collect(),
        }
    }

    /// A diagram of `g` whose first order is `side`, if one exists.
    ///
    /// For `a` before `b` in `side`, the second order must put `b` first
    /// exactly when `ab` is an edge. That fixes a tournament; a diagram
    /// exists iff the tournament is acyclic.
    pub fn with_first_order(g: &UndirectedGraph, side: &[usize]) -> Option<Self> {
        let n = g.num_vertices();
        if !check_permutation(n, side) {
            return None;
        }
        let pos = positions(side);
        let mut succ = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                let (first, second) = if pos[u] < pos[v] { (u, v) } else { (v, u) };
                if g.has_edge(u, v) {
                    succ[second].push(first);
                } else {
                    succ[first].push(second);
                }
            }
        }
        let order = topological_order(n, &succ)?;
        let d = PermutationDiagram {
            vertices: g.names().to_vec(),
            pi1: side.to_vec(),
            pi2: order,
        };
        (d.graph() == *g).then_some(d)
    }
}

pub(crate) fn positions(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Kahn's algorithm, smallest ready index first; `None` on a cycle.
pub(crate) fn topological_order(n: usize, succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    for list in succ {
        for &v in list {
            indeg[v] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(u)) = ready.pop() {
        order.push(u);
        for &v in &succ[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                ready.push(Reverse(v));
            }
        }
    }
    (order.len() == n).then_some(order)
}

#[derive(Debug, Clone)]
pub enum PermutationVerdict {
    Permutation(PermutationDiagram),
    NotPermutation,
}

impl PermutationVerdict {
    pub fn diagram(self) -> Option<PermutationDiagram> {
        match self {
            PermutationVerdict::Permutation(d) => Some(d),
            PermutationVerdict::NotPermutation => None,
        }
    }

    pub fn is_permutation(&self) -> bool {
        matches!(self, PermutationVerdict::Permutation(_))
    }
}

/// A graph is a permutation graph iff it and its complement are both
/// comparability graphs. With transitive orientations `F1` of the graph and
/// `F2` of the complement, `F1 + F2` and `F1^-1 + F2` are acyclic
/// tournaments whose topological orders form a diagram.
pub fn recognize_permutation(g: &UndirectedGraph) -> PermutationVerdict {
    let ComparabilityVerdict::Comparability(f1) = transitive_orientation(g) else {
        return PermutationVerdict::NotPermutation;
    };
    let ComparabilityVerdict::Comparability(f2) = transitive_orientation(&g.complement()) else {
        return PermutationVerdict::NotPermutation;
    };
    let n = g.num_vertices();
    let mut forward = vec![Vec::new(); n];
    let mut backward = vec![Vec::new(); n];
    for &(u, v) in f1.arcs() {
        forward[u].push(v);
        backward[v].push(u);
    }
    for &(u, v) in f2.arcs() {
        forward[u].push(v);
        backward[u].push(v);
    }
    let (Some(pi1), Some(pi2)) = (
        topological_order(n, &forward),
        topological_order(n, &backward),
    ) else {
        return PermutationVerdict::NotPermutation;
    };
    let d = PermutationDiagram {
        vertices: g.names().to_vec(),
        pi1,
        pi2,
    };
    if d.graph() == *g {
        PermutationVerdict::Permutation(d)
    } else {
        PermutationVerdict::NotPermutation
    }
}
