//! Transitive orientation by implication-class forcing.
//!
//! The classes are peeled off one at a time: an edge of the remaining graph
//! is oriented, everything it forces (through the Γ relation of the
//! remaining graph) is oriented with it, and the whole class is removed
//! before the next pick. The graph is a comparability graph iff no class
//! forces both directions of an edge; the union of the classes is then a
//! transitive orientation, which is checked explicitly before release.

use std::collections::VecDeque;

use super::{GraphError, UndirectedGraph};

/// One arc per edge of `base`.
#[derive(Debug, Clone)]
pub struct Orientation {
    base: UndirectedGraph,
    arcs: Vec<(usize, usize)>,
    succ: Vec<Vec<usize>>,
    transitive: bool,
}

impl Orientation {
    /// `arcs` must orient every edge of `base` exactly once, in any order.
    /// The result is unverified.
    pub fn new(base: UndirectedGraph, arcs: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let n = base.num_vertices();
        if arcs.len() != base.num_edges() {
            return Err(GraphError::ArcCount {
                arcs: arcs.len(),
                edges: base.num_edges(),
            });
        }
        let mut used = vec![false; n * n];
        let mut succ = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange(u.max(v)));
            }
            let key = u.min(v) * n + u.max(v);
            if !base.has_edge(u, v) || used[key] {
                return Err(GraphError::BadArc(
                    base.name(u).to_string(),
                    base.name(v).to_string(),
                ));
            }
            used[key] = true;
            succ[u].push(v);
        }
        Ok(Orientation {
            base,
            arcs,
            succ,
            transitive: false,
        })
    }

    pub fn base(&self) -> &UndirectedGraph {
        &self.base
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn num_vertices(&self) -> usize {
        self.base.num_vertices()
    }

    /// Whether the arc `u -> v` is present.
    pub fn points(&self, u: usize, v: usize) -> bool {
        self.base.has_edge(u, v) && self.succ[u].contains(&v)
    }

    pub fn is_verified(&self) -> bool {
        self.transitive
    }

    /// Runs the transitivity check and records the outcome.
    pub fn verify(&mut self) -> bool {
        self.transitive = is_transitive(self.num_vertices(), &self.arcs);
        self.transitive
    }

    /// Every arc flipped. Transitivity is preserved, so a verified flag carries over.
    pub fn reversed(&self) -> Orientation {
        let arcs = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        let mut o = Orientation::new(self.base.clone(), arcs).expect("same edges");
        o.transitive = self.transitive;
        o
    }

    /// Sub-orientation induced by `keep`, re-verified.
    pub fn induced(&self, keep: &[usize]) -> Orientation {
        let base = self.base.induced(keep);
        let mut local = vec![usize::MAX; self.num_vertices()];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]))
            .collect();
        let mut o = Orientation::new(base, arcs).expect("induced arcs orient induced edges");
        o.verify();
        o
    }
}

/// Independent transitivity check: for all arcs `(u,v)`, `(v,w)` the arc
/// `(u,w)` is present.
pub fn is_transitive(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut arc = vec![false; n * n];
    let mut succ = vec![Vec::new(); n];
    for &(u, v) in arcs {
        arc[u * n + v] = true;
        succ[u].push(v);
    }
    arcs.iter()
        .all(|&(u, v)| succ[v].iter().all(|&w| w != u && arc[u * n + w]))
}

#[derive(Debug, Clone)]
pub enum ComparabilityVerdict {
    /// A verified transitive orientation.
    Comparability(Orientation),
    NotComparability,
}

impl ComparabilityVerdict {
    pub fn orientation(self) -> Option<Orientation> {
        match self {
            ComparabilityVerdict::Comparability(o) => Some(o),
            ComparabilityVerdict::NotComparability => None,
        }
    }

    pub fn is_comparability(&self) -> bool {
        matches!(self, ComparabilityVerdict::Comparability(_))
    }
}

const NONE: u8 = 0;
/// Arc stored for `(u, v)` means `u -> v`.
const FORWARD: u8 = 1;

pub fn transitive_orientation(g: &UndirectedGraph) -> ComparabilityVerdict {
    let n = g.num_vertices();
    // remaining[u*n+v]: edge still in the graph being decomposed
    let mut remaining = vec![false; n * n];
    for &(u, v) in g.edges() {
        remaining[u * n + v] = true;
        remaining[v * n + u] = true;
    }
    // class_mark[u*n+v] = FORWARD if u->v was placed in the current class
    let mut class_mark = vec![NONE; n * n];
    let mut arcs = Vec::with_capacity(g.num_edges());
    let mut done = 0usize;
    let mut next_edge = 0usize;

    while done < g.num_edges() {
        while {
            let (u, v) = g.edges()[next_edge];
            !remaining[u * n + v]
        } {
            next_edge += 1;
        }
        let (u0, v0) = g.edges()[next_edge];

        let mut class = vec![(u0, v0)];
        class_mark[u0 * n + v0] = FORWARD;
        let mut queue = VecDeque::from([(u0, v0)]);
        while let Some((a, b)) = queue.pop_front() {
            // (a,b) forces (a,c) when c ~ a, c != b and c !~ b; and (c,b) when
            // c ~ b, c != a and c !~ a; adjacency taken in the remaining graph.
            for &c in g.neighbors(a) {
                if c == b || !remaining[a * n + c] || remaining[b * n + c] {
                    continue;
                }
                if class_mark[c * n + a] == FORWARD {
                    return ComparabilityVerdict::NotComparability;
                }
                if class_mark[a * n + c] == NONE {
                    class_mark[a * n + c] = FORWARD;
                    class.push((a, c));
                    queue.push_back((a, c));
                }
            }
            for &c in g.neighbors(b) {
                if c == a || !remaining[b * n + c] || remaining[a * n + c] {
                    continue;
                }
                if class_mark[b * n + c] == FORWARD {
                    return ComparabilityVerdict::NotComparability;
                }
                if class_mark[c * n + b] == NONE {
                    class_mark[c * n + b] = FORWARD;
                    class.push((c, b));
                    queue.push_back((c, b));
                }
            }
        }

        for &(a, b) in &class {
            if class_mark[b * n + a] == FORWARD {
                return ComparabilityVerdict::NotComparability;
            }
        }
        for &(a, b) in &class {
            class_mark[a * n + b] = NONE;
            remaining[a * n + b] = false;
            remaining[b * n + a] = false;
        }
        done += class.len();
        arcs.extend(class);
    }

    let mut o = Orientation::new(g.clone(), arcs).expect("every edge oriented once");
    if o.verify() {
        ComparabilityVerdict::Comparability(o)
    } else {
        ComparabilityVerdict::NotComparability
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oriented(g: &UndirectedGraph) -> Orientation {
        match transitive_orientation(g) {
            ComparabilityVerdict::Comparability(o) => {
                assert!(o.is_verified());
                assert!(is_transitive(g.num_vertices(), o.arcs()));
                assert_eq!(o.arcs().len(), g.num_edges());
                o
            }
            ComparabilityVerdict::NotComparability => panic!("expected a comparability graph"),
        }
    }

    #[test]
    fn path_is_oriented_between_sides() {
        let g = UndirectedGraph::path(4);
        let o = oriented(&g);
        // every vertex is a pure source or a pure sink
        for v in 0..4 {
            let out = o.successors(v).len();
            assert!(out == 0 || out == g.degree(v), "vertex {v}");
        }
    }

    #[test]
    fn odd_cycles_rejected() {
        assert!(!transitive_orientation(&UndirectedGraph::cycle(5)).is_comparability());
        assert!(!transitive_orientation(&UndirectedGraph::cycle(7)).is_comparability());
    }

    #[test]
    fn complete_and_bipartite_accepted() {
        oriented(&UndirectedGraph::complete(crate::election::numbered_names(6)).unwrap());
        oriented(&UndirectedGraph::cycle(8));
        oriented(&UndirectedGraph::parse(super::super::tests::CUBE).unwrap());
        oriented(&UndirectedGraph::numbered(4));
    }

    #[test]
    fn complements() {
        // C6 is not a permutation graph, so its complement (the prism) has no
        // transitive orientation; P5 is one, so its complement has.
        assert!(
            !transitive_orientation(&UndirectedGraph::cycle(6).complement()).is_comparability()
        );
        oriented(&UndirectedGraph::path(5).complement());
    }

    #[test]
    fn orientation_constructor_checks_arcs() {
        let g = UndirectedGraph::path(3);
        assert!(Orientation::new(g.clone(), vec![(0, 1)]).is_err());
        assert!(Orientation::new(g.clone(), vec![(0, 1), (1, 0)]).is_err());
        assert!(Orientation::new(g.clone(), vec![(0, 2), (1, 2)]).is_err());
        let mut o = Orientation::new(g, vec![(0, 1), (1, 2)]).unwrap();
        assert!(!o.is_verified());
        assert!(!o.verify());
    }
}
