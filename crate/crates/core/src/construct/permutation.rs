use super::{ConstructionError, ImplementationResult};
use crate::election::Election;
use crate::graph::{PermutationDiagram, UndirectedGraph};

/// The profile `(pi1, pi2, pi1)`: a pair crosses twice exactly when the two
/// orders disagree on it.
pub fn implement_permutation_graph(
    d: &PermutationDiagram,
) -> Result<ImplementationResult, ConstructionError> {
    let election = Election::from_indices(
        d.vertices().to_vec(),
        vec![d.pi1().to_vec(), d.pi2().to_vec(), d.pi1().to_vec()],
    )?;
    ImplementationResult::verify(election, d.graph())
}

/// Three-voter implementation of the intersection of two permutation
/// graphs on the same vertices.
///
/// With diagrams `(p, q)` of the first graph and `(q, r)` of the second,
/// the profile `(p, q, r)` has a pair crossing twice exactly when both `p`
/// and `r` disagree with `q` on it. Arbitrary diagrams do not share an
/// order, and relabeling one diagram changes its graph, so the shared
/// middle order is searched for: every order of either diagram (and its
/// reversal) is tried as the middle voter, completing the other graph's
/// diagram around it. If none fits, [`ConstructionError::NoCommonOrder`] is
/// returned. Such pairs exist even when the intersection is not
/// 3-implementable at all (for example two permutation graphs meeting in a
/// five-cycle).
pub fn intersect_implementations(
    d1: &PermutationDiagram,
    d2: &PermutationDiagram,
) -> Result<ImplementationResult, ConstructionError> {
    let mut names1 = d1.vertices().to_vec();
    let mut names2 = d2.vertices().to_vec();
    names1.sort();
    names2.sort();
    if names1 != names2 {
        return Err(ConstructionError::VertexMismatch);
    }
    let g1 = d1.graph();
    // second graph re-indexed onto the first diagram's vertex order
    let g2 = {
        let g = d2.graph();
        let mut h = UndirectedGraph::new(d1.vertices().to_vec())?;
        for &(u, v) in g.edges() {
            h.add_edge_by_name(g.name(u), g.name(v))?;
        }
        h
    };
    let remap = |order: &[usize]| -> Vec<usize> {
        order
            .iter()
            .map(|&v| {
                g1.vertex_index(&d2.vertices()[v])
                    .expect("same vertex names")
            })
            .collect()
    };

    let candidates = [
        d1.pi2().to_vec(),
        d1.pi1().to_vec(),
        d1.pi2().iter().rev().copied().collect::<Vec<_>>(),
        d1.pi1().iter().rev().copied().collect(),
        remap(d2.pi1()),
        remap(d2.pi2()),
        remap(d2.pi1()).into_iter().rev().collect(),
        remap(d2.pi2()).into_iter().rev().collect(),
    ];
    for middle in candidates {
        let Some(left) = PermutationDiagram::with_first_order(&g1, &middle) else {
            continue;
        };
        let Some(right) = PermutationDiagram::with_first_order(&g2, &middle) else {
            continue;
        };
        let election = Election::from_indices(
            d1.vertices().to_vec(),
            vec![left.pi2().to_vec(), middle, right.pi2().to_vec()],
        )?;
        let mut target = UndirectedGraph::new(d1.vertices().to_vec())?;
        for &(u, v) in g1.edges() {
            if g2.has_edge(u, v) {
                target.add_edge(u, v)?;
            }
        }
        return ImplementationResult::verify(election, target);
    }
    Err(ConstructionError::NoCommonOrder)
}
