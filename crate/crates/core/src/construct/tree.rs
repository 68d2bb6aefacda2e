use super::{ConstructionError, ImplementationResult};
use crate::election::Election;
use crate::graph::UndirectedGraph;

type Profile = [Vec<usize>; 3];

/// Three-voter implementation of a tree, rooted at its lexicographically
/// smallest vertex.
pub fn implement_tree(t: &UndirectedGraph) -> Result<ImplementationResult, ConstructionError> {
    if !t.is_tree() {
        return Err(ConstructionError::NotATree);
    }
    let root = (0..t.num_vertices())
        .min_by(|&a, &b| t.name(a).cmp(t.name(b)))
        .expect("a tree has a vertex");
    build(t, root)
}

pub fn implement_tree_rooted(
    t: &UndirectedGraph,
    root: &str,
) -> Result<ImplementationResult, ConstructionError> {
    if !t.is_tree() {
        return Err(ConstructionError::NotATree);
    }
    let r = t
        .vertex_index(root)
        .ok_or_else(|| ConstructionError::UnknownRoot(root.to_string()))?;
    build(t, r)
}

/// Bottom-up: every subtree gets a profile whose first vote ranks the
/// subtree root first.
///
/// For a vertex `r` with children `r_1..r_k`: stack the child profiles in
/// child order, pull `r_1..r_k` to the top of the first vote, then put `r`
/// right after them in the first vote, on top of the second and at the
/// bottom of the third. Reversing every vote and then the voter order
/// keeps the multi-crossing pairs and brings `r` to the top of vote one.
fn build(t: &UndirectedGraph, root: usize) -> Result<ImplementationResult, ConstructionError> {
    let n = t.num_vertices();
    let mut children = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        order.push(u);
        let mut kids: Vec<usize> = t
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&v| !seen[v])
            .collect();
        kids.sort_by(|&a, &b| t.name(a).cmp(t.name(b)));
        for &v in &kids {
            seen[v] = true;
            stack.push(v);
        }
        children[u] = kids;
    }

    let mut profiles: Vec<Option<Profile>> = vec![None; n];
    for &r in order.iter().rev() {
        let kids = &children[r];
        if kids.is_empty() {
            profiles[r] = Some([vec![r], vec![r], vec![r]]);
            continue;
        }
        let mut stacked: Profile = Default::default();
        for &c in kids {
            let p = profiles[c].take().expect("children are processed first");
            for (vote, part) in stacked.iter_mut().zip(p) {
                vote.extend(part);
            }
        }
        let k = kids.len();
        let mut first: Vec<usize> = kids.clone();
        first.push(r);
        first.extend(stacked[0].iter().copied().filter(|v| !kids.contains(v)));
        debug_assert_eq!(first.len(), stacked[0].len() + 1);
        debug_assert_eq!(first[k], r);

        let mut second = vec![r];
        second.extend_from_slice(&stacked[1]);
        let mut third = std::mem::take(&mut stacked[2]);
        third.push(r);

        // reverse each vote, then the voter order
        first.reverse();
        second.reverse();
        third.reverse();
        debug_assert_eq!(third[0], r);
        profiles[r] = Some([third, second, first]);
    }

    let votes = profiles[root].take().expect("root processed last");
    let election = Election::from_indices(t.names().to_vec(), votes.into())?;
    ImplementationResult::verify(election, t.clone())
}
