//! Three-voter profiles for edgeless graphs, cliques, paths and even cycles.

use super::{ConstructionError, ImplementationResult};
use crate::election::Election;
use crate::graph::UndirectedGraph;

/// Three identical votes.
pub fn implement_empty(vertices: Vec<String>) -> Result<ImplementationResult, ConstructionError> {
    if vertices.is_empty() {
        return Err(ConstructionError::TooSmall { min: 1, got: 0 });
    }
    let target = UndirectedGraph::new(vertices.clone())?;
    let order: Vec<usize> = (0..vertices.len()).collect();
    let election = Election::from_indices(vertices, vec![order.clone(), order.clone(), order])?;
    ImplementationResult::verify(election, target)
}

/// First and third voters agree, the second reverses them.
pub fn implement_clique(vertices: Vec<String>) -> Result<ImplementationResult, ConstructionError> {
    if vertices.is_empty() {
        return Err(ConstructionError::TooSmall { min: 1, got: 0 });
    }
    let target = UndirectedGraph::complete(vertices.clone())?;
    let order: Vec<usize> = (0..vertices.len()).collect();
    let reversed = order.iter().rev().copied().collect();
    let election = Election::from_indices(vertices, vec![order.clone(), reversed, order])?;
    ImplementationResult::verify(election, target)
}

/// Votes of the path construction on candidates `0..s` (named `1..=s`):
/// the outer votes swap `2i, 2i+1`, the middle vote swaps `2i-1, 2i`.
fn path_votes(s: usize) -> (Vec<usize>, Vec<usize>) {
    let mut outer: Vec<usize> = (0..s).collect();
    // candidate 2i sits at index 2i-1 (1-based labels)
    for i in 1..=(s - 1) / 2 {
        outer.swap(2 * i - 1, 2 * i);
    }
    let mut middle: Vec<usize> = (0..s).collect();
    for i in 1..=s / 2 {
        middle.swap(2 * i - 2, 2 * i - 1);
    }
    (outer, middle)
}

/// Three-voter profile whose multi-crossing graph is the path `1 - 2 - ... - s`.
pub fn implement_path(s: usize) -> Result<ImplementationResult, ConstructionError> {
    if s < 2 {
        return Err(ConstructionError::TooSmall { min: 2, got: s });
    }
    let (outer, middle) = path_votes(s);
    let election = Election::numbered(s, vec![outer.clone(), middle, outer])?;
    ImplementationResult::verify(election, UndirectedGraph::path(s))
}

/// Three-voter profile for the cycle `1 - 2 - ... - s - 1`, `s` even.
///
/// Starts from the path profile: the second vote moves candidate 1 to the
/// bottom, and the third vote takes the first one and moves candidates 1
/// and 2 (in that order) to just above the last position. This matches the
/// known six-cycle profile and is re-verified for every length.
pub fn implement_even_cycle(s: usize) -> Result<ImplementationResult, ConstructionError> {
    if s % 2 == 1 {
        return Err(ConstructionError::OddCycle(s));
    }
    if s < 4 {
        return Err(ConstructionError::TooSmall { min: 4, got: s });
    }
    let (first, middle) = path_votes(s);

    let mut second: Vec<usize> = middle.into_iter().filter(|&c| c != 0).collect();
    second.push(0);

    let mut third: Vec<usize> = first
        .iter()
        .copied()
        .filter(|&c| c != 0 && c != 1)
        .collect();
    let last = third.pop().expect("s >= 4");
    third.extend([0, 1, last]);

    let election = Election::numbered(s, vec![first, second, third])?;
    ImplementationResult::verify(election, UndirectedGraph::cycle(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn votes(r: &ImplementationResult) -> Vec<String> {
        (0..r.election.num_voters())
            .map(|i| r.election.vote_names(i).join(">"))
            .collect()
    }

    #[test]
    fn path_six_profile() {
        let r = implement_path(6).unwrap();
        assert!(r.verified);
        assert_eq!(votes(&r), ["1>3>2>5>4>6", "2>1>4>3>6>5", "1>3>2>5>4>6"]);
    }

    #[test]
    fn cycle_six_profile() {
        let r = implement_even_cycle(6).unwrap();
        assert_eq!(votes(&r), ["1>3>2>5>4>6", "2>4>3>6>5>1", "3>5>4>1>2>6"]);
    }

    #[test]
    fn single_edge_path() {
        let r = implement_path(2).unwrap();
        assert_eq!(votes(&r), ["1>2", "2>1", "1>2"]);
    }

    #[test]
    fn clique_and_empty() {
        let names: Vec<String> = ["a", "b", "c"].map(String::from).to_vec();
        let r = implement_clique(names.clone()).unwrap();
        assert_eq!(votes(&r), ["a>b>c", "c>b>a", "a>b>c"]);
        assert_eq!(r.election.multicrossing_graph().num_edges(), 3);
        let r = implement_empty(vec!["a".into()]).unwrap();
        assert_eq!(votes(&r), ["a", "a", "a"]);
        let r = implement_clique(crate::election::numbered_names(10)).unwrap();
        assert_eq!(r.election.multicrossing_graph().num_edges(), 45);
    }

    #[test]
    fn argument_errors() {
        assert_eq!(
            implement_path(1).unwrap_err(),
            ConstructionError::TooSmall { min: 2, got: 1 }
        );
        assert_eq!(
            implement_even_cycle(5).unwrap_err(),
            ConstructionError::OddCycle(5)
        );
        assert_eq!(
            implement_even_cycle(2).unwrap_err(),
            ConstructionError::TooSmall { min: 4, got: 2 }
        );
        assert!(implement_empty(vec![]).is_err());
    }

    #[test]
    fn every_even_cycle_up_to_one_hundred() {
        for s in (4..=100).step_by(2) {
            let r = implement_even_cycle(s).unwrap_or_else(|e| panic!("s = {s}: {e}"));
            assert_eq!(r.voters_used, 3);
        }
    }

    #[test]
    fn every_path_up_to_one_hundred() {
        for s in 2..=100 {
            implement_path(s).unwrap_or_else(|e| panic!("s = {s}: {e}"));
        }
    }
}
