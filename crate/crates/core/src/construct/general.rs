use super::{ConstructionError, ImplementationResult};
use crate::election::Election;
use crate::graph::UndirectedGraph;

type Swaps = Vec<Vec<(usize, usize)>>;

/// Odd-even transposition profile on candidates `0..m`: vote 1 is the
/// identity, even-numbered votes swap positions `(1,2), (3,4), ...` of their
/// predecessor and odd-numbered votes swap `(2,3), (4,5), ...` (1-based).
/// Returns the votes and, for each step `i -> i+1` (0-based `i`), the swapped
/// pairs as `(above, below)` in vote `i`.
fn odd_even_profile(m: usize) -> (Vec<Vec<usize>>, Swaps) {
    let mut votes = vec![(0..m).collect::<Vec<usize>>()];
    let mut swaps = Vec::with_capacity(m);
    for next in 2..=m + 1 {
        let mut vote = votes.last().unwrap().clone();
        let start = if next % 2 == 0 { 0 } else { 1 };
        let mut step = Vec::new();
        let mut p = start;
        while p + 1 < m {
            step.push((vote[p], vote[p + 1]));
            vote.swap(p, p + 1);
            p += 2;
        }
        swaps.push(step);
        votes.push(vote);
    }
    (votes, swaps)
}

/// Fully single-crossing election with `m` candidates (named `1..=m`) and
/// `m + 1` voters: every pair is swapped exactly once, always as adjacent
/// candidates.
pub fn fully_single_crossing(m: usize) -> Result<Election, ConstructionError> {
    if m < 2 {
        return Err(ConstructionError::TooSmall { min: 2, got: m });
    }
    let (votes, _) = odd_even_profile(m);
    Ok(Election::numbered(m, votes)?)
}

/// Implements any graph with at most `2|V| + 1` voters.
///
/// The fully single-crossing base `(v_1, ..., v_n)` is expanded to
/// `(v_1, v_2, v_2, ..., v_n, v_n)`. An edge `ab` whose pair is swapped
/// between `v_i` and `v_{i+1}` is realized by swapping `a` and `b` back in
/// the second copy of `v_{i+1}`; they are adjacent there, and pairs swapped
/// at the same step are disjoint, so the swaps do not interact.
pub fn implement_general(g: &UndirectedGraph) -> Result<ImplementationResult, ConstructionError> {
    let m = g.num_vertices();
    if m == 0 {
        return Err(ConstructionError::TooSmall { min: 1, got: 0 });
    }
    if m == 1 {
        let election = Election::from_indices(g.names().to_vec(), vec![vec![0]; 3])?;
        return ImplementationResult::verify(election, g.clone());
    }

    let (base, swaps) = odd_even_profile(m);
    let mut votes = Vec::with_capacity(2 * base.len() - 1);
    votes.push(base[0].clone());
    for vote in &base[1..] {
        votes.push(vote.clone());
        votes.push(vote.clone());
    }

    // step index at which each pair crosses in the base
    let mut step_of = vec![usize::MAX; m * m];
    for (i, step) in swaps.iter().enumerate() {
        for &(a, b) in step {
            step_of[a * m + b] = i;
            step_of[b * m + a] = i;
        }
    }
    for &(a, b) in g.edges() {
        let i = step_of[a * m + b];
        debug_assert!(i != usize::MAX, "every pair crosses once in the base");
        // voter 2i+3 (1-based) is the second copy of base vote i+2
        let vote = &mut votes[2 * i + 2];
        let pa = vote.iter().position(|&c| c == a).unwrap();
        let pb = vote.iter().position(|&c| c == b).unwrap();
        debug_assert_eq!(pa.abs_diff(pb), 1);
        vote.swap(pa, pb);
    }

    let election = Election::from_indices(g.names().to_vec(), votes)?;
    ImplementationResult::verify(election, g.clone())
}

/// Number of swapped pairs per step of the odd-even base, exposed for tests.
#[cfg(test)]
pub(crate) fn swap_counts(m: usize) -> Vec<usize> {
    odd_even_profile(m).1.iter().map(Vec::len).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::numbered_names;

    #[test]
    fn seven_candidate_profile() {
        let e = fully_single_crossing(7).unwrap();
        let votes: Vec<String> = (0..8).map(|i| e.vote_names(i).join("")).collect();
        assert_eq!(
            votes,
            [
                "1234567", "2143657", "2416375", "4261735", "4627153", "6472513", "6745231",
                "7654321"
            ]
        );
    }

    #[test]
    fn two_candidates() {
        // second step has no positions (2,3) to swap
        let e = fully_single_crossing(2).unwrap();
        assert_eq!(e.to_file_string(), "2 3\n1 2\n1>2\n2>1\n2>1\n");
        assert!(e.is_single_crossing());
        assert_eq!(
            fully_single_crossing(1).unwrap_err(),
            ConstructionError::TooSmall { min: 2, got: 1 }
        );
    }

    #[test]
    fn swap_total_is_pairs() {
        for m in 2..=30 {
            assert_eq!(
                swap_counts(m).iter().sum::<usize>(),
                m * (m - 1) / 2,
                "m = {m}"
            );
        }
    }

    #[test]
    fn edgeless_and_single_vertex() {
        let g = UndirectedGraph::numbered(4);
        let r = implement_general(&g).unwrap();
        assert_eq!(r.voters_used, 9);
        assert!(r.election.is_single_crossing());
        let r = implement_general(&UndirectedGraph::numbered(1)).unwrap();
        assert_eq!(r.voters_used, 3);
        assert!(implement_general(&UndirectedGraph::numbered(0)).is_err());
    }

    #[test]
    fn five_cycle() {
        let c5 = UndirectedGraph::cycle(5);
        let r = implement_general(&c5).unwrap();
        assert!(r.voters_used <= 11);
        assert_eq!(r.election.multicrossing_graph(), c5);
    }

    #[test]
    fn complete_graph() {
        let k = UndirectedGraph::complete(numbered_names(12)).unwrap();
        let r = implement_general(&k).unwrap();
        assert_eq!(r.election.multicrossing_graph(), k);
    }
}
