//! Large cliques or independent sets of a multi-crossing graph, read off
//! the votes with repeated longest monotone subsequences.

use serde::Serialize;

use crate::election::Election;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RamseyKind {
    Clique,
    Independent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseySet {
    pub kind: RamseyKind,
    /// Candidate indices in the first voter's order.
    pub members: Vec<usize>,
}

/// `ceil(s^(1 / 2^(n-1)))`, the guaranteed size for `s` candidates and `n`
/// voters, in exact integer arithmetic.
pub fn ramsey_bound(s: usize, n: usize) -> usize {
    if s == 0 {
        return 0;
    }
    // smallest b with b^(2^(n-1)) >= s
    let exp = n.saturating_sub(1).min(63) as u32;
    let reaches = |b: u128| -> bool {
        let mut x = b;
        for _ in 0..exp {
            x = x.saturating_mul(x);
            if x >= s as u128 {
                return true;
            }
        }
        x >= s as u128
    };
    let mut b = 1u128;
    while !reaches(b) {
        b += 1;
    }
    b as usize
}

/// Indices of a longest strictly increasing subsequence of `seq`
/// (patience sorting; leftmost-ending choice).
fn longest_increasing(seq: &[usize]) -> Vec<usize> {
    // tails[l] = index of the smallest tail of an increasing run of length l+1
    let mut tails: Vec<usize> = Vec::new();
    let mut prev = vec![usize::MAX; seq.len()];
    for (i, &x) in seq.iter().enumerate() {
        let l = tails.partition_point(|&t| seq[t] < x);
        if l > 0 {
            prev[i] = tails[l - 1];
        }
        if l == tails.len() {
            tails.push(i);
        } else {
            tails[l] = i;
        }
    }
    let mut out = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied();
    while let Some(i) = cur {
        out.push(i);
        cur = (prev[i] != usize::MAX).then_some(prev[i]);
    }
    out.reverse();
    out
}

/// Keeps, voter by voter, the longer of a longest increasing and a longest
/// decreasing subsequence of that voter's positions (relative to the first
/// voter's order), preferring increasing on ties. The survivors are ranked
/// by every voter either exactly like the first voter or exactly reversed,
/// so all their pairs share one crossing pattern: a clique or an
/// independent set of size at least [`ramsey_bound`].
pub fn ramsey_extract(e: &Election) -> RamseySet {
    let mut members: Vec<usize> = e.vote(0).to_vec();
    let mut reversed = vec![false; e.num_voters()];
    for (i, flag) in reversed.iter_mut().enumerate().skip(1) {
        let pos: Vec<usize> = members.iter().map(|&c| e.rank(i, c)).collect();
        let inc = longest_increasing(&pos);
        let neg: Vec<usize> = pos.iter().map(|&p| usize::MAX - p).collect();
        let dec = longest_increasing(&neg);
        let keep = if dec.len() > inc.len() {
            *flag = true;
            dec
        } else {
            inc
        };
        members = keep.into_iter().map(|j| members[j]).collect();
    }
    let flips = reversed.windows(2).filter(|w| w[0] != w[1]).count();
    let kind = if flips >= 2 && members.len() >= 2 {
        RamseyKind::Clique
    } else {
        RamseyKind::Independent
    };
    RamseySet { kind, members }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_values() {
        assert_eq!(ramsey_bound(16, 1), 16);
        assert_eq!(ramsey_bound(16, 2), 4);
        assert_eq!(ramsey_bound(16, 3), 2);
        assert_eq!(ramsey_bound(16, 4), 2);
        assert_eq!(ramsey_bound(17, 3), 3);
        assert_eq!(ramsey_bound(1, 5), 1);
        assert_eq!(ramsey_bound(16, 40), 2);
    }

    #[test]
    fn lis_basics() {
        assert_eq!(longest_increasing(&[3, 1, 2, 5, 4]), [1, 2, 4]);
        assert_eq!(longest_increasing(&[]), Vec::<usize>::new());
        assert_eq!(longest_increasing(&[5, 4, 3]).len(), 1);
    }

    #[test]
    fn identical_voters_give_everyone() {
        let e = Election::numbered(5, vec![vec![0, 1, 2, 3, 4]; 4]).unwrap();
        let r = ramsey_extract(&e);
        assert_eq!(r.kind, RamseyKind::Independent);
        assert_eq!(r.members.len(), 5);
    }

    #[test]
    fn reversal_sandwich_gives_clique() {
        let id: Vec<usize> = (0..6).collect();
        let rev: Vec<usize> = id.iter().rev().copied().collect();
        let e = Election::numbered(6, vec![id.clone(), rev, id]).unwrap();
        let r = ramsey_extract(&e);
        assert_eq!(r.kind, RamseyKind::Clique);
        assert_eq!(r.members.len(), 6);
        assert!(e.multicrossing_graph().is_clique(&r.members));
    }
}
