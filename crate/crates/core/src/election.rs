//! Elections over a fixed voter order and the crossing structure they induce.
//!
//! An [`Election`] stores its votes as dense candidate indices; every public
//! message and file format goes through candidate names. Voters are reported
//! 1-based everywhere outside this module.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::UndirectedGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ElectionError {
    #[error("an election needs at least one candidate")]
    NoCandidates,
    #[error("an election needs at least one vote")]
    NoVotes,
    #[error("candidate name {0:?} is not usable (empty, contains whitespace or '>', or starts with '#')")]
    InvalidName(String),
    #[error("candidate {0:?} is listed twice")]
    DuplicateCandidate(String),
    #[error("unknown candidate {0:?}")]
    UnknownCandidate(String),
    #[error("vote {voter} ranks {name:?} twice")]
    RepeatedInVote { voter: usize, name: String },
    #[error("vote {voter} does not rank {name:?}")]
    MissingFromVote { voter: usize, name: String },
    #[error("a restriction must keep at least one candidate")]
    EmptyRestriction,
    #[error("a pair needs two distinct candidates, got {0:?} twice")]
    SamePair(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name.starts_with('#')
        && !name.contains('>')
        && !name.chars().any(char::is_whitespace)
}

/// An ordered list of strict rankings over a fixed candidate set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Election {
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// `votes[i]` lists candidate indices from most to least preferred.
    votes: Vec<Vec<usize>>,
    /// `ranks[i][c]` is the position of candidate `c` in vote `i`.
    ranks: Vec<Vec<usize>>,
}

impl Election {
    /// Builds an election from candidate names and rankings given as names.
    pub fn new<S: AsRef<str>>(
        candidates: Vec<String>,
        votes: &[Vec<S>],
    ) -> Result<Self, ElectionError> {
        let index = build_index(&candidates)?;
        let mut dense = Vec::with_capacity(votes.len());
        for (i, vote) in votes.iter().enumerate() {
            let mut ranking = Vec::with_capacity(vote.len());
            for name in vote {
                let name = name.as_ref();
                let c = *index
                    .get(name)
                    .ok_or_else(|| ElectionError::UnknownCandidate(name.to_string()))?;
                ranking.push(c);
            }
            check_ranking(&candidates, i + 1, &ranking)?;
            dense.push(ranking);
        }
        Self::assemble(candidates, index, dense)
    }

    /// Builds an election whose votes are given as candidate indices.
    pub fn from_indices(
        candidates: Vec<String>,
        votes: Vec<Vec<usize>>,
    ) -> Result<Self, ElectionError> {
        let index = build_index(&candidates)?;
        for (i, vote) in votes.iter().enumerate() {
            check_ranking(&candidates, i + 1, vote)?;
        }
        Self::assemble(candidates, index, votes)
    }

    /// Candidates named `1..=m`, votes given as indices.
    pub fn numbered(m: usize, votes: Vec<Vec<usize>>) -> Result<Self, ElectionError> {
        Self::from_indices(numbered_names(m), votes)
    }

    fn assemble(
        names: Vec<String>,
        index: HashMap<String, usize>,
        votes: Vec<Vec<usize>>,
    ) -> Result<Self, ElectionError> {
        if votes.is_empty() {
            return Err(ElectionError::NoVotes);
        }
        let ranks = votes
            .iter()
            .map(|vote| {
                let mut rank = vec![0; names.len()];
                for (pos, &c) in vote.iter().enumerate() {
                    rank[c] = pos;
                }
                rank
            })
            .collect();
        Ok(Election {
            names,
            index,
            votes,
            ranks,
        })
    }

    pub fn num_candidates(&self) -> usize {
        self.names.len()
    }

    pub fn num_voters(&self) -> usize {
        self.votes.len()
    }

    pub fn candidates(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, c: usize) -> &str {
        &self.names[c]
    }

    pub fn candidate_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Vote of voter `i` (0-based), most preferred first.
    pub fn vote(&self, i: usize) -> &[usize] {
        &self.votes[i]
    }

    pub fn votes(&self) -> &[Vec<usize>] {
        &self.votes
    }

    /// Position of candidate `c` in vote `i` (0 = top).
    pub fn rank(&self, i: usize, c: usize) -> usize {
        self.ranks[i][c]
    }

    /// Whether voter `i` (0-based) ranks `a` above `b`.
    pub fn prefers(&self, i: usize, a: usize, b: usize) -> bool {
        self.ranks[i][a] < self.ranks[i][b]
    }

    /// Vote of voter `i` as names.
    pub fn vote_names(&self, i: usize) -> Vec<&str> {
        self.votes[i]
            .iter()
            .map(|&c| self.names[c].as_str())
            .collect()
    }

    /// Restriction to the candidates in `keep`, in the original candidate order.
    pub fn restrict<S: AsRef<str>>(&self, keep: &[S]) -> Result<Election, ElectionError> {
        let mut mask = vec![false; self.names.len()];
        for name in keep {
            let c = self
                .candidate_index(name.as_ref())
                .ok_or_else(|| ElectionError::UnknownCandidate(name.as_ref().to_string()))?;
            mask[c] = true;
        }
        self.restrict_mask(&mask)
    }

    /// Restriction to the candidates whose index is set in `mask`.
    pub fn restrict_mask(&self, mask: &[bool]) -> Result<Election, ElectionError> {
        let kept: Vec<usize> = (0..self.names.len()).filter(|&c| mask[c]).collect();
        if kept.is_empty() {
            return Err(ElectionError::EmptyRestriction);
        }
        let mut remap = vec![usize::MAX; self.names.len()];
        for (new, &old) in kept.iter().enumerate() {
            remap[old] = new;
        }
        let names = kept.iter().map(|&c| self.names[c].clone()).collect();
        let votes = self
            .votes
            .iter()
            .map(|vote| {
                vote.iter()
                    .filter(|&&c| mask[c])
                    .map(|&c| remap[c])
                    .collect()
            })
            .collect();
        Election::from_indices(names, votes)
    }

    /// Crossing sequence of a pair given by names.
    pub fn crossing_sequence(&self, a: &str, b: &str) -> Result<CrossingSequence, ElectionError> {
        let ai = self
            .candidate_index(a)
            .ok_or_else(|| ElectionError::UnknownCandidate(a.to_string()))?;
        let bi = self
            .candidate_index(b)
            .ok_or_else(|| ElectionError::UnknownCandidate(b.to_string()))?;
        if ai == bi {
            return Err(ElectionError::SamePair(a.to_string()));
        }
        Ok(self.crossing_sequence_idx(ai, bi))
    }

    pub fn crossing_sequence_idx(&self, a: usize, b: usize) -> CrossingSequence {
        let a_first: Vec<bool> = (0..self.num_voters())
            .map(|i| self.prefers(i, a, b))
            .collect();
        let crossings = a_first.windows(2).filter(|w| w[0] != w[1]).count();
        CrossingSequence {
            a,
            b,
            a_first,
            crossings,
        }
    }

    /// Number of times the relative order of `a` and `b` flips between
    /// consecutive voters.
    pub fn crossings(&self, a: usize, b: usize) -> usize {
        let mut count = 0;
        let mut prev = self.prefers(0, a, b);
        for i in 1..self.num_voters() {
            let cur = self.prefers(i, a, b);
            if cur != prev {
                count += 1;
            }
            prev = cur;
        }
        count
    }

    /// Single-crossing check with a witness for the first violating pair.
    pub fn single_crossing(&self) -> SingleCrossing {
        let m = self.num_candidates();
        for a in 0..m {
            for b in a + 1..m {
                if let Some(voters) = self.multicrossing_witness(a, b) {
                    return SingleCrossing::Violated(Violation { a, b, voters });
                }
            }
        }
        SingleCrossing::Holds
    }

    pub fn is_single_crossing(&self) -> bool {
        matches!(self.single_crossing(), SingleCrossing::Holds)
    }

    /// Voters `i < j < k` (1-based) with the pair ordered one way, the other,
    /// then the first way again.
    pub fn multicrossing_witness(&self, a: usize, b: usize) -> Option<[usize; 3]> {
        let n = self.num_voters();
        let first = self.prefers(0, a, b);
        let j = (1..n).find(|&i| self.prefers(i, a, b) != first)?;
        let k = (j + 1..n).find(|&i| self.prefers(i, a, b) == first)?;
        Some([1, j + 1, k + 1])
    }

    /// The multi-crossing graph: candidates as vertices, an edge for every
    /// pair whose order flips at least twice.
    pub fn multicrossing_graph(&self) -> UndirectedGraph {
        let m = self.num_candidates();
        let mut g = UndirectedGraph::new(self.names.clone())
            .expect("candidate names are valid vertex names");
        for a in 0..m {
            for b in a + 1..m {
                if self.crossings(a, b) >= 2 {
                    g.add_edge(a, b).expect("pairs are visited once");
                }
            }
        }
        g
    }

    /// Every vote reversed.
    pub fn reversed_votes(&self) -> Election {
        let votes = self
            .votes
            .iter()
            .map(|v| v.iter().rev().copied().collect())
            .collect();
        Election::from_indices(self.names.clone(), votes).expect("reversal keeps rankings complete")
    }

    /// Voters listed in the opposite order.
    pub fn reversed_voters(&self) -> Election {
        let votes = self.votes.iter().rev().cloned().collect();
        Election::from_indices(self.names.clone(), votes).expect("same rankings")
    }

    /// Serializes to the election file format.
    pub fn to_file_string(&self) -> String {
        let mut out = format!(
            "{} {}\n{}\n",
            self.num_candidates(),
            self.num_voters(),
            self.names.join(" ")
        );
        for i in 0..self.num_voters() {
            out.push_str(&self.vote_names(i).join(">"));
            out.push('\n');
        }
        out
    }

    /// Parses the election file format: a `m n` header, a line of `m`
    /// candidate names, then `n` rankings written as `a>b>c`. Lines starting
    /// with `#` and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Election, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, "missing header line"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [m, n] = fields[..] else {
            return Err(ParseError::new(
                hline,
                "header must be \"<candidates> <voters>\"",
            ));
        };
        let m: usize = m
            .parse()
            .map_err(|_| ParseError::new(hline, format!("bad candidate count {m:?}")))?;
        let n: usize = n
            .parse()
            .map_err(|_| ParseError::new(hline, format!("bad voter count {n:?}")))?;
        if m == 0 {
            return Err(ParseError::new(
                hline,
                "an election needs at least one candidate",
            ));
        }
        if n == 0 {
            return Err(ParseError::new(
                hline,
                "an election needs at least one vote",
            ));
        }

        let (cline, cands) = lines
            .next()
            .ok_or_else(|| ParseError::new(hline + 1, "missing candidate line"))?;
        let names: Vec<String> = cands.split_whitespace().map(str::to_string).collect();
        if names.len() != m {
            return Err(ParseError::new(
                cline,
                format!("expected {m} candidates, found {}", names.len()),
            ));
        }
        let index = build_index(&names).map_err(|e| ParseError::new(cline, e.to_string()))?;

        let mut votes = Vec::with_capacity(n);
        let mut last = cline;
        for (vline, raw) in lines.by_ref() {
            last = vline;
            if votes.len() == n {
                return Err(ParseError::new(vline, format!("more than {n} votes")));
            }
            let mut ranking = Vec::with_capacity(m);
            for part in raw.split('>') {
                let name = part.trim();
                let c = *index
                    .get(name)
                    .ok_or_else(|| ParseError::new(vline, format!("unknown candidate {name:?}")))?;
                ranking.push(c);
            }
            check_ranking(&names, votes.len() + 1, &ranking)
                .map_err(|e| ParseError::new(vline, e.to_string()))?;
            votes.push(ranking);
        }
        if votes.len() != n {
            return Err(ParseError::new(
                last + 1,
                format!("expected {n} votes, found {}", votes.len()),
            ));
        }
        Election::from_indices(names, votes).map_err(|e| ParseError::new(last, e.to_string()))
    }
}

impl fmt::Display for Election {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_file_string())
    }
}

pub fn numbered_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| i.to_string()).collect()
}

fn build_index(names: &[String]) -> Result<HashMap<String, usize>, ElectionError> {
    if names.is_empty() {
        return Err(ElectionError::NoCandidates);
    }
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if !valid_name(name) {
            return Err(ElectionError::InvalidName(name.clone()));
        }
        if index.insert(name.clone(), i).is_some() {
            return Err(ElectionError::DuplicateCandidate(name.clone()));
        }
    }
    Ok(index)
}

fn check_ranking(names: &[String], voter: usize, ranking: &[usize]) -> Result<(), ElectionError> {
    let mut seen = vec![false; names.len()];
    for &c in ranking {
        if c >= names.len() {
            return Err(ElectionError::UnknownCandidate(format!("#{c}")));
        }
        if std::mem::replace(&mut seen[c], true) {
            return Err(ElectionError::RepeatedInVote {
                voter,
                name: names[c].clone(),
            });
        }
    }
    if let Some(c) = seen.iter().position(|s| !s) {
        return Err(ElectionError::MissingFromVote {
            voter,
            name: names[c].clone(),
        });
    }
    Ok(())
}

/// Per-voter relative order of one candidate pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingSequence {
    pub a: usize,
    pub b: usize,
    /// `a_first[i]` is true when voter `i + 1` ranks `a` above `b`.
    pub a_first: Vec<bool>,
    pub crossings: usize,
}

impl CrossingSequence {
    /// Candidate preferred by voter `i` (0-based).
    pub fn preferred(&self, i: usize) -> usize {
        if self.a_first[i] {
            self.a
        } else {
            self.b
        }
    }

    pub fn is_multicrossing(&self) -> bool {
        self.crossings >= 2
    }
}

/// A pair that crosses more than once, with voters `i < j < k` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub a: usize,
    pub b: usize,
    pub voters: [usize; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingleCrossing {
    Holds,
    Violated(Violation),
}

#[cfg(test)]
mod tests {
    use super::*;

    const BREXIT: &str = "3 4\nR D N\nR>D>N\nD>R>N\nD>N>R\nN>D>R\n";

    const PATH6: &str =
        "# path on six candidates\n6 3\n1 2 3 4 5 6\n1>3>2>5>4>6\n2>1>4>3>6>5\n1>3>2>5>4>6\n";

    #[test]
    fn parses_brexit_profile() {
        let e = Election::parse(BREXIT).unwrap();
        assert_eq!(e.num_candidates(), 3);
        assert_eq!(e.num_voters(), 4);
        assert_eq!(e.vote_names(1), ["D", "R", "N"]);
        assert_eq!(e.to_file_string(), BREXIT);
        assert!(e.is_single_crossing());
    }

    #[test]
    fn single_candidate_single_voter() {
        let e = Election::parse("1 1\na\na\n").unwrap();
        assert_eq!(e.num_candidates(), 1);
        assert_eq!(e.num_voters(), 1);
        assert!(e.is_single_crossing());
        assert_eq!(e.multicrossing_graph().num_edges(), 0);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = Election::parse("2 1\na b\na>a\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("twice"), "{err}");

        let err = Election::parse("# c\n3 1\na b c\na>b\n").unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.message.contains("does not rank"), "{err}");

        let err = Election::parse("x 1\n").unwrap_err();
        assert_eq!(err.line, 1);

        let err = Election::parse("2\na b\n").unwrap_err();
        assert_eq!(err.line, 1);

        let err = Election::parse("2 2\na b\na>b\n").unwrap_err();
        assert!(err.message.contains("expected 2 votes"), "{err}");

        let err = Election::parse("2 1\na a\na>a\n").unwrap_err();
        assert_eq!(err.line, 2);

        let err = Election::parse("2 1\na b\na>c\n").unwrap_err();
        assert!(err.message.contains("unknown candidate"));
    }

    #[test]
    fn restriction_of_path_profile() {
        let e = Election::parse(PATH6).unwrap();
        let r = e.restrict(&["1", "2"]).unwrap();
        assert_eq!(r.to_file_string(), "2 3\n1 2\n1>2\n2>1\n1>2\n");
        assert_eq!(e.restrict(e.candidates()).unwrap(), e);
        assert_eq!(
            e.restrict::<&str>(&[]),
            Err(ElectionError::EmptyRestriction)
        );
        assert!(matches!(
            e.restrict(&["9"]),
            Err(ElectionError::UnknownCandidate(_))
        ));
    }

    #[test]
    fn crossing_sequences() {
        let e = Election::parse(PATH6).unwrap();
        let s = e.crossing_sequence("2", "3").unwrap();
        let three = e.candidate_index("3").unwrap();
        let two = e.candidate_index("2").unwrap();
        assert_eq!(
            (0..3).map(|i| s.preferred(i)).collect::<Vec<_>>(),
            [three, two, three]
        );
        assert_eq!(s.crossings, 2);
        assert!(s.is_multicrossing());

        let flipped = e.crossing_sequence("3", "2").unwrap();
        assert_eq!(flipped.crossings, s.crossings);
        assert!(flipped.a_first.iter().zip(&s.a_first).all(|(x, y)| x != y));

        assert!(matches!(
            e.crossing_sequence("2", "2"),
            Err(ElectionError::SamePair(_))
        ));
        assert!(matches!(
            e.crossing_sequence("2", "z"),
            Err(ElectionError::UnknownCandidate(_))
        ));

        let same = Election::parse("3 3\na b c\na>b>c\na>b>c\na>b>c\n").unwrap();
        assert_eq!(same.crossing_sequence("a", "c").unwrap().crossings, 0);
    }

    #[test]
    fn witness_for_path_profile() {
        let e = Election::parse(PATH6).unwrap();
        match e.single_crossing() {
            SingleCrossing::Violated(v) => {
                assert_eq!((e.name(v.a), e.name(v.b)), ("1", "2"));
                assert_eq!(v.voters, [1, 2, 3]);
            }
            SingleCrossing::Holds => panic!("path profile is not single-crossing"),
        }
        let g = e.multicrossing_graph();
        let edges: Vec<_> = g
            .edges()
            .iter()
            .map(|&(u, v)| (g.name(u), g.name(v)))
            .collect();
        assert_eq!(
            edges,
            [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6")]
        );
    }

    #[test]
    fn rejects_bad_names() {
        assert!(matches!(
            Election::new(vec!["a>b".into()], &[vec!["a>b"]]),
            Err(ElectionError::InvalidName(_))
        ));
        assert!(matches!(
            Election::new(vec!["a".into()], &Vec::<Vec<&str>>::new()),
            Err(ElectionError::NoVotes)
        ));
    }
}
