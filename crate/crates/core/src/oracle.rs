//! Brute-force references for small instances. Everything here enumerates
//! in a fixed order and refuses inputs above its size limit.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use thiserror::Error;

use crate::election::Election;
use crate::graph::UndirectedGraph;

pub const MAX_SUBSET_VERTICES: usize = 20;
pub const MAX_COLORING_VERTICES: usize = 15;
pub const MAX_ORIENTATION_VERTICES: usize = 8;
pub const MAX_DIAGRAM_VERTICES: usize = 7;
pub const MAX_PROFILE_VERTICES: usize = 5;
pub const MAX_ELECTION_CANDIDATES: usize = 14;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("{what} oracle accepts at most {limit} vertices, got {got}")]
pub struct TooLarge {
    pub what: &'static str,
    pub limit: usize,
    pub got: usize,
}

fn check(what: &'static str, limit: usize, got: usize) -> Result<(), TooLarge> {
    if got > limit {
        Err(TooLarge { what, limit, got })
    } else {
        Ok(())
    }
}

fn adjacency_masks(g: &UndirectedGraph) -> Vec<u32> {
    let mut adj = vec![0u32; g.num_vertices()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Maximum independent set size and a witness, over all subsets.
pub fn bf_independent_set(g: &UndirectedGraph) -> Result<(usize, Vec<usize>), TooLarge> {
    let n = g.num_vertices();
    check("independent set", MAX_SUBSET_VERTICES, n)?;
    let adj = adjacency_masks(g);
    let mut best = 0u32;
    for s in 0u32..(1 << n) {
        if s.count_ones() <= best.count_ones() {
            continue;
        }
        if members(s).iter().all(|&v| adj[v] & s == 0) {
            best = s;
        }
    }
    Ok((best.count_ones() as usize, members(best)))
}

fn independent_table(adj: &[u32]) -> Vec<bool> {
    let n = adj.len();
    let mut ind = vec![false; 1 << n];
    ind[0] = true;
    for s in 1usize..(1 << n) {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        ind[s] = ind[rest] && adj[v] as usize & rest == 0;
    }
    ind
}

/// Chromatic number and an optimal coloring, by dynamic programming over
/// vertex subsets.
pub fn bf_chromatic(g: &UndirectedGraph) -> Result<(usize, Vec<usize>), TooLarge> {
    let n = g.num_vertices();
    check("coloring", MAX_COLORING_VERTICES, n)?;
    let ind = independent_table(&adjacency_masks(g));
    let full = (1usize << n) - 1;
    // chi[s] and the color class containing the lowest vertex of s
    let mut chi = vec![0u8; 1 << n];
    let mut class = vec![0usize; 1 << n];
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut best = u8::MAX;
        // every independent t with low in t and t within s
        let mut sub = rest;
        loop {
            let t = sub | low;
            if ind[t] && chi[s ^ t] + 1 < best {
                best = chi[s ^ t] + 1;
                class[s] = t;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        chi[s] = best;
    }
    let mut colors = vec![0; n];
    let mut s = full;
    let mut color = 0;
    while s != 0 {
        for v in members(class[s] as u32) {
            colors[v] = color;
        }
        s ^= class[s];
        color += 1;
    }
    Ok((chi[full] as usize, colors))
}

/// Does some orientation of the edges form a transitive relation?
/// Backtracks over the edges, pruning a partial orientation as soon as two
/// oriented arcs `a -> b -> c` force a pair that is absent or oriented the
/// other way.
pub fn bf_transitive_orientation(g: &UndirectedGraph) -> Result<bool, TooLarge> {
    let n = g.num_vertices();
    check("orientation", MAX_ORIENTATION_VERTICES, n)?;
    let edges = g.sorted_edges();
    // dir[u][v] = 1 when u -> v, -1 when v -> u, 0 unset or non-edge
    let mut dir = vec![vec![0i8; n]; n];

    fn consistent(g: &UndirectedGraph, dir: &[Vec<i8>], u: usize, v: usize) -> bool {
        // just set u -> v; check paths x -> u -> v and u -> v -> y
        let n = dir.len();
        for x in 0..n {
            if dir[x][u] == 1 && x != v && (!g.has_edge(x, v) || dir[x][v] == -1) {
                return false;
            }
            if dir[v][x] == 1 && x != u && (!g.has_edge(u, x) || dir[u][x] == -1) {
                return false;
            }
        }
        true
    }

    fn go(g: &UndirectedGraph, edges: &[(usize, usize)], dir: &mut [Vec<i8>], i: usize) -> bool {
        let Some(&(a, b)) = edges.get(i) else {
            return true;
        };
        for (u, v) in [(a, b), (b, a)] {
            dir[u][v] = 1;
            dir[v][u] = -1;
            if consistent(g, dir, u, v) && go(g, edges, dir, i + 1) {
                return true;
            }
            dir[u][v] = 0;
            dir[v][u] = 0;
        }
        false
    }

    let found = go(g, &edges, &mut dir, 0);
    if found {
        let arcs: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| if dir[a][b] == 1 { (a, b) } else { (b, a) })
            .collect();
        debug_assert!(crate::graph::is_transitive(n, &arcs));
    }
    Ok(found)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Is the graph a permutation graph? Tries every first order in
/// lexicographic order; the second order is then forced pair by pair (a
/// pair swaps exactly when it is an edge), so it exists iff the forced
/// relation is acyclic.
pub fn bf_permutation_diagram(g: &UndirectedGraph) -> Result<bool, TooLarge> {
    let n = g.num_vertices();
    check("permutation diagram", MAX_DIAGRAM_VERTICES, n)?;
    let mut pi1: Vec<usize> = (0..n).collect();
    loop {
        let mut indegree = vec![0usize; n];
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (pi1[i], pi1[j]);
                let y = if g.has_edge(a, b) { a } else { b };
                indegree[y] += 1;
            }
        }
        // a tournament is acyclic iff its in-degrees are all distinct
        let mut seen = vec![false; n];
        if indegree
            .iter()
            .all(|&d| !std::mem::replace(&mut seen[d], true))
        {
            return Ok(true);
        }
        if !next_permutation(&mut pi1) {
            return Ok(false);
        }
    }
}

fn pair_index(m: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    a * (2 * m - a - 1) / 2 + (b - a - 1)
}

/// Multi-crossing graphs of all 3-voter profiles on `m` candidates, as edge
/// masks over pairs, closed under relabeling.
fn three_voter_graphs(m: usize) -> Vec<bool> {
    let pairs = m * m.saturating_sub(1) / 2;
    let mut reachable = vec![false; 1 << pairs];
    let mut v2: Vec<usize> = (0..m).collect();
    let mut pos2 = vec![0; m];
    let mut pos3 = vec![0; m];
    // first voter fixed to the identity
    loop {
        for (p, &c) in v2.iter().enumerate() {
            pos2[c] = p;
        }
        let mut v3: Vec<usize> = (0..m).collect();
        loop {
            for (p, &c) in v3.iter().enumerate() {
                pos3[c] = p;
            }
            let mut mask = 0usize;
            for a in 0..m {
                for b in a + 1..m {
                    // a above b in voter 1; two crossings iff b above a in 2 and a above b in 3
                    if pos2[b] < pos2[a] && pos3[a] < pos3[b] {
                        mask |= 1 << pair_index(m, a, b);
                    }
                }
            }
            reachable[mask] = true;
            if !next_permutation(&mut v3) {
                break;
            }
        }
        if !next_permutation(&mut v2) {
            break;
        }
    }

    let mut closed = reachable.clone();
    let mut sigma: Vec<usize> = (0..m).collect();
    while next_permutation(&mut sigma) {
        for (mask, &hit) in reachable.iter().enumerate() {
            if !hit {
                continue;
            }
            let mut image = 0usize;
            for a in 0..m {
                for b in a + 1..m {
                    if mask >> pair_index(m, a, b) & 1 == 1 {
                        image |= 1 << pair_index(m, sigma[a], sigma[b]);
                    }
                }
            }
            closed[image] = true;
        }
    }
    closed
}

/// Is there a 3-voter election whose multi-crossing graph is `g`?
/// Exhaustive over all profiles with the first vote fixed; the resulting
/// graph families are cached per vertex count.
pub fn bf_is_3_implementable(g: &UndirectedGraph) -> Result<bool, TooLarge> {
    let m = g.num_vertices();
    check("3-voter profile", MAX_PROFILE_VERTICES, m)?;
    static CACHE: OnceLock<Mutex<HashMap<usize, &'static [bool]>>> = OnceLock::new();
    let table: &'static [bool] = {
        let cache = CACHE.get_or_init(Default::default);
        let cached = cache.lock().unwrap().get(&m).copied();
        match cached {
            Some(t) => t,
            None => {
                let t: &'static [bool] = Box::leak(three_voter_graphs(m).into_boxed_slice());
                cache.lock().unwrap().entry(m).or_insert(t)
            }
        }
    };
    let mut mask = 0usize;
    for &(a, b) in g.edges() {
        mask |= 1 << pair_index(m, a, b);
    }
    Ok(table[mask])
}

/// Candidate masks whose restriction is single-crossing, checked directly on
/// the restricted election.
fn single_crossing_subsets(e: &Election) -> Result<Vec<bool>, TooLarge> {
    let m = e.num_candidates();
    check("candidate subset", MAX_ELECTION_CANDIDATES, m)?;
    let mut ok = vec![true; 1 << m];
    for s in 1usize..(1 << m) {
        let mask: Vec<bool> = (0..m).map(|c| s >> c & 1 == 1).collect();
        ok[s] = e
            .restrict_mask(&mask)
            .expect("non-empty subset")
            .is_single_crossing();
    }
    Ok(ok)
}

/// Can at most `k` candidates be deleted leaving a single-crossing election?
pub fn bf_candidate_deletion(e: &Election, k: usize) -> Result<bool, TooLarge> {
    let m = e.num_candidates();
    let ok = single_crossing_subsets(e)?;
    Ok((0..1usize << m).any(|s| ok[s] && s.count_ones() as usize + k >= m))
}

/// Can the candidates be split into at most `k` classes with single-crossing
/// restrictions?
pub fn bf_candidate_partition(e: &Election, k: usize) -> Result<bool, TooLarge> {
    let m = e.num_candidates();
    let ok = single_crossing_subsets(e)?;
    let full = (1usize << m) - 1;
    // fewest classes covering each subset
    let mut need = vec![u8::MAX; 1 << m];
    need[0] = 0;
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut sub = rest;
        loop {
            let t = sub | low;
            if ok[t] && need[s ^ t] != u8::MAX {
                need[s] = need[s].min(need[s ^ t] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(need[full] as usize <= k)
}
