//! Poset algorithms on verified transitive orientations.

use std::collections::VecDeque;

use super::orientation::Orientation;
use super::permutation::topological_order;
use super::GraphError;

/// Reachability relation of the orientation, one DFS per vertex.
/// `closure[u][v]` is true when `v` is reachable from `u` by a nonempty path.
pub fn transitive_closure(o: &Orientation) -> Vec<Vec<bool>> {
    let n = o.num_vertices();
    let mut closure = vec![vec![false; n]; n];
    let mut stack = Vec::new();
    for (s, row) in closure.iter_mut().enumerate() {
        stack.clear();
        stack.extend_from_slice(o.successors(s));
        while let Some(u) = stack.pop() {
            if !row[u] {
                row[u] = true;
                stack.extend_from_slice(o.successors(u));
            }
        }
    }
    closure
}

/// Maximum matching of the split graph `u_left -> v_right` for `u < v`.
struct ChainMatching {
    /// `right_of[u]`: the `v` matched to `u_left`.
    right_of: Vec<Option<usize>>,
    /// `left_of[v]`: the `u` matched to `v_right`.
    left_of: Vec<Option<usize>>,
    above: Vec<Vec<usize>>,
}

impl ChainMatching {
    fn compute(closure: &[Vec<bool>]) -> Self {
        let n = closure.len();
        let above: Vec<Vec<usize>> = closure
            .iter()
            .map(|row| (0..n).filter(|&v| row[v]).collect())
            .collect();
        let mut m = ChainMatching {
            right_of: vec![None; n],
            left_of: vec![None; n],
            above,
        };
        for u in 0..n {
            let mut visited = vec![false; n];
            m.augment(u, &mut visited);
        }
        m
    }

    fn augment(&mut self, u: usize, visited: &mut [bool]) -> bool {
        for i in 0..self.above[u].len() {
            let v = self.above[u][i];
            if visited[v] {
                continue;
            }
            visited[v] = true;
            let free = match self.left_of[v] {
                None => true,
                Some(w) => self.augment(w, visited),
            };
            if free {
                self.left_of[v] = Some(u);
                self.right_of[u] = Some(v);
                return true;
            }
        }
        false
    }

    fn size(&self) -> usize {
        self.right_of.iter().flatten().count()
    }
}

fn require_verified(o: &Orientation) -> Result<(), GraphError> {
    if o.is_verified() {
        Ok(())
    } else {
        Err(GraphError::NotVerified)
    }
}

/// Maximum antichain (= maximum independent set of the base graph).
///
/// From a maximum matching of the chain-cover split graph, König's theorem
/// gives a minimum vertex cover `K`; the elements with neither copy in `K`
/// form an antichain of size `n - |matching|`.
pub fn max_antichain(o: &Orientation) -> Result<Vec<usize>, GraphError> {
    require_verified(o)?;
    let n = o.num_vertices();
    let closure = transitive_closure(o);
    let m = ChainMatching::compute(&closure);

    // Alternating search from unmatched left vertices: left -> right along
    // non-matching edges, right -> left along matching edges.
    let mut left_seen = vec![false; n];
    let mut right_seen = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&u| m.right_of[u].is_none()).collect();
    for &u in &queue {
        left_seen[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in &m.above[u] {
            if right_seen[v] || m.right_of[u] == Some(v) {
                continue;
            }
            right_seen[v] = true;
            if let Some(w) = m.left_of[v] {
                if !left_seen[w] {
                    left_seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    // cover = unreached left copies + reached right copies
    let antichain: Vec<usize> = (0..n).filter(|&x| left_seen[x] && !right_seen[x]).collect();
    debug_assert_eq!(antichain.len(), n - m.size());
    Ok(antichain)
}

/// Minimum partition into chains, each listed bottom to top along the
/// orientation.
pub fn min_chain_cover(o: &Orientation) -> Result<Vec<Vec<usize>>, GraphError> {
    require_verified(o)?;
    let closure = transitive_closure(o);
    let m = ChainMatching::compute(&closure);
    let n = o.num_vertices();
    let chains = (0..n)
        .filter(|&v| m.left_of[v].is_none())
        .map(|start| {
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(next) = m.right_of[cur] {
                chain.push(next);
                cur = next;
            }
            chain
        })
        .collect();
    Ok(chains)
}

/// Colors every vertex with the number of elements on the longest chain
/// ending at it (1-based). Uses exactly as many colors as the longest chain,
/// which is the chromatic number of a comparability graph.
pub fn mirsky_coloring(o: &Orientation) -> Result<Vec<usize>, GraphError> {
    require_verified(o)?;
    let n = o.num_vertices();
    let succ: Vec<Vec<usize>> = (0..n).map(|v| o.successors(v).to_vec()).collect();
    let order = topological_order(n, &succ).expect("a transitive orientation is acyclic");
    let mut height = vec![1usize; n];
    for &u in &order {
        for &v in &succ[u] {
            height[v] = height[v].max(height[u] + 1);
        }
    }
    Ok(height)
}

/// Number of vertices on the longest directed path, by memoized DFS.
pub fn longest_chain_length(o: &Orientation) -> usize {
    fn depth(o: &Orientation, v: usize, memo: &mut [usize]) -> usize {
        if memo[v] == 0 {
            let best = o
                .successors(v)
                .iter()
                .map(|&w| depth(o, w, memo))
                .max()
                .unwrap_or(0);
            memo[v] = best + 1;
        }
        memo[v]
    }
    let n = o.num_vertices();
    let mut memo = vec![0; n];
    (0..n).map(|v| depth(o, v, &mut memo)).max().unwrap_or(0)
}
