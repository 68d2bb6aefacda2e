use std::collections::VecDeque;

use super::UndirectedGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Side (0 or 1) of every vertex; each component starts on side 0.
    Bipartite(Vec<u8>),
    /// Vertices of an odd cycle, in cycle order.
    OddCycle(Vec<usize>),
}

/// BFS 2-coloring.
pub fn is_bipartite(g: &UndirectedGraph) -> Bipartition {
    let n = g.num_vertices();
    let mut side: Vec<Option<u8>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &v in g.neighbors(u) {
                match side[v] {
                    None => {
                        side[v] = Some(1 - su);
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(sv) if sv == su => {
                        return Bipartition::OddCycle(odd_cycle(&parent, &depth, u, v))
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Bipartition::Bipartite(side.into_iter().map(|s| s.unwrap()).collect())
}

/// Cycle closed by the edge `u - v` between two same-side vertices of a BFS tree.
fn odd_cycle(parent: &[usize], depth: &[usize], u: usize, v: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}
