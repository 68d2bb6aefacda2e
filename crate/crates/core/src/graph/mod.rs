//! Undirected graphs, orientations and the recognition/optimization
//! algorithms built on top of them.

mod bipartite;
mod dot;
mod orientation;
mod permutation;
mod poset;
pub mod search;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::election::{numbered_names, valid_name, ParseError};

pub use bipartite::{is_bipartite, Bipartition};
pub use dot::emit_dot;
pub use orientation::{is_transitive, transitive_orientation, ComparabilityVerdict, Orientation};
pub use permutation::{recognize_permutation, PermutationDiagram, PermutationVerdict};
pub use poset::{
    longest_chain_length, max_antichain, min_chain_cover, mirsky_coloring, transitive_closure,
};
pub use search::{
    exact_coloring, exact_independent_set, maximum_independent_set, SearchBudget, SearchOutcome,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error(
        "vertex name {0:?} is not usable (empty, contains whitespace or '>', or starts with '#')"
    )]
    InvalidName(String),
    #[error("vertex {0:?} is listed twice")]
    DuplicateVertex(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("self-loop at {0:?}")]
    SelfLoop(String),
    #[error("edge {0:?}-{1:?} is listed twice")]
    DuplicateEdge(String, String),
    #[error("vertex index {0} out of range")]
    OutOfRange(usize),
    #[error("orientation has {arcs} arcs for {edges} edges")]
    ArcCount { arcs: usize, edges: usize },
    #[error("arc {0:?}->{1:?} does not orient an edge exactly once")]
    BadArc(String, String),
    #[error("orientation has not been verified transitive")]
    NotVerified,
    #[error("{0}")]
    Diagram(String),
}

/// A simple undirected graph with named vertices.
///
/// Edges keep their insertion order so that files round-trip unchanged;
/// adjacency queries go through a dense matrix.
#[derive(Debug, Clone)]
pub struct UndirectedGraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    /// Edgeless graph on the given vertex names.
    pub fn new(names: Vec<String>) -> Result<Self, GraphError> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(GraphError::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(name.clone()));
            }
        }
        let n = names.len();
        Ok(UndirectedGraph {
            names,
            index,
            adj: vec![false; n * n],
            neighbors: vec![Vec::new(); n],
            edges: Vec::new(),
        })
    }

    /// Edgeless graph on vertices `1..=n`.
    pub fn numbered(n: usize) -> Self {
        Self::new(numbered_names(n)).expect("numeric names are valid")
    }

    pub fn from_edges(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::new(names)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.num_vertices();
        if u >= n {
            return Err(GraphError::OutOfRange(u));
        }
        if v >= n {
            return Err(GraphError::OutOfRange(v));
        }
        if u == v {
            return Err(GraphError::SelfLoop(self.names[u].clone()));
        }
        if self.adj[u * n + v] {
            return Err(GraphError::DuplicateEdge(
                self.names[u].clone(),
                self.names[v].clone(),
            ));
        }
        self.adj[u * n + v] = true;
        self.adj[v * n + u] = true;
        self.neighbors[u].push(v);
        self.neighbors[v].push(u);
        self.edges.push((u, v));
        Ok(())
    }

    pub fn add_edge_by_name(&mut self, u: &str, v: &str) -> Result<(), GraphError> {
        let ui = self
            .vertex_index(u)
            .ok_or_else(|| GraphError::UnknownVertex(u.to_string()))?;
        let vi = self
            .vertex_index(v)
            .ok_or_else(|| GraphError::UnknownVertex(v.to_string()))?;
        self.add_edge(ui, vi)
    }

    pub fn num_vertices(&self) -> usize {
        self.names.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Edges in insertion order, each as given when inserted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.num_vertices() + v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Edges as `(min, max)` index pairs in lexicographic order.
    pub fn sorted_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Same graph with edges stored in [`sorted_edges`](Self::sorted_edges) order.
    pub fn canonical(&self) -> Self {
        Self::from_edges(self.names.clone(), &self.sorted_edges()).expect("edges already validated")
    }

    /// Edges as normalized name pairs, independent of vertex order.
    pub fn edge_names(&self) -> BTreeSet<(String, String)> {
        self.edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (&self.names[u], &self.names[v]);
                if a <= b {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                }
            })
            .collect()
    }

    pub fn complement(&self) -> Self {
        let n = self.num_vertices();
        let mut g = Self::new(self.names.clone()).expect("names already validated");
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("fresh pair");
                }
            }
        }
        g
    }

    /// Subgraph induced by `keep` (indices into this graph, in the given order).
    pub fn induced(&self, keep: &[usize]) -> Self {
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let mut g = Self::new(names).expect("names already validated");
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).expect("fresh pair");
                }
            }
        }
        g
    }

    pub fn complete(names: Vec<String>) -> Result<Self, GraphError> {
        let mut g = Self::new(names)?;
        let n = g.num_vertices();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(numbered_names(n), &edges).expect("valid path")
    }

    /// Cycle `1 - 2 - ... - n - 1` for `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("closing edge");
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.neighbors[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.num_vertices() >= 1
            && self.num_edges() + 1 == self.num_vertices()
            && self.is_connected()
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Whether `colors` assigns different colors to the ends of every edge.
    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.num_vertices()
            && self.edges.iter().all(|&(u, v)| colors[u] != colors[v])
    }

    /// Serializes to the graph file format, edges in insertion order.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("{}\n{}\n", self.num_vertices(), self.names.join(" "));
        out.push_str(&self.edge_lines());
        out
    }

    /// Just the `u v` edge lines, in insertion order.
    pub fn edge_lines(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&self.names[u]);
            out.push(' ');
            out.push_str(&self.names[v]);
            out.push('\n');
        }
        out
    }

    /// Parses the graph file format: vertex count, a line of vertex names,
    /// then one `u v` edge per line. `#` comments and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (cline, count) = lines
            .next()
            .ok_or_else(|| perr(1, "missing vertex count"))?;
        let n: usize = count
            .parse()
            .map_err(|_| perr(cline, format!("bad vertex count {count:?}")))?;
        let names: Vec<String> = if n == 0 {
            Vec::new()
        } else {
            let (nline, raw) = lines
                .next()
                .ok_or_else(|| perr(cline + 1, "missing vertex names"))?;
            let names: Vec<String> = raw.split_whitespace().map(str::to_string).collect();
            if names.len() != n {
                return Err(perr(
                    nline,
                    format!("expected {n} vertices, found {}", names.len()),
                ));
            }
            names
        };
        let mut g = Self::new(names).map_err(|e| perr(cline + 1, e.to_string()))?;
        for (eline, raw) in lines {
            let parts: Vec<&str> = raw.split_whitespace().collect();
            let [u, v] = parts[..] else {
                return Err(perr(eline, "an edge line needs exactly two vertices"));
            };
            g.add_edge_by_name(u, v)
                .map_err(|e| perr(eline, e.to_string()))?;
        }
        Ok(g)
    }
}

fn perr(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Equal vertex sets and equal edge sets, compared by name.
impl PartialEq for UndirectedGraph {
    fn eq(&self, other: &Self) -> bool {
        if self.num_vertices() != other.num_vertices() || self.num_edges() != other.num_edges() {
            return false;
        }
        let map: Option<Vec<usize>> = self.names.iter().map(|n| other.vertex_index(n)).collect();
        let Some(map) = map else {
            return false;
        };
        self.edges
            .iter()
            .all(|&(u, v)| other.has_edge(map[u], map[v]))
    }
}

impl Eq for UndirectedGraph {}

impl fmt::Display for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_file_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const CUBE: &str =
        "8\na b c d 1 2 3 4\na 1\na 2\na 3\nb 2\nb 3\nb 4\nc 3\nc 4\nc 1\nd 4\nd 1\nd 2\n";

    #[test]
    fn parses_path() {
        let g = UndirectedGraph::parse("6\n1 2 3 4 5 6\n1 2\n2 3\n3 4\n4 5\n5 6\n").unwrap();
        assert_eq!(g, UndirectedGraph::path(6));
        assert_eq!(g.num_edges(), 5);
    }

    #[test]
    fn parses_cube() {
        let g = UndirectedGraph::parse(CUBE).unwrap();
        assert_eq!(g.num_vertices(), 8);
        assert_eq!(g.num_edges(), 12);
        assert!((0..8).all(|v| g.degree(v) == 3));
        assert_eq!(g.to_file_string(), CUBE);
    }

    #[test]
    fn empty_edge_list() {
        let g = UndirectedGraph::parse("3\nx y z\n").unwrap();
        assert_eq!(g.num_edges(), 0);
        let g = UndirectedGraph::parse("0\n").unwrap();
        assert_eq!(g.num_vertices(), 0);
    }

    #[test]
    fn parse_errors() {
        let err = UndirectedGraph::parse("2\na b\na a\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("self-loop"));
        let err = UndirectedGraph::parse("2\na b\na b\nb a\n").unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.message.contains("twice"));
        let err = UndirectedGraph::parse("2\na b\na c\n").unwrap_err();
        assert!(err.message.contains("unknown vertex"));
        let err = UndirectedGraph::parse("3\na b\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = UndirectedGraph::parse("2\na a\n").unwrap_err();
        assert!(err.message.contains("twice"));
    }

    #[test]
    fn equality_ignores_order() {
        let a = UndirectedGraph::parse("3\nx y z\nx y\ny z\n").unwrap();
        let b = UndirectedGraph::parse("3\nz y x\nz y\ny x\n").unwrap();
        let c = UndirectedGraph::parse("3\nx y z\nx y\nx z\n").unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn complement_and_induced() {
        let c5 = UndirectedGraph::cycle(5);
        let comp = c5.complement();
        assert_eq!(comp.num_edges(), 5);
        assert!(comp.has_edge(0, 2) && !comp.has_edge(0, 1));
        let p = c5.induced(&[0, 1, 2]);
        assert_eq!(p, UndirectedGraph::path(3));
        assert!(UndirectedGraph::path(4).is_tree());
        assert!(!c5.is_tree());
    }
}
