//! Exact exponential-time solvers for independent set and coloring.
//!
//! Both searches count nodes against a [`SearchBudget`]. Running out of
//! budget (or being cancelled) is reported as its own outcome; a search that
//! stopped early never claims infeasibility.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use super::UndirectedGraph;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone)]
pub struct SearchBudget {
    limit: u64,
    used: u64,
    cancel: Option<Arc<AtomicBool>>,
    stop: Option<Stop>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Stop {
    Budget,
    Cancelled,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::new(DEFAULT_NODE_BUDGET)
    }
}

impl SearchBudget {
    pub fn new(limit: u64) -> Self {
        SearchBudget {
            limit,
            used: 0,
            cancel: None,
            stop: None,
        }
    }

    /// Searches poll `flag` and stop once it is set.
    pub fn with_cancel(mut self, flag: Arc<AtomicBool>) -> Self {
        self.cancel = Some(flag);
        self
    }

    pub fn nodes_explored(&self) -> u64 {
        self.used
    }

    pub fn exhausted(&self) -> bool {
        self.stop.is_some()
    }

    pub fn was_cancelled(&self) -> bool {
        self.stop == Some(Stop::Cancelled)
    }

    /// Counts one node; false once the search must stop.
    fn tick(&mut self) -> bool {
        if self.stop.is_some() {
            return false;
        }
        if self.used >= self.limit {
            self.stop = Some(Stop::Budget);
            return false;
        }
        if self.used.is_multiple_of(1024) {
            if let Some(flag) = &self.cancel {
                if flag.load(Ordering::Relaxed) {
                    self.stop = Some(Stop::Cancelled);
                    return false;
                }
            }
        }
        self.used += 1;
        true
    }

    fn aborted<T>(&self) -> SearchOutcome<T> {
        match self.stop {
            Some(Stop::Cancelled) => SearchOutcome::Cancelled,
            _ => SearchOutcome::BudgetExceeded,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    Infeasible,
    BudgetExceeded,
    Cancelled,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_aborted(&self) -> bool {
        matches!(
            self,
            SearchOutcome::BudgetExceeded | SearchOutcome::Cancelled
        )
    }
}

/// Best independent set found and whether the search proved it maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximumSearch {
    pub set: Vec<usize>,
    pub proven: bool,
}

struct IndependentSearch<'g> {
    g: &'g UndirectedGraph,
    chosen: Vec<usize>,
    best: Vec<usize>,
    /// stop as soon as `best` reaches this size
    target: usize,
}

impl IndependentSearch<'_> {
    /// Upper bound on the independent set size within `cands`: the number
    /// of cliques in a greedy clique cover.
    fn clique_cover_bound(&self, cands: &[usize]) -> usize {
        let mut cliques: Vec<Vec<usize>> = Vec::new();
        for &v in cands {
            match cliques
                .iter_mut()
                .find(|c| c.iter().all(|&u| self.g.has_edge(u, v)))
            {
                Some(c) => c.push(v),
                None => cliques.push(vec![v]),
            }
        }
        cliques.len()
    }

    /// Returns false when the search was stopped.
    fn run(&mut self, cands: Vec<usize>, budget: &mut SearchBudget) -> bool {
        if !budget.tick() {
            return false;
        }
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
            if self.best.len() >= self.target {
                return true;
            }
        }
        if cands.is_empty() {
            return true;
        }
        // need strictly more than `best` (or at least `target`)
        let need = (self.best.len() + 1).min(self.target);
        if self.chosen.len() + cands.len() < need
            || self.chosen.len() + self.clique_cover_bound(&cands) < need
        {
            return true;
        }

        let degree = |v: usize| cands.iter().filter(|&&u| self.g.has_edge(u, v)).count();
        // A vertex of degree <= 1 among the candidates lies in some maximum set.
        if let Some(&v) = cands.iter().find(|&&v| degree(v) <= 1) {
            let rest: Vec<usize> = cands
                .iter()
                .copied()
                .filter(|&u| u != v && !self.g.has_edge(u, v))
                .collect();
            self.chosen.push(v);
            let ok = self.run(rest, budget);
            self.chosen.pop();
            return ok;
        }

        let v = *cands
            .iter()
            .max_by_key(|&&v| (degree(v), std::cmp::Reverse(v)))
            .expect("nonempty");
        let with: Vec<usize> = cands
            .iter()
            .copied()
            .filter(|&u| u != v && !self.g.has_edge(u, v))
            .collect();
        self.chosen.push(v);
        let ok = self.run(with, budget);
        self.chosen.pop();
        if !ok || self.best.len() >= self.target {
            return ok;
        }
        let without: Vec<usize> = cands.into_iter().filter(|&u| u != v).collect();
        self.run(without, budget)
    }
}

/// An independent set of size at least `t`, found by branch and bound
/// branching on maximum-degree vertices.
pub fn exact_independent_set(
    g: &UndirectedGraph,
    t: usize,
    budget: &mut SearchBudget,
) -> SearchOutcome<Vec<usize>> {
    if t == 0 {
        return SearchOutcome::Found(Vec::new());
    }
    if t > g.num_vertices() {
        return SearchOutcome::Infeasible;
    }
    let mut search = IndependentSearch {
        g,
        chosen: Vec::new(),
        best: Vec::new(),
        target: t,
    };
    let completed = search.run((0..g.num_vertices()).collect(), budget);
    if search.best.len() >= t {
        let mut set = search.best;
        set.sort_unstable();
        SearchOutcome::Found(set)
    } else if completed {
        SearchOutcome::Infeasible
    } else {
        budget.aborted()
    }
}

/// A maximum independent set; `proven` is false if the budget ran out first.
pub fn maximum_independent_set(g: &UndirectedGraph, budget: &mut SearchBudget) -> MaximumSearch {
    let mut search = IndependentSearch {
        g,
        chosen: Vec::new(),
        best: Vec::new(),
        target: usize::MAX,
    };
    let proven = search.run((0..g.num_vertices()).collect(), budget);
    let mut set = search.best;
    set.sort_unstable();
    MaximumSearch { set, proven }
}

/// Greedy clique: for each start vertex extend by decreasing degree, keep
/// the largest.
pub fn greedy_clique(g: &UndirectedGraph) -> Vec<usize> {
    let n = g.num_vertices();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best: Vec<usize> = Vec::new();
    for &start in &by_degree {
        if g.degree(start) < best.len() {
            break;
        }
        let mut clique = vec![start];
        for &v in &by_degree {
            if v != start && clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

struct ColoringSearch<'g> {
    g: &'g UndirectedGraph,
    k: usize,
    colors: Vec<Option<usize>>,
}

impl ColoringSearch<'_> {
    fn saturation(&self, v: usize) -> usize {
        let mut seen = vec![false; self.k];
        let mut count = 0;
        for &u in self.g.neighbors(v) {
            if let Some(c) = self.colors[u] {
                if !std::mem::replace(&mut seen[c], true) {
                    count += 1;
                }
            }
        }
        count
    }

    /// `Some(true)` colored, `Some(false)` exhausted, `None` stopped.
    fn run(&mut self, used: usize, budget: &mut SearchBudget) -> Option<bool> {
        if !budget.tick() {
            return None;
        }
        // DSATUR: most saturated uncolored vertex, then highest degree
        let next = (0..self.g.num_vertices())
            .filter(|&v| self.colors[v].is_none())
            .max_by_key(|&v| (self.saturation(v), self.g.degree(v), std::cmp::Reverse(v)));
        let Some(v) = next else {
            return Some(true);
        };
        let mut blocked = vec![false; self.k];
        for &u in self.g.neighbors(v) {
            if let Some(c) = self.colors[u] {
                blocked[c] = true;
            }
        }
        // a fresh color is interchangeable with any other fresh one
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if blocked[c] {
                continue;
            }
            self.colors[v] = Some(c);
            match self.run(used.max(c + 1), budget) {
                Some(false) => {}
                other => return other,
            }
        }
        self.colors[v] = None;
        Some(false)
    }
}

/// A proper coloring with colors `0..k`, by DSATUR-ordered backtracking
/// seeded with a greedy clique (which also gives the lower bound).
pub fn exact_coloring(
    g: &UndirectedGraph,
    k: usize,
    budget: &mut SearchBudget,
) -> SearchOutcome<Vec<usize>> {
    let n = g.num_vertices();
    if n == 0 {
        return SearchOutcome::Found(Vec::new());
    }
    let clique = greedy_clique(g);
    if clique.len() > k {
        return SearchOutcome::Infeasible;
    }
    let mut search = ColoringSearch {
        g,
        k,
        colors: vec![None; n],
    };
    for (c, &v) in clique.iter().enumerate() {
        search.colors[v] = Some(c);
    }
    match search.run(clique.len(), budget) {
        Some(true) => SearchOutcome::Found(search.colors.into_iter().map(|c| c.unwrap()).collect()),
        Some(false) => SearchOutcome::Infeasible,
        None => budget.aborted(),
    }
}
