//! Candidate Deletion and k-Candidate Partition.
//!
//! A candidate subset restricts to a single-crossing election exactly when
//! it is independent in the multi-crossing graph, so deletion asks for a
//! large independent set and partition asks for a coloring. Elections with
//! at most three voters have comparability multi-crossing graphs and are
//! solved through poset algorithms; two classes is plain 2-coloring; all
//! other cases go to the exact exponential solvers.

use std::sync::atomic::AtomicBool;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::construct::{implement_general, ConstructionError};
use crate::election::Election;
use crate::graph::search::{greedy_clique, DEFAULT_NODE_BUDGET};
use crate::graph::{
    exact_coloring, is_bipartite, max_antichain, maximum_independent_set, mirsky_coloring,
    transitive_orientation, Bipartition, Orientation, SearchBudget, SearchOutcome, UndirectedGraph,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AnalysisKind {
    Deletion,
    Partition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    GeneralExact,
    ThreeVoterPoly,
    BipartitePoly,
}

/// Outcome of a deletion or partition query.
///
/// For deletion, `kept` is the largest single-crossing candidate set found
/// (reported even when it is too small). For partition, `classes` is a
/// partition into the fewest classes found, empty when infeasible.
/// `optimal` means no better answer exists: a maximum kept set, or a
/// partition into the minimum possible number of classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisResult {
    pub kind: AnalysisKind,
    pub k: usize,
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kept: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<String>>>,
    pub optimal: bool,
    pub budget_exceeded: bool,
    pub method: Method,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone)]
pub struct AnalysisOptions {
    pub node_budget: u64,
    /// Skip the polynomial special cases.
    pub force_general: bool,
    pub cancel: Option<Arc<AtomicBool>>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            node_budget: DEFAULT_NODE_BUDGET,
            force_general: false,
            cancel: None,
        }
    }
}

impl AnalysisOptions {
    fn budget(&self) -> SearchBudget {
        let b = SearchBudget::new(self.node_budget);
        match &self.cancel {
            Some(flag) => b.with_cancel(flag.clone()),
            None => b,
        }
    }
}

fn names(e: &Election, set: &[usize]) -> Vec<String> {
    set.iter().map(|&c| e.name(c).to_string()).collect()
}

/// Candidate indices sorted by name.
fn by_name(e: &Election) -> Vec<usize> {
    let mut order: Vec<usize> = (0..e.num_candidates()).collect();
    order.sort_by(|&a, &b| e.name(a).cmp(e.name(b)));
    order
}

/// Among all maximum independent sets, the one whose sorted name list is
/// lexicographically smallest. `max_within(avail)` must return the maximum
/// independent set size inside `avail`, or `None` when it gave up.
fn lex_smallest_maximum(
    e: &Election,
    g: &UndirectedGraph,
    alpha: usize,
    mut max_within: impl FnMut(&[usize]) -> Option<usize>,
) -> Option<Vec<usize>> {
    let m = e.num_candidates();
    let mut available = vec![true; m];
    let mut chosen = Vec::new();
    for x in by_name(e) {
        if chosen.len() == alpha {
            break;
        }
        if !available[x] {
            continue;
        }
        let rest: Vec<usize> = (0..m)
            .filter(|&v| available[v] && v != x && !g.has_edge(v, x))
            .collect();
        if chosen.len() + 1 + max_within(&rest)? == alpha {
            chosen.push(x);
            available[x] = false;
            for &v in g.neighbors(x) {
                available[v] = false;
            }
        } else {
            available[x] = false;
        }
    }
    chosen.sort_unstable();
    Some(chosen)
}

fn three_voter_orientation(
    e: &Election,
    g: &UndirectedGraph,
    opts: &AnalysisOptions,
) -> Option<Orientation> {
    if opts.force_general || e.num_voters() > 3 {
        return None;
    }
    transitive_orientation(g).orientation()
}

/// Can at most `k` candidates be removed so that the rest is single-crossing?
pub fn candidate_deletion(e: &Election, k: usize, opts: &AnalysisOptions) -> AnalysisResult {
    let g = e.multicrossing_graph();
    let m = e.num_candidates();
    let need = m.saturating_sub(k);

    if let Some(o) = three_voter_orientation(e, &g, opts) {
        let antichain = max_antichain(&o).expect("verified orientation");
        let alpha = antichain.len();
        let kept = lex_smallest_maximum(e, &g, alpha, |avail| {
            Some(
                max_antichain(&o.induced(avail))
                    .expect("induced orientation stays transitive")
                    .len(),
            )
        })
        .expect("poset route never gives up");
        return AnalysisResult {
            kind: AnalysisKind::Deletion,
            k,
            feasible: alpha >= need,
            kept: Some(names(e, &kept)),
            classes: None,
            optimal: true,
            budget_exceeded: false,
            method: Method::ThreeVoterPoly,
            nodes_explored: 0,
        };
    }

    let mut budget = opts.budget();
    let best = maximum_independent_set(&g, &mut budget);
    let mut kept = best.set.clone();
    if best.proven {
        let refined = lex_smallest_maximum(e, &g, best.set.len(), |avail| {
            let sub = g.induced(avail);
            let found = maximum_independent_set(&sub, &mut budget);
            found.proven.then_some(found.set.len())
        });
        if let Some(refined) = refined {
            kept = refined;
        }
    }
    // a large enough set is a certificate even if the search was cut short
    let feasible = kept.len() >= need;
    AnalysisResult {
        kind: AnalysisKind::Deletion,
        k,
        feasible,
        kept: Some(names(e, &kept)),
        classes: None,
        optimal: best.proven,
        budget_exceeded: budget.exhausted(),
        method: Method::GeneralExact,
        nodes_explored: budget.nodes_explored(),
    }
}

fn classes_from_colors(e: &Election, colors: &[usize]) -> Vec<Vec<String>> {
    let count = colors.iter().copied().max().map_or(0, |c| c + 1);
    let mut classes = vec![Vec::new(); count];
    for (c, &color) in colors.iter().enumerate() {
        classes[color].push(e.name(c).to_string());
    }
    classes.retain(|class| !class.is_empty());
    classes
}

/// Can the candidates be split into at most `k` classes, each restricting
/// to a single-crossing election?
pub fn candidate_partition(e: &Election, k: usize, opts: &AnalysisOptions) -> AnalysisResult {
    let g = e.multicrossing_graph();
    let result =
        |feasible: bool, classes: Vec<Vec<String>>, optimal, budget_exceeded, method, nodes| {
            AnalysisResult {
                kind: AnalysisKind::Partition,
                k,
                feasible,
                kept: None,
                classes: Some(classes),
                optimal,
                budget_exceeded,
                method,
                nodes_explored: nodes,
            }
        };

    if k == 2 && !opts.force_general {
        return match is_bipartite(&g) {
            Bipartition::Bipartite(side) => {
                let colors: Vec<usize> = side.into_iter().map(usize::from).collect();
                result(
                    true,
                    classes_from_colors(e, &colors),
                    true,
                    false,
                    Method::BipartitePoly,
                    0,
                )
            }
            Bipartition::OddCycle(_) => {
                result(false, Vec::new(), true, false, Method::BipartitePoly, 0)
            }
        };
    }

    if let Some(o) = three_voter_orientation(e, &g, opts) {
        let heights = mirsky_coloring(&o).expect("verified orientation");
        let chi = heights.iter().copied().max().unwrap_or(0);
        if chi > k {
            return result(false, Vec::new(), true, false, Method::ThreeVoterPoly, 0);
        }
        let colors: Vec<usize> = heights.iter().map(|h| h - 1).collect();
        return result(
            true,
            classes_from_colors(e, &colors),
            true,
            false,
            Method::ThreeVoterPoly,
            0,
        );
    }

    // smallest feasible number of colors, starting from a clique bound
    let mut budget = opts.budget();
    let lower = greedy_clique(&g).len().max(1);
    for colors in lower..=k {
        match exact_coloring(&g, colors, &mut budget) {
            SearchOutcome::Found(coloring) => {
                let nodes = budget.nodes_explored();
                return result(
                    true,
                    classes_from_colors(e, &coloring),
                    true,
                    false,
                    Method::GeneralExact,
                    nodes,
                );
            }
            SearchOutcome::Infeasible => continue,
            SearchOutcome::BudgetExceeded | SearchOutcome::Cancelled => {
                // try the full k before giving up; a k-coloring still answers the query
                if colors < k {
                    if let SearchOutcome::Found(coloring) =
                        exact_coloring(&g, k, &mut SearchBudget::new(opts.node_budget))
                    {
                        let nodes = budget.nodes_explored();
                        return result(
                            true,
                            classes_from_colors(e, &coloring),
                            false,
                            true,
                            Method::GeneralExact,
                            nodes,
                        );
                    }
                }
                return result(
                    false,
                    Vec::new(),
                    false,
                    true,
                    Method::GeneralExact,
                    budget.nodes_explored(),
                );
            }
        }
    }
    result(
        false,
        Vec::new(),
        true,
        false,
        Method::GeneralExact,
        budget.nodes_explored(),
    )
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("target size {t} exceeds the {n} vertices")]
    TargetTooLarge { t: usize, n: usize },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// Independent Set instance `(g, t)` as a Candidate Deletion instance
/// `(E, |V| - t)` with `E` implementing `g`.
pub fn reduce_independent_set(
    g: &UndirectedGraph,
    t: usize,
) -> Result<(Election, usize), ReductionError> {
    let n = g.num_vertices();
    if t > n {
        return Err(ReductionError::TargetTooLarge { t, n });
    }
    let r = implement_general(g)?;
    Ok((r.election, n - t))
}

/// k-Coloring instance `g` as a k-Candidate Partition instance on an
/// election implementing `g`.
pub fn reduce_coloring(g: &UndirectedGraph, _k: usize) -> Result<Election, ReductionError> {
    Ok(implement_general(g)?.election)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{implement_clique, implement_even_cycle, implement_path};
    use crate::election::numbered_names;

    fn opts() -> AnalysisOptions {
        AnalysisOptions::default()
    }

    #[test]
    fn single_crossing_needs_no_deletion() {
        let e = Election::parse("3 4\nR D N\nR>D>N\nD>R>N\nD>N>R\nN>D>R\n").unwrap();
        let r = candidate_deletion(&e, 0, &opts());
        assert!(r.feasible && r.optimal);
        assert_eq!(r.kept.unwrap(), ["R", "D", "N"]);
        let r = candidate_partition(&e, 1, &opts());
        assert!(r.feasible);
        assert_eq!(r.classes.unwrap().len(), 1);
    }

    #[test]
    fn path_profile_deletion() {
        let e = implement_path(6).unwrap().election;
        let r = candidate_deletion(&e, 3, &opts());
        assert_eq!(r.method, Method::ThreeVoterPoly);
        assert!(r.feasible);
        assert_eq!(r.kept.as_deref().unwrap(), ["1", "3", "5"]);
        let r = candidate_deletion(&e, 2, &opts());
        assert!(!r.feasible);
        let forced = AnalysisOptions {
            force_general: true,
            ..opts()
        };
        let g = candidate_deletion(&e, 3, &forced);
        assert_eq!(g.method, Method::GeneralExact);
        assert_eq!(g.kept, Some(vec!["1".to_string(), "3".into(), "5".into()]));
    }

    #[test]
    fn cycle_profile_partition() {
        let e = implement_even_cycle(6).unwrap().election;
        let r = candidate_partition(&e, 2, &opts());
        assert_eq!(r.method, Method::BipartitePoly);
        assert_eq!(
            r.classes.unwrap(),
            [
                ["1", "3", "5"].map(String::from).to_vec(),
                ["2", "4", "6"].map(String::from).to_vec()
            ]
        );
    }

    #[test]
    fn clique_partition() {
        let e = implement_clique(numbered_names(4)).unwrap().election;
        let r = candidate_partition(&e, 3, &opts());
        assert_eq!(r.method, Method::ThreeVoterPoly);
        assert!(!r.feasible);
        let r = candidate_partition(&e, 4, &opts());
        assert!(r.feasible);
        assert_eq!(r.classes.unwrap().len(), 4);
        let forced = AnalysisOptions {
            force_general: true,
            ..opts()
        };
        assert!(!candidate_partition(&e, 3, &forced).feasible);
        assert!(candidate_partition(&e, 4, &forced).feasible);
    }

    #[test]
    fn reductions() {
        let g = UndirectedGraph::numbered(4);
        let (e, k) = reduce_independent_set(&g, 4).unwrap();
        assert_eq!(k, 0);
        assert!(candidate_deletion(&e, k, &opts()).feasible);

        let c5 = UndirectedGraph::cycle(5);
        let (e, k) = reduce_independent_set(&c5, 3).unwrap();
        assert_eq!(k, 2);
        assert!(!candidate_deletion(&e, k, &opts()).feasible);
        let (e, k) = reduce_independent_set(&c5, 2).unwrap();
        assert!(candidate_deletion(&e, k, &opts()).feasible);
        assert!(reduce_independent_set(&c5, 6).is_err());

        let e = reduce_coloring(&c5, 3).unwrap();
        assert!(!candidate_partition(&e, 2, &opts()).feasible);
        assert!(candidate_partition(&e, 3, &opts()).feasible);
    }

    #[test]
    fn tiny_budget_is_honest() {
        let e = reduce_coloring(&UndirectedGraph::cycle(11).complement(), 5).unwrap();
        let opts = AnalysisOptions {
            node_budget: 1,
            ..opts()
        };
        let r = candidate_partition(&e, 5, &opts);
        assert!(r.budget_exceeded);
        assert!(!r.optimal);
        let r = candidate_deletion(&e, 0, &opts);
        assert!(r.budget_exceeded);
        assert!(!r.feasible);
    }
}
