use multicross::analyze::{candidate_deletion, candidate_partition, AnalysisOptions, Method};
use multicross::construct::{
    implement_permutation_graph, intersect_implementations, ramsey_extract, RamseyKind,
};
use multicross::election::Election;
use multicross::graph::{
    exact_coloring, max_antichain, maximum_independent_set, min_chain_cover, mirsky_coloring,
    recognize_permutation, transitive_orientation, PermutationDiagram, SearchBudget, SearchOutcome,
    UndirectedGraph,
};
use multicross::oracle::{
    bf_candidate_deletion, bf_candidate_partition, bf_chromatic, bf_independent_set,
    bf_permutation_diagram, bf_transitive_orientation,
};
use proptest::prelude::*;

fn graph(min_v: usize, max_v: usize) -> impl Strategy<Value = UndirectedGraph> {
    (min_v..=max_v, 0.0..1.0f64, any::<u64>()).prop_map(|(v, p, seed)| {
        use rand::SeedableRng;
        multicross::generate::random_graph(v, p, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed))
    })
}

fn election(max_m: usize, max_n: usize) -> impl Strategy<Value = Election> {
    (1..=max_m, 1..=max_n).prop_flat_map(|(m, n)| {
        prop::collection::vec(Just((0..m).collect::<Vec<usize>>()).prop_shuffle(), n)
            .prop_map(move |votes| Election::numbered(m, votes).unwrap())
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

fn diagram(pi1: Vec<usize>, pi2: Vec<usize>) -> PermutationDiagram {
    let names = (1..=pi1.len()).map(|i| i.to_string()).collect();
    PermutationDiagram::new(names, pi1, pi2).unwrap()
}

fn intersection(g1: &UndirectedGraph, g2: &UndirectedGraph) -> UndirectedGraph {
    let mut h = UndirectedGraph::numbered(g1.num_vertices());
    for &(u, v) in g1.edges() {
        if g2.has_edge(u, v) {
            h.add_edge(u, v).unwrap();
        }
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn comparability_matches_oracle(g in graph(0, 8)) {
        prop_assert_eq!(transitive_orientation(&g).is_comparability(), bf_transitive_orientation(&g).unwrap());
    }

    #[test]
    fn permutation_matches_oracle(g in graph(0, 7)) {
        let verdict = recognize_permutation(&g);
        prop_assert_eq!(verdict.is_permutation(), bf_permutation_diagram(&g).unwrap());
        if let Some(d) = verdict.diagram() {
            prop_assert_eq!(d.graph(), g);
        }
    }

    #[test]
    fn independent_set_matches_oracle(g in graph(0, 16)) {
        let found = maximum_independent_set(&g, &mut SearchBudget::default());
        prop_assert!(found.proven);
        prop_assert!(g.is_independent(&found.set));
        prop_assert_eq!(found.set.len(), bf_independent_set(&g).unwrap().0);
    }

    #[test]
    fn coloring_matches_oracle(g in graph(1, 12)) {
        let chi = bf_chromatic(&g).unwrap().0;
        let mut budget = SearchBudget::default();
        match exact_coloring(&g, chi, &mut budget) {
            SearchOutcome::Found(c) => prop_assert!(g.is_proper_coloring(&c)),
            other => prop_assert!(false, "expected a coloring, got {:?}", other),
        }
        prop_assert_eq!(exact_coloring(&g, chi - 1, &mut budget), SearchOutcome::Infeasible);
    }

    #[test]
    fn poset_algorithms_match_oracles(v in 1usize..=9, p in 0.0..1.0f64, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = multicross::generate::random_comparability_graph(v, p, &mut rng);
        let o = transitive_orientation(&g).orientation().unwrap();
        let antichain = max_antichain(&o).unwrap();
        prop_assert!(g.is_independent(&antichain));
        prop_assert_eq!(antichain.len(), bf_independent_set(&g).unwrap().0);
        prop_assert_eq!(min_chain_cover(&o).unwrap().len(), antichain.len());
        let heights = mirsky_coloring(&o).unwrap();
        let colors: Vec<usize> = heights.iter().map(|h| h - 1).collect();
        prop_assert!(g.is_proper_coloring(&colors));
        prop_assert_eq!(heights.iter().max().copied().unwrap_or(0), bf_chromatic(&g).unwrap().0);
    }

    #[test]
    fn analyzers_match_election_oracles(e in election(8, 6), k in 0usize..5) {
        let opts = AnalysisOptions::default();
        let d = candidate_deletion(&e, k, &opts);
        prop_assert!(d.optimal);
        prop_assert_eq!(d.feasible, bf_candidate_deletion(&e, k).unwrap());
        let kept = d.kept.unwrap();
        prop_assert!(e.restrict(&kept).unwrap().is_single_crossing());
        let p = candidate_partition(&e, k, &opts);
        prop_assert_eq!(p.feasible, bf_candidate_partition(&e, k).unwrap());
        if p.feasible {
            let classes = p.classes.unwrap();
            prop_assert!(classes.len() <= k);
            prop_assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), e.num_candidates());
            for class in &classes {
                prop_assert!(e.restrict(class).unwrap().is_single_crossing());
            }
        }
    }

    #[test]
    fn three_voter_route_matches_general(e in election(10, 3), k in 0usize..6) {
        let fast = AnalysisOptions::default();
        let slow = AnalysisOptions { force_general: true, ..AnalysisOptions::default() };
        let (a, b) = (candidate_deletion(&e, k, &fast), candidate_deletion(&e, k, &slow));
        prop_assert_eq!(a.method, Method::ThreeVoterPoly);
        prop_assert_eq!(a.feasible, b.feasible);
        prop_assert_eq!(a.kept, b.kept);
        let (a, b) = (candidate_partition(&e, k, &fast), candidate_partition(&e, k, &slow));
        prop_assert_eq!(a.feasible, b.feasible);
    }

    #[test]
    fn permutation_round_trip(pi1 in permutation(12), pi2 in permutation(12)) {
        let d = diagram(pi1, pi2);
        let r = implement_permutation_graph(&d).unwrap();
        prop_assert_eq!(r.voters_used, 3);
        prop_assert_eq!(r.election.multicrossing_graph(), d.graph());
    }

    #[test]
    fn shared_order_intersection(p in permutation(10), q in permutation(10), r in permutation(10)) {
        let d1 = diagram(p, q.clone());
        let d2 = diagram(q, r);
        let res = intersect_implementations(&d1, &d2).unwrap();
        prop_assert_eq!(res.election.multicrossing_graph(), intersection(&d1.graph(), &d2.graph()));
    }

    #[test]
    fn arbitrary_intersection_is_sound(a in permutation(8), b in permutation(8), c in permutation(8), d in permutation(8)) {
        let d1 = diagram(a, b);
        let d2 = diagram(c, d);
        if let Ok(res) = intersect_implementations(&d1, &d2) {
            prop_assert_eq!(res.voters_used, 3);
            prop_assert_eq!(res.election.multicrossing_graph(), intersection(&d1.graph(), &d2.graph()));
        }
    }

    #[test]
    fn ramsey_set_is_verified(e in election(12, 4)) {
        let r = ramsey_extract(&e);
        let g = e.multicrossing_graph();
        match r.kind {
            RamseyKind::Clique => prop_assert!(g.is_clique(&r.members)),
            RamseyKind::Independent => prop_assert!(g.is_independent(&r.members)),
        }
    }
}
