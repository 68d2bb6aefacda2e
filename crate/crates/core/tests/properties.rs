use multicross::construct::implement_general;
use multicross::election::{Election, SingleCrossing};
use multicross::graph::UndirectedGraph;
use proptest::prelude::*;

fn election(max_m: usize, max_n: usize) -> impl Strategy<Value = Election> {
    (1..=max_m, 1..=max_n).prop_flat_map(|(m, n)| {
        prop::collection::vec(Just((0..m).collect::<Vec<usize>>()).prop_shuffle(), n)
            .prop_map(move |votes| Election::numbered(m, votes).unwrap())
    })
}

fn graph(max_v: usize) -> impl Strategy<Value = UndirectedGraph> {
    (1..=max_v).prop_flat_map(|v| {
        prop::collection::vec(any::<bool>(), v * (v - 1) / 2).prop_map(move |bits| {
            let mut g = UndirectedGraph::numbered(v);
            let mut k = 0;
            for a in 0..v {
                for b in a + 1..v {
                    if bits[k] {
                        g.add_edge(a, b).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// Pair order changes counted straight off the votes.
fn naive_changes(e: &Election, a: usize, b: usize) -> usize {
    let above =
        |i: usize| e.vote(i).iter().position(|&c| c == a) < e.vote(i).iter().position(|&c| c == b);
    (1..e.num_voters())
        .filter(|&i| above(i) != above(i - 1))
        .count()
}

proptest! {
    #[test]
    fn gamma_edges_are_pairs_changing_twice(e in election(8, 7)) {
        let g = e.multicrossing_graph();
        for a in 0..e.num_candidates() {
            for b in a + 1..e.num_candidates() {
                prop_assert_eq!(g.has_edge(a, b), naive_changes(&e, a, b) >= 2);
                prop_assert_eq!(e.crossings(a, b), naive_changes(&e, a, b));
            }
        }
    }

    #[test]
    fn single_crossing_iff_gamma_empty(e in election(8, 7)) {
        let empty = e.multicrossing_graph().num_edges() == 0;
        prop_assert_eq!(e.is_single_crossing(), empty);
        if let SingleCrossing::Violated(v) = e.single_crossing() {
            let [i, j, k] = v.voters;
            prop_assert!(1 <= i && i < j && j < k && k <= e.num_voters());
            let (a, b) = (v.a, v.b);
            prop_assert_eq!(e.prefers(i - 1, a, b), e.prefers(k - 1, a, b));
            prop_assert_ne!(e.prefers(i - 1, a, b), e.prefers(j - 1, a, b));
        }
    }

    #[test]
    fn restriction_single_crossing_iff_independent(e in election(7, 6), mask in prop::collection::vec(any::<bool>(), 7)) {
        let m = e.num_candidates();
        let mut keep: Vec<bool> = mask[..m].to_vec();
        keep[0] = true;
        let set: Vec<usize> = (0..m).filter(|&c| keep[c]).collect();
        let r = e.restrict_mask(&keep).unwrap();
        prop_assert_eq!(r.is_single_crossing(), e.multicrossing_graph().is_independent(&set));
    }

    #[test]
    fn reversal_keeps_gamma(e in election(8, 7)) {
        let g = e.multicrossing_graph();
        prop_assert_eq!(&e.reversed_votes().multicrossing_graph(), &g);
        prop_assert_eq!(&e.reversed_voters().multicrossing_graph(), &g);
    }

    #[test]
    fn election_file_round_trip(e in election(9, 6)) {
        let text = e.to_file_string();
        let back = Election::parse(&text).unwrap();
        prop_assert_eq!(back.to_file_string(), text);
    }

    #[test]
    fn graph_file_round_trip(g in graph(9)) {
        let back = UndirectedGraph::parse(&g.to_file_string()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn general_construction_round_trip(g in graph(14)) {
        let r = implement_general(&g).unwrap();
        prop_assert!(r.verified);
        prop_assert!(r.voters_used <= 2 * g.num_vertices() + 1);
        prop_assert_eq!(r.election.multicrossing_graph(), g);
    }

    #[test]
    fn complement_is_involution(g in graph(9)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.num_edges() + g.complement().num_edges(), g.num_vertices() * (g.num_vertices() - 1) / 2);
    }
}
