use proptest::prelude::*;

use hosoya::constructions::{mycielskian, MycielskianLayout};
use hosoya::graph::edgelist;
use hosoya::hosoya::{hosoya, mycielskian_hosoya_for_graph};
use hosoya::indices::{self, betweenness_centrality, betweenness_from_wiener, pairwise};
use hosoya::{Diameter, Graph, Rational};

/// Arbitrary simple graph on 1..=max_n vertices, possibly disconnected.
fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&p, _)| p);
            Graph::from_edge_list(n, edges).unwrap()
        })
    })
}

/// Connected graph: a random spanning tree plus random extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
        (parents, proptest::collection::vec((0..n, 0..n), 0..2 * n)).prop_map(
            move |(parents, extra)| {
                let mut edges: Vec<(usize, usize)> = parents
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| (p + 1, i + 2))
                    .collect();
                edges.extend(
                    extra
                        .into_iter()
                        .filter(|(a, b)| a != b)
                        .map(|(a, b)| (a.min(b) + 1, a.max(b) + 1)),
                );
                edges.sort_unstable();
                edges.dedup();
                Graph::from_edge_list(n, edges).unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn bfs_distances_change_by_at_most_one_along_edges(g in any_graph(14)) {
        let d = g.distance_matrix();
        for s in g.vertices() {
            for &(i, j) in g.edges() {
                match (d.get(s, i), d.get(s, j)) {
                    (Some(a), Some(b)) => prop_assert!(a.abs_diff(b) <= 1),
                    (None, None) => {}
                    _ => prop_assert!(false, "edge {i}-{j} joins reachable and unreachable"),
                }
            }
            prop_assert_eq!(d.get(s, s), Some(0));
        }
    }

    #[test]
    fn distribution_accounts_for_every_pair(g in any_graph(14)) {
        let dist = g.distance_distribution();
        let n = g.vertex_count() as u64;
        prop_assert_eq!(dist.counts().iter().sum::<u64>() + dist.unreachable_pairs(), n * (n - 1) / 2);
        prop_assert_eq!(dist.count(1), g.edge_count() as u64);
        let h = hosoya(&g);
        prop_assert_eq!(h.coefficient(1), g.edge_count() as i128);
        prop_assert_eq!(g.is_connected(), dist.unreachable_pairs() == 0);
    }

    #[test]
    fn deleting_a_vertex_never_shortens_distances(g in any_graph(12), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.vertex_count() >= 2);
        let k = pick.index(g.vertex_count()) + 1;
        let smaller = g.delete_vertex(k).unwrap();
        let before = g.distance_matrix();
        let after = smaller.distance_matrix();
        let old = |v: usize| if v < k { v } else { v + 1 };
        for i in smaller.vertices() {
            for j in smaller.vertices() {
                match (before.get(old(i), old(j)), after.get(i, j)) {
                    (Some(b), Some(a)) => prop_assert!(a >= b),
                    (None, Some(_)) => prop_assert!(false, "deletion connected a pair"),
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn mycielskian_shape(g in any_graph(12)) {
        let n = g.vertex_count();
        let mu = mycielskian(&g);
        let layout = MycielskianLayout::new(n);
        prop_assert_eq!(mu.vertex_count(), 2 * n + 1);
        prop_assert_eq!(mu.edge_count(), 3 * g.edge_count() + n);
        prop_assert_eq!(mu.degree(layout.w()).unwrap(), n);
        for i in g.vertices() {
            let d = g.degree(i).unwrap();
            prop_assert_eq!(mu.degree(layout.v(i)).unwrap(), 2 * d);
            prop_assert_eq!(mu.degree(layout.u(i)).unwrap(), d + 1);
            for j in g.vertices() {
                prop_assert_eq!(mu.has_edge(layout.v(i), layout.v(j)), g.has_edge(i, j));
                prop_assert!(!mu.has_edge(layout.u(i), layout.u(j)));
            }
        }
    }

    #[test]
    fn closed_form_matches_bfs(g in connected_graph(16)) {
        let closed = mycielskian_hosoya_for_graph(&g).unwrap();
        let oracle = hosoya(&mycielskian(&g));
        prop_assert_eq!(closed.polynomial(), oracle);
        let Diameter::Finite(d) = g.diameter() else { unreachable!() };
        prop_assert_eq!(mycielskian(&g).diameter(), Diameter::Finite(d.clamp(2, 4)));
    }

    #[test]
    fn polynomial_routes_match_definitions(g in any_graph(12)) {
        let h = hosoya(&g);
        let m = g.distance_matrix();
        prop_assert_eq!(indices::wiener(&h).unwrap(), pairwise::wiener(&m).unwrap());
        prop_assert_eq!(indices::hyper_wiener(&h).unwrap(), pairwise::hyper_wiener(&m).unwrap());
        prop_assert_eq!(indices::tsz(&h).unwrap(), pairwise::tsz(&m).unwrap());
        prop_assert_eq!(indices::harary(&h).unwrap(), pairwise::harary(&m).unwrap());
        prop_assert_eq!(indices::closeness(&h).unwrap(), pairwise::closeness(&m).unwrap());
    }

    #[test]
    fn betweenness_counts_match_wiener(g in connected_graph(12)) {
        let w = indices::wiener(&hosoya(&g)).unwrap();
        prop_assert_eq!(
            betweenness_centrality(&g).unwrap(),
            betweenness_from_wiener(w, g.vertex_count()).unwrap()
        );
        prop_assert!(betweenness_centrality(&g).unwrap() >= Rational::ZERO);
    }

    #[test]
    fn edge_list_round_trip(g in any_graph(12)) {
        prop_assert_eq!(edgelist::parse(&edgelist::write(&g)).unwrap(), g);
    }
}
