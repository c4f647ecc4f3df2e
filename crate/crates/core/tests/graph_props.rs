mod common;

use bookram::graph::named::*;
use bookram::srg::paley;
use bookram::{from_graph6, to_graph6, Graph, Graph6Error, VertexSet};
use common::{brute_bipartite, reference_decode};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut it = bits.into_iter();
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            },
        )
    })
}

fn arb_graph_and_set(max_order: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    arb_graph(max_order).prop_flat_map(|g| {
        let n = g.order();
        proptest::collection::vec(any::<bool>(), n).prop_map(move |mask| {
            let s = VertexSet::from_vertices(n, (0..n).filter(|&i| mask[i])).unwrap();
            (g.clone(), s)
        })
    })
}

#[test]
fn graph6_round_trip_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..500 {
        let n = rng.gen_range(0..40);
        let p = rng.gen_range(0.0..1.0);
        let g = common::random_graph(&mut rng, n, p);
        let s = to_graph6(&g);
        let (order, edges) = reference_decode(&s);
        assert_eq!(order, n);
        assert_eq!(edges, g.edges().collect::<Vec<_>>());
        let h = from_graph6(&s).unwrap();
        assert_eq!(h, g);
        assert_eq!(to_graph6(&h), s);
    }
}

#[test]
fn graph6_large_orders() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [62, 63, 64, 100, 300] {
        let g = common::random_graph(&mut rng, n, 0.3);
        let s = to_graph6(&g);
        if n >= 63 {
            assert!(s.starts_with('~'));
        }
        assert_eq!(from_graph6(&s).unwrap(), g);
    }
}

#[test]
fn graph6_known_strings() {
    let star = from_graph6("D?{").unwrap();
    assert_eq!(
        star.edges().collect::<Vec<_>>(),
        vec![(0, 4), (1, 4), (2, 4), (3, 4)]
    );
    assert_eq!(
        reference_decode("D?{").1,
        vec![(0, 4), (1, 4), (2, 4), (3, 4)]
    );
    assert_eq!(to_graph6(&cycle(5)), "Dhc");
    assert_eq!(from_graph6(">>graph6<<Dhc\n").unwrap(), cycle(5));
    assert!(matches!(
        from_graph6("Dh"),
        Err(Graph6Error::WrongLength { .. })
    ));
}

#[test]
fn named_graph_primitives() {
    assert_eq!(complete(5).complement(), Graph::empty(5));
    let c5 = cycle(5);
    assert_eq!(
        bookram::srg::verify_srg(&c5.complement()),
        bookram::srg::verify_srg(&c5)
    );
    let k4 = complete(4);
    assert_eq!(k4.common_neighbors(0, 3).unwrap(), 2);
    let c4 = cycle(4);
    assert_eq!(c4.common_neighbors(0, 2).unwrap(), 2);
    assert_eq!(c4.common_neighbors(0, 1).unwrap(), 0);
    assert!(c4.common_neighbors(1, 1).is_err());
    assert!(c4.common_neighbors(0, 4).is_err());
    let p9 = paley(9).unwrap();
    for (u, v) in p9.edges() {
        assert_eq!(p9.common_neighbors(u, v).unwrap(), 1);
    }
    let k5 = complete(5);
    let x = VertexSet::from_vertices(5, [0, 2, 4]).unwrap();
    assert_eq!(k5.induced_subgraph(&x).unwrap(), complete(3));
    let c6 = cycle(6);
    let alt = VertexSet::from_vertices(6, [0, 2, 4]).unwrap();
    assert_eq!(c6.induced_subgraph(&alt).unwrap(), Graph::empty(3));
    let k33 = complete_bipartite(3, 3);
    let a = VertexSet::from_vertices(6, 0..3).unwrap();
    assert_eq!(k33.edges_between(&a, &a.complement()).unwrap(), 9);
    assert_eq!(k33.edges_between(&a, &VertexSet::empty(6)).unwrap(), 0);
    assert!(k33.edges_between(&a, &a).is_err());
    let (s, t) = c4.is_bipartite().unwrap();
    assert_eq!((s.len(), t.len()), (2, 2));
    assert!(cycle(5).is_bipartite().is_none());
    assert!(paley(13).unwrap().is_bipartite().is_none());
    assert_eq!(complete(3).find_triangle(), Some((0, 1, 2)));
    assert!(petersen().find_triangle().is_none());
    assert!(complete_bipartite(4, 7).find_triangle().is_none());
}

proptest! {
    #[test]
    fn degree_sum_and_complement(g in arb_graph(30)) {
        let n = g.order();
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        for v in 0..n {
            prop_assert_eq!(g.degree(v) + c.degree(v), n - 1);
            prop_assert!(!g.has_edge(v, v));
        }
    }

    #[test]
    fn common_neighbour_partition(g in arb_graph(25)) {
        let n = g.order();
        let c = g.complement();
        for u in 0..n {
            for v in u + 1..n {
                let sym = (0..n)
                    .filter(|&w| w != u && w != v && g.has_edge(u, w) != g.has_edge(v, w))
                    .count();
                let total = g.common_neighbors(u, v).unwrap() + c.common_neighbors(u, v).unwrap() + sym;
                prop_assert_eq!(total, n - 2);
            }
        }
    }

    #[test]
    fn bipartition_matches_odd_cycle_search(g in arb_graph(12)) {
        let found = g.is_bipartite();
        prop_assert_eq!(found.is_some(), brute_bipartite(&g));
        if let Some((a, b)) = found {
            prop_assert!(a.is_disjoint(&b));
            prop_assert_eq!(a.len() + b.len(), g.order());
            for (u, v) in g.edges() {
                prop_assert!(a.contains(u) != a.contains(v));
            }
        }
    }

    #[test]
    fn triangle_search_matches_enumeration(g in arb_graph(14)) {
        let n = g.order();
        let any = (0..n).any(|u| (u + 1..n).any(|v| (v + 1..n).any(|w| {
            g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w)
        })));
        let t = g.find_triangle();
        prop_assert_eq!(t.is_some(), any);
        if let Some((u, v, w)) = t {
            prop_assert!(g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w));
        }
    }

    #[test]
    fn induced_subgraph_and_cut((g, x) in arb_graph_and_set(24)) {
        let h = g.induced_subgraph(&x).unwrap();
        let verts = x.to_vec();
        prop_assert_eq!(h.order(), verts.len());
        for i in 0..verts.len() {
            for j in 0..verts.len() {
                if i != j {
                    prop_assert_eq!(h.has_edge(i, j), g.has_edge(verts[i], verts[j]));
                }
            }
        }
        let y = x.complement();
        let brute = verts.iter().map(|&u| y.iter().filter(|&w| g.has_edge(u, w)).count()).sum::<usize>();
        prop_assert_eq!(g.edges_between(&x, &y).unwrap(), brute);
    }

    #[test]
    fn graph6_strings_round_trip(g in arb_graph(70)) {
        let s = to_graph6(&g);
        prop_assert_eq!(to_graph6(&from_graph6(&s).unwrap()), s);
    }
}
