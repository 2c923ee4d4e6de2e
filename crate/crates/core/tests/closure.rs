use proptest::prelude::*;
use qcover_core::closure::{closure_is_complete, k_closure, k_closure_seeded};
use qcover_core::extremal::build_b;
use qcover_core::Graph;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in (u + 1)..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

#[test]
fn extremal_graph_does_not_close() {
    // X vertices have degree δ, so pairs inside X never reach n − k
    let g = build_b(30, 1, 2).unwrap().graph;
    assert!(!closure_is_complete(&g, 29).unwrap());
    assert_eq!(k_closure(&g, 29).closed_graph, k_closure_seeded(&g, 29, 3).closed_graph);
}

#[test]
fn complete_for_dense_degree_sums() {
    assert!(closure_is_complete(&Graph::cycle(6).unwrap(), 4).unwrap());
    assert!(!closure_is_complete(&Graph::cycle(6).unwrap(), 5).unwrap());
}

proptest! {
    #[test]
    fn order_does_not_matter(g in arb_graph(), k in 0usize..24, seed in any::<u64>()) {
        let a = k_closure(&g, k);
        let b = k_closure_seeded(&g, k, seed);
        prop_assert_eq!(&a.closed_graph, &b.closed_graph);
        prop_assert_eq!(a.added_edges.len(), b.added_edges.len());
    }

    #[test]
    fn closure_is_a_stable_supergraph(g in arb_graph(), k in 0usize..24) {
        let c = k_closure(&g, k).closed_graph;
        prop_assert!(g.is_spanning_subgraph_of(&c));
        let n = c.order();
        for u in 0..n {
            for v in (u + 1)..n {
                if !c.has_edge(u, v) {
                    prop_assert!(c.degree(u) + c.degree(v) < k);
                }
            }
        }
        prop_assert_eq!(k_closure(&c, k).added_edges.len(), 0);
    }
}
