use proptest::prelude::*;
use qcover_core::extremal::build_b;
use qcover_core::pathcover::{
    best_separator_certificate, is_k_path_coverable, min_path_cover_brute, min_path_cover_dp, separator_lower_bound,
    validate_witness, CoverConfig, Decision, DEFAULT_DP_CAP,
};
use qcover_core::Graph;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
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
fn small_examples() {
    assert_eq!(min_path_cover_dp(&Graph::complete(4), DEFAULT_DP_CAP).unwrap().cover_number, 1);
    assert_eq!(min_path_cover_dp(&Graph::empty(5), DEFAULT_DP_CAP).unwrap().cover_number, 5);
    assert_eq!(min_path_cover_dp(&Graph::star(5), DEFAULT_DP_CAP).unwrap().cover_number, 4);
    assert_eq!(min_path_cover_dp(&build_b(12, 1, 2).unwrap().graph, DEFAULT_DP_CAP).unwrap().cover_number, 2);
}

#[test]
fn extremal_graph_needs_k_plus_one_paths() {
    // removing the δ-clique leaves the big clique plus δ + k isolated vertices
    let g = build_b(245, 1, 2).unwrap().graph;
    let c = separator_lower_bound(&g, &[0, 1]).unwrap();
    assert_eq!(c.bound, 2);
    let v = is_k_path_coverable(&g, 1, &CoverConfig::default()).unwrap();
    assert_eq!(v.decision, Decision::NotCoverable);
    assert_eq!(v.route(), "separator");
}

#[test]
fn complete_graph_covers_via_closure() {
    let v = is_k_path_coverable(&Graph::complete(100), 1, &CoverConfig::default()).unwrap();
    assert_eq!(v.decision, Decision::Coverable);
    assert_eq!(v.route(), "closure");
}

#[test]
fn witness_validation_rejects_bad_paths() {
    let g = Graph::path(4);
    assert!(validate_witness(&g, &[vec![0, 1, 2, 3]]).is_ok());
    assert!(validate_witness(&g, &[vec![0, 2], vec![1, 3]]).is_err());
    assert!(validate_witness(&g, &[vec![0, 1], vec![1, 2, 3]]).is_err());
    assert!(validate_witness(&g, &[vec![0, 1, 2]]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn dp_matches_brute_force(g in arb_graph(8)) {
        let dp = min_path_cover_dp(&g, DEFAULT_DP_CAP).unwrap();
        let brute = min_path_cover_brute(&g).unwrap();
        prop_assert_eq!(dp.cover_number, brute.cover_number);
        validate_witness(&g, dp.witness.as_ref().unwrap()).unwrap();
    }

    #[test]
    fn adding_an_edge_never_increases_cover(g in arb_graph(10), a in 0usize..10, b in 0usize..10) {
        let n = g.order();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b && !g.has_edge(a, b));
        let mut h = g.clone();
        h.add_edge(a, b).unwrap();
        let before = min_path_cover_dp(&g, DEFAULT_DP_CAP).unwrap().cover_number;
        let after = min_path_cover_dp(&h, DEFAULT_DP_CAP).unwrap().cover_number;
        prop_assert!(after <= before && before <= after + 1);
    }

    #[test]
    fn separator_bound_never_exceeds_cover(g in arb_graph(10)) {
        let cover = min_path_cover_dp(&g, DEFAULT_DP_CAP).unwrap().cover_number as i64;
        prop_assert!(best_separator_certificate(&g).bound <= cover);
    }

    #[test]
    fn certificate_routes_agree_with_exact(g in arb_graph(12), k in 1usize..4) {
        let exact = min_path_cover_dp(&g, DEFAULT_DP_CAP).unwrap().cover_number;
        let cfg = CoverConfig { dp_cap: 0, ..CoverConfig::default() };
        let v = is_k_path_coverable(&g, k, &cfg).unwrap();
        match v.decision {
            Decision::Coverable => prop_assert!(exact <= k),
            Decision::NotCoverable => prop_assert!(exact > k),
            Decision::Unknown => {}
        }
    }
}
