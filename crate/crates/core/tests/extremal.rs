use qcover_core::extremal::{
    build_b, build_b1_member, build_b2_member, build_member, enumerate_eprime, is_spanning_subgraph_of_b,
    recognize_b1_member, sample_eprime, thresholds, Params, Role, Sidecar,
};
use qcover_core::graph6::to_graph6;
use qcover_core::{EdgeList, Error, Graph};

#[test]
fn b_structure() {
    let b = build_b(245, 1, 2).unwrap();
    let g = &b.graph;
    assert_eq!(g.order(), 245);
    assert_eq!(b.y_vertices(), [0, 1]);
    assert_eq!(b.z_vertices().len(), 240);
    assert_eq!(b.x_vertices(), [242, 243, 244]);
    for x in b.x_vertices() {
        assert_eq!(g.neighbors(x).collect::<Vec<_>>(), [0, 1]);
    }
    assert_eq!(g.degree(0), 244);
    assert_eq!(g.degree(2), 241);
    // K_2 ∨ (K_240 ∪ 3K_1): C(242,2) + 2·3 edges
    assert_eq!(g.edge_count(), 242 * 241 / 2 + 6);
    assert!(g.is_connected().unwrap());
}

#[test]
fn small_b_matches_join_construction() {
    let b = build_b(12, 1, 2).unwrap().graph;
    let rest = Graph::disjoint_union(&Graph::complete(7), &Graph::empty(3));
    let want = Graph::join(&Graph::complete(2), &rest);
    assert_eq!(b, want);
}

#[test]
fn threshold_values() {
    let t = thresholds(245, 1, 2);
    assert_eq!(t.q_threshold, 482);
    assert_eq!(t.n_min_theorem, 245);
    assert_eq!(t.e1_budget_b1, 1);
    assert_eq!(thresholds(29, 1, 2).edge_threshold, 312);
    assert_eq!(thresholds(29, 1, 2).n_min_dense, 29);
}

#[test]
fn deletion_budgets() {
    let one = EdgeList::from_pairs(245, [(2, 3)]).unwrap();
    let two = EdgeList::from_pairs(245, [(2, 3), (4, 5)]).unwrap();
    assert!(build_b1_member(245, 1, 2, &one).is_ok());
    assert!(matches!(build_b1_member(245, 1, 2, &two), Err(Error::WrongEdgeBudget { .. })));
    assert!(build_b2_member(245, 1, 2, &two).is_ok());
    assert!(matches!(build_b2_member(245, 1, 2, &one), Err(Error::WrongEdgeBudget { .. })));
    let outside = EdgeList::from_pairs(245, [(0, 244)]).unwrap();
    assert!(matches!(build_b1_member(245, 1, 2, &outside), Err(Error::EdgeOutsideE1(0, 244))));
}

#[test]
fn members_are_recognized() {
    let p = Params::new(30, 1, 2).unwrap();
    let e = EdgeList::from_pairs(30, [(5, 9)]).unwrap();
    let m = build_member(p, &e).unwrap();
    assert_eq!(m.edges_inside_y(), 1);
    let (roles, removed) = recognize_b1_member(&m.graph, 30, 1, 2).unwrap().unwrap();
    assert_eq!(removed.len(), 1);
    assert_eq!(roles.iter().filter(|r| **r == Role::X).count(), 3);
    // relabeling does not hide membership
    let perm: Vec<usize> = (0..30).rev().collect();
    assert!(recognize_b1_member(&m.graph.permuted(&perm), 30, 1, 2).unwrap().is_some());
    assert!(is_spanning_subgraph_of_b(&m.graph.permuted(&perm), 30, 1, 2).unwrap().is_some());
    assert!(recognize_b1_member(&Graph::complete(30), 30, 1, 2).unwrap().is_none());
}

#[test]
fn sidecar_round_trip() {
    let p = Params::new(20, 2, 3).unwrap();
    let m = build_member(p, &EdgeList::from_pairs(20, [(3, 4)]).unwrap()).unwrap();
    let json = serde_json::to_string(&m.to_sidecar()).unwrap();
    let back: Sidecar = serde_json::from_str(&json).unwrap();
    assert_eq!(back.graph6, to_graph6(&m.graph));
    let inst = back.into_instance().unwrap();
    assert_eq!(inst.graph, m.graph);
    assert_eq!(inst.removed, m.removed);
}

#[test]
fn sampling_and_enumeration_agree_on_counts() {
    let p = Params::new(8, 1, 2).unwrap();
    assert_eq!(enumerate_eprime(p, 2).count(), 45);
    let all = sample_eprime(p, 2, 45, 1).unwrap();
    assert_eq!(all.len(), 45);
    assert!(matches!(sample_eprime(p, 2, 46, 1), Err(Error::ImpossibleCount { .. })));
    assert_eq!(sample_eprime(p, 2, 10, 9).unwrap(), sample_eprime(p, 2, 10, 9).unwrap());
}
