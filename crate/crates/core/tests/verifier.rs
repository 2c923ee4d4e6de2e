use qcover_core::enumerate::connected_graphs;
use qcover_core::extremal::build_b1_member;
use qcover_core::graph6::to_graph6;
use qcover_core::pathcover::Decision;
use qcover_core::verifier::{classify_graph, scan_corpus, Check, Outcome, VerifierConfig};
use qcover_core::{EdgeList, Graph};

#[test]
fn complete_graph_is_covered_by_closure() {
    let r = classify_graph(&Graph::complete(245), 1, 2, &VerifierConfig::default()).unwrap();
    assert!(r.hypotheses.all());
    assert_eq!(r.decision, Decision::Coverable);
    assert_eq!(r.route, "closure");
    assert!(!r.theorem_violated);
    assert!((r.q - 488.0).abs() < 1e-8);
}

#[test]
fn first_family_member_is_the_exception() {
    let e = EdgeList::from_pairs(245, [(2, 3)]).unwrap();
    let m = build_b1_member(245, 1, 2, &e).unwrap();
    let r = classify_graph(&m.graph, 1, 2, &VerifierConfig::default()).unwrap();
    assert!(r.hypotheses.all());
    assert_eq!(r.decision, Decision::NotCoverable);
    assert_eq!(r.route, "separator");
    assert_eq!(r.separator.as_ref().unwrap().bound, 2);
    assert!(r.exception && r.spanning_subgraph_of_b);
    assert!(!r.theorem_violated);
    assert!(r.checks.iter().all(|c| c.outcome != Outcome::Fail));
}

#[test]
fn cycle_misses_the_spectral_hypothesis() {
    let r = classify_graph(&Graph::cycle(7).unwrap(), 1, 2, &VerifierConfig::default()).unwrap();
    assert!(!r.hypotheses.q_threshold);
    assert!(!r.hypotheses.all());
    assert_eq!(r.decision, Decision::Coverable);
    assert!(!r.theorem_violated);
}

fn corpus(n: usize) -> String {
    connected_graphs(n).iter().map(|g| to_graph6(g) + "\n").collect()
}

#[test]
fn connected_seven_vertex_graphs_have_no_violations() {
    let text = corpus(7);
    for k in [1, 2] {
        for delta in [1, 2] {
            let report = scan_corpus(text.as_bytes(), k, delta, &VerifierConfig::default()).unwrap();
            assert_eq!(report.summary.records, 853);
            assert_eq!(report.summary.theorem_violations, 0);
            assert_eq!(report.summary.failures(), 0);
            assert_eq!(report.summary.tally(Check::EdgeCountBound).pass, 853);
        }
    }
}

#[test]
fn malformed_lines_are_skipped() {
    let text = "C~\nnonsense\n\nDhC\n";
    let report = scan_corpus(text.as_bytes(), 1, 2, &VerifierConfig::default()).unwrap();
    assert_eq!(report.summary.records, 2);
    assert_eq!(report.skipped.len(), 1);
    assert_eq!(report.skipped[0].line, 2);
    assert_eq!(report.exit_code(), 0);
}

#[test]
fn reports_are_deterministic() {
    let text = corpus(6);
    let cfg = VerifierConfig::default();
    let a = scan_corpus(text.as_bytes(), 1, 2, &cfg).unwrap().to_json();
    let b = scan_corpus(text.as_bytes(), 1, 2, &cfg).unwrap().to_json();
    assert_eq!(a, b);
}
