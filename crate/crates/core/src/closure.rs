//! Bondy–Chvátal k-closure.
//!
//! `cl_k(G)` joins non-adjacent pairs with degree sum at least `k` until no
//! such pair remains. Degrees only grow, so a pair can become eligible only
//! when an edge lands on one of its endpoints; the worklist re-examines
//! exactly those pairs after each insertion.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosureResult {
    pub closed_graph: Graph,
    /// Inserted edges in insertion order.
    pub added_edges: EdgeList,
    pub k: usize,
}

enum Worklist {
    Fifo(VecDeque<(usize, usize)>),
    Random(Vec<(usize, usize)>, ChaCha8Rng),
}

impl Worklist {
    fn push(&mut self, pair: (usize, usize)) {
        match self {
            Worklist::Fifo(q) => q.push_back(pair),
            Worklist::Random(v, _) => v.push(pair),
        }
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        match self {
            Worklist::Fifo(q) => q.pop_front(),
            Worklist::Random(v, rng) => {
                if v.is_empty() {
                    None
                } else {
                    let i = rng.gen_range(0..v.len());
                    Some(v.swap_remove(i))
                }
            }
        }
    }
}

fn run(g: &Graph, k: usize, mut work: Worklist) -> ClosureResult {
    let n = g.order();
    let mut h = g.clone();
    let mut deg = g.degrees();
    for u in 0..n {
        for v in (u + 1)..n {
            if !h.has_edge(u, v) && deg[u] + deg[v] >= k {
                work.push((u, v));
            }
        }
    }
    let mut added = EdgeList::new();
    while let Some((u, v)) = work.pop() {
        if h.has_edge(u, v) || deg[u] + deg[v] < k {
            continue;
        }
        h.add_edge(u, v).expect("valid pair");
        deg[u] += 1;
        deg[v] += 1;
        added.push_unchecked(u, v);
        for end in [u, v] {
            for w in 0..n {
                if w != end && !h.has_edge(end, w) && deg[end] + deg[w] >= k {
                    work.push((end.min(w), end.max(w)));
                }
            }
        }
    }
    ClosureResult {
        closed_graph: h,
        added_edges: added,
        k,
    }
}

/// `cl_k(g)` with candidate pairs processed in lexicographic FIFO order.
pub fn k_closure(g: &Graph, k: usize) -> ClosureResult {
    run(g, k, Worklist::Fifo(VecDeque::new()))
}

/// `cl_k(g)` with candidates drawn in a seeded random order. The closed
/// graph does not depend on the seed; only `added_edges` order does.
pub fn k_closure_seeded(g: &Graph, k: usize, seed: u64) -> ClosureResult {
    run(g, k, Worklist::Random(Vec::new(), ChaCha8Rng::seed_from_u64(seed)))
}

/// Whether `cl_k(g)` is complete. A complete closure at `k = n − p`
/// certifies that `g` has a cover by at most `p` disjoint paths.
pub fn closure_is_complete(g: &Graph, k: usize) -> Result<bool> {
    if g.is_null() {
        return Err(Error::TooFewVertices {
            required: 1,
            actual: 0,
        });
    }
    Ok(k_closure(g, k).closed_graph.is_complete())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::build_b;

    #[test]
    fn five_cycle() {
        let c5 = Graph::cycle(5).unwrap();
        let r = k_closure(&c5, 5);
        assert_eq!(r.closed_graph, c5);
        assert!(r.added_edges.is_empty());
        let r = k_closure(&c5, 4);
        assert_eq!(r.closed_graph, Graph::complete(5));
        assert_eq!(r.added_edges.len(), 5);
        assert!(closure_is_complete(&c5, 4).unwrap());
        assert!(!closure_is_complete(&c5, 5).unwrap());
    }

    #[test]
    fn complete_is_fixed() {
        for k in 0..12 {
            assert!(k_closure(&Graph::complete(6), k).added_edges.is_empty());
        }
        assert_eq!(k_closure(&Graph::empty(4), 0).closed_graph, Graph::complete(4));
        assert!(closure_is_complete(&Graph::empty(0), 1).is_err());
    }

    #[test]
    fn added_edges_met_threshold_when_added() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 3), (2, 5)]).unwrap();
        let r = k_closure_seeded(&g, 5, 11);
        let mut h = g.clone();
        for &(u, v) in &r.added_edges {
            assert!(!h.has_edge(u, v));
            assert!(h.degree(u) + h.degree(v) >= 5);
            h.add_edge(u, v).unwrap();
        }
        assert_eq!(h, r.closed_graph);
        let c = &r.closed_graph;
        for u in 0..7 {
            for v in (u + 1)..7 {
                if !c.has_edge(u, v) {
                    assert!(c.degree(u) + c.degree(v) < 5);
                }
            }
        }
    }

    #[test]
    fn extremal_graph_closure_stays_incomplete() {
        let b = build_b(12, 1, 2).unwrap();
        assert!(!closure_is_complete(&b.graph, 11).unwrap());
    }
}
