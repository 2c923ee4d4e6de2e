//! Isomorph-free enumeration of small graphs.
//!
//! Graphs on `n` vertices are grown from the classes on `n - 1` vertices by
//! attaching a new vertex with every possible neighborhood, then deduplicated
//! by a canonical code: color refinement splits the vertices into ordered
//! cells, and the code is the maximum upper-triangle bit string over all
//! cell-respecting orderings.

use std::collections::HashSet;

use crate::graph::Graph;

/// Largest order the enumerator accepts; canonical codes are packed in a u64.
pub const MAX_ORDER: usize = 10;

/// Stable vertex coloring from iterated degree refinement. Colors are ranks
/// of sorted signatures, so the coloring is isomorphism-invariant.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut color: Vec<usize> = g.degrees();
    let mut classes = {
        let mut c = color.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        color = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
    }
}

fn code_for(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            code = (code << 1) | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

fn best_code(g: &Graph, cells: &[Vec<usize>], cell: usize, offset: usize, prefix: &mut Vec<usize>, used: &mut [bool], best: &mut u64) {
    let Some(members) = cells.get(cell) else {
        *best = (*best).max(code_for(g, prefix));
        return;
    };
    if prefix.len() == offset + members.len() {
        best_code(g, cells, cell + 1, prefix.len(), prefix, used, best);
        return;
    }
    for &v in members {
        if used[v] {
            continue;
        }
        used[v] = true;
        prefix.push(v);
        best_code(g, cells, cell, offset, prefix, used, best);
        prefix.pop();
        used[v] = false;
    }
}

/// Canonical code: equal for two graphs of the same order iff they are
/// isomorphic. Panics above [`MAX_ORDER`].
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= MAX_ORDER, "canonical codes support n <= {MAX_ORDER}");
    let color = refine(g);
    let ncolors = color.iter().copied().max().map_or(0, |c| c + 1);
    let mut cells = vec![Vec::new(); ncolors];
    for (v, &c) in color.iter().enumerate() {
        cells[c].push(v);
    }
    let mut best = 0u64;
    best_code(g, &cells, 0, 0, &mut Vec::with_capacity(n), &mut vec![false; n], &mut best);
    best
}

/// One representative of every isomorphism class on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ORDER, "enumeration supports n <= {MAX_ORDER}");
    let mut layer = vec![Graph::empty(0)];
    for m in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &layer {
            let grown = Graph::disjoint_union(base, &Graph::empty(1));
            for mask in 0u32..(1 << (m - 1)) {
                let mut g = grown.clone();
                for u in 0..m - 1 {
                    if mask >> u & 1 == 1 {
                        g.add_edge(u, m - 1).expect("in range");
                    }
                }
                if seen.insert(canonical_code(&g)) {
                    next.push(g);
                }
            }
        }
        layer = next;
    }
    layer
}

/// Representatives of the connected isomorphism classes on `n >= 1`
/// vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(|g| g.is_connected().unwrap_or(false))
        .collect()
}

/// Every labeled graph on `n` vertices (2^(n choose 2) of them).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    assert!(pairs.len() < 32, "labeled enumeration supports n <= 8");
    (0u32..(1u32 << pairs.len())).map(move |mask| {
        let mut g = Graph::empty(n);
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
        }
        g
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_census() {
        let all = [1, 1, 2, 4, 11, 34, 156];
        let connected = [0, 1, 1, 2, 6, 21, 112];
        for n in 0..=6 {
            assert_eq!(all_graphs(n).len(), all[n], "all graphs n={n}");
            if n > 0 {
                assert_eq!(connected_graphs(n).len(), connected[n], "connected n={n}");
            }
        }
    }

    #[test]
    fn code_is_invariant_under_relabeling() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (4, 5)]).unwrap();
        let perm = [5, 3, 1, 0, 2, 4];
        assert_eq!(canonical_code(&g), canonical_code(&g.permuted(&perm)));
        let c6 = Graph::cycle(6).unwrap();
        let two_triangles = Graph::disjoint_union(&Graph::complete(3), &Graph::complete(3));
        assert_ne!(canonical_code(&c6), canonical_code(&two_triangles));
    }

    #[test]
    fn labeled_count() {
        assert_eq!(labeled_graphs(4).count(), 64);
    }
}
