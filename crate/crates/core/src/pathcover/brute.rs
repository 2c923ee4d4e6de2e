use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{CoverMethod, PathCoverResult};

/// Largest order accepted by [`min_path_cover_brute`].
pub const BRUTE_CAP: usize = 8;

/// Exhaustive oracle: for every vertex ordering, breaking the sequence at
/// each non-adjacent consecutive pair gives the fewest paths that respect
/// that ordering; the minimum over all orderings is the cover number.
pub fn min_path_cover_brute(g: &Graph) -> Result<PathCoverResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::TooFewVertices { required: 1, actual: 0 });
    }
    if n > BRUTE_CAP {
        return Err(Error::TooLarge { n, cap: BRUTE_CAP });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = (usize::MAX, Vec::new());
    let mut consider = |p: &[usize]| {
        let paths = 1 + p.windows(2).filter(|w| !g.has_edge(w[0], w[1])).count();
        if paths < best.0 {
            best = (paths, p.to_vec());
        }
    };
    // Heap's algorithm, iterative form.
    let mut c = vec![0usize; n];
    consider(&perm);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            consider(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }

    let (count, order) = best;
    let mut paths = vec![vec![order[0]]];
    for w in order.windows(2) {
        if g.has_edge(w[0], w[1]) {
            paths.last_mut().expect("nonempty").push(w[1]);
        } else {
            paths.push(vec![w[1]]);
        }
    }
    PathCoverResult::validated(g, count, Some(paths), CoverMethod::Brute)
}
