use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{CoverMethod, PathCoverResult};

const INF: u8 = u8::MAX;

/// Default largest order accepted by [`min_path_cover_dp`].
pub const DEFAULT_DP_CAP: usize = 20;

/// Exact minimum path cover by dynamic programming over
/// `(visited set, endpoint of the open path)`, storing the fewest paths used.
/// Extending to an adjacent unvisited vertex is free; any other vertex
/// opens a new path.
pub fn min_path_cover_dp(g: &Graph, cap: usize) -> Result<PathCoverResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::TooFewVertices { required: 1, actual: 0 });
    }
    if n > cap || n > 28 {
        return Err(Error::TooLarge { n, cap: cap.min(28) });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | (1 << w)))
        .collect();
    let full: usize = (1 << n) - 1;
    let idx = |mask: usize, v: usize| mask * n + v;
    let mut dp = vec![INF; (full + 1) * n];
    for v in 0..n {
        dp[idx(1 << v, v)] = 1;
    }
    for mask in 1..=full {
        let mut ends = mask;
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let cur = dp[idx(mask, v)];
            if cur == INF {
                continue;
            }
            let mut rest = full & !mask;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let cost = cur + u8::from(adj[v] >> u & 1 == 0);
                let slot = &mut dp[idx(mask | 1 << u, u)];
                if cost < *slot {
                    *slot = cost;
                }
            }
        }
    }

    let (mut end, best) = (0..n)
        .map(|v| (v, dp[idx(full, v)]))
        .min_by_key(|&(_, c)| c)
        .expect("n >= 1");

    // Walk back through consistent predecessors.
    let mut order = vec![end];
    let mut breaks = Vec::new();
    let mut mask = full;
    while mask.count_ones() > 1 {
        let target = dp[idx(mask, end)];
        let prev_mask = mask & !(1 << end);
        let mut found = None;
        let mut cand = prev_mask;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let c = dp[idx(prev_mask, w)];
            if c == INF {
                continue;
            }
            let joined = adj[w] >> end & 1 == 1;
            if c + u8::from(!joined) == target {
                found = Some((w, !joined));
                break;
            }
        }
        let (w, broke) = found.expect("dp table is consistent");
        breaks.push(broke);
        order.push(w);
        mask = prev_mask;
        end = w;
    }
    order.reverse();
    breaks.reverse();

    let mut paths = vec![vec![order[0]]];
    for (&v, &broke) in order[1..].iter().zip(&breaks) {
        if broke {
            paths.push(vec![v]);
        } else {
            paths.last_mut().expect("nonempty").push(v);
        }
    }
    debug_assert_eq!(paths.len(), best as usize);
    PathCoverResult::validated(g, best as usize, Some(paths), CoverMethod::Dp)
}
