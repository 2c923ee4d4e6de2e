//! Randomized witness search for covers by at most `k` paths.
//!
//! A graph has a cover by at most `k` disjoint paths iff `G ∨ K_{k−1}` has
//! a Hamiltonian path, so the search looks for one with Pósa rotations:
//! extend at either end while an unvisited neighbor exists (fewest unvisited
//! neighbors first), otherwise rotate the path about a neighbor of the
//! endpoint. The search can only confirm; failure says nothing.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyBudget {
    pub restarts: usize,
    /// Rotation/extension steps per restart, multiplied by the order.
    pub steps_per_vertex: usize,
    pub seed: u64,
}

impl Default for GreedyBudget {
    fn default() -> Self {
        GreedyBudget {
            restarts: 32,
            steps_per_vertex: 40,
            seed: 0x5eed,
        }
    }
}

fn hamiltonian_path(g: &Graph, budget: &GreedyBudget) -> Option<Vec<usize>> {
    let n = g.order();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let min_deg_vertex = (0..n).min_by_key(|&v| adj[v].len()).expect("n >= 1");

    for restart in 0..budget.restarts.max(1) {
        let start = if restart == 0 { min_deg_vertex } else { rng.gen_range(0..n) };
        let mut path = vec![start];
        let mut on_path = vec![false; n];
        on_path[start] = true;
        let mut free_deg: Vec<usize> = adj.iter().map(Vec::len).collect();
        for &w in &adj[start] {
            free_deg[w] -= 1;
        }

        for _ in 0..budget.steps_per_vertex.max(1) * n {
            if path.len() == n {
                return Some(path);
            }
            let end = *path.last().expect("nonempty");
            let pick = |v: usize, rng: &mut ChaCha8Rng| -> Option<usize> {
                let mut best: Vec<usize> = Vec::new();
                let mut best_deg = usize::MAX;
                for &w in &adj[v] {
                    if on_path[w] {
                        continue;
                    }
                    match free_deg[w].cmp(&best_deg) {
                        std::cmp::Ordering::Less => {
                            best_deg = free_deg[w];
                            best.clear();
                            best.push(w);
                        }
                        std::cmp::Ordering::Equal => best.push(w),
                        _ => {}
                    }
                }
                best.choose(rng).copied()
            };
            let next = pick(end, &mut rng).or_else(|| {
                let front = path[0];
                pick(front, &mut rng).inspect(|_| path.reverse())
            });
            if let Some(w) = next {
                path.push(w);
                on_path[w] = true;
                for &x in &adj[w] {
                    free_deg[x] -= 1;
                }
                continue;
            }
            // Rotate: end ~ path[i] turns v0..vi vi+1..end into v0..vi end..vi+1.
            let end = *path.last().expect("nonempty");
            let pivots: Vec<usize> = (0..path.len().saturating_sub(2))
                .filter(|&i| g.has_edge(path[i], end))
                .collect();
            match pivots.choose(&mut rng) {
                Some(&i) => path[i + 1..].reverse(),
                None if path.len() > 1 && rng.gen_bool(0.5) => path.reverse(),
                None => break,
            }
        }
        if path.len() == n {
            return Some(path);
        }
    }
    None
}

/// Searches for a cover of `g` by at most `k ≥ 1` vertex-disjoint paths.
/// Returned paths are not yet validated.
pub fn find_cover(g: &Graph, k: usize, budget: &GreedyBudget) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    if k == 0 {
        return None;
    }
    if k >= n {
        return Some((0..n).map(|v| vec![v]).collect());
    }
    let aug = Graph::join(g, &Graph::complete(k - 1));
    let ham = hamiltonian_path(&aug, budget)?;
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut cur = Vec::new();
    for v in ham {
        if v >= n {
            if !cur.is_empty() {
                paths.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(v);
        }
    }
    if !cur.is_empty() {
        paths.push(cur);
    }
    Some(paths)
}
