//! Minimum covers by vertex-disjoint paths.
//!
//! Exact answers come from a bitmask DP (up to a configurable order) checked
//! against a permutation oracle. Beyond the DP cap, [`is_k_path_coverable`]
//! combines three certificates: a complete `(n−k)`-closure, a validated
//! witness from randomized search, and separator lower bounds.

mod brute;
mod dp;
mod greedy;

pub use brute::{min_path_cover_brute, BRUTE_CAP};
pub use dp::{min_path_cover_dp, DEFAULT_DP_CAP};
pub use greedy::{find_cover, GreedyBudget};

use serde::{Deserialize, Serialize};

use crate::closure::closure_is_complete;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverMethod {
    Dp,
    Brute,
    CertificateOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCoverResult {
    pub cover_number: usize,
    pub witness: Option<Vec<Vec<usize>>>,
    pub method: CoverMethod,
}

impl PathCoverResult {
    /// Builds a result after re-checking the witness against `g`.
    pub(crate) fn validated(
        g: &Graph,
        cover_number: usize,
        witness: Option<Vec<Vec<usize>>>,
        method: CoverMethod,
    ) -> Result<Self> {
        if let Some(paths) = &witness {
            validate_witness(g, paths)?;
            if paths.len() != cover_number {
                return Err(Error::InvalidWitness(format!(
                    "{} paths for cover number {cover_number}",
                    paths.len()
                )));
            }
        }
        Ok(PathCoverResult {
            cover_number,
            witness,
            method,
        })
    }
}

/// Checks that `paths` are nonempty, vertex-disjoint, follow edges of `g`,
/// and cover every vertex.
pub fn validate_witness(g: &Graph, paths: &[Vec<usize>]) -> Result<()> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut covered = 0;
    for (pi, p) in paths.iter().enumerate() {
        if p.is_empty() {
            return Err(Error::InvalidWitness(format!("path {pi} is empty")));
        }
        for &v in p {
            if v >= n {
                return Err(Error::InvalidWitness(format!("vertex {v} out of range")));
            }
            if seen[v] {
                return Err(Error::InvalidWitness(format!("vertex {v} used twice")));
            }
            seen[v] = true;
            covered += 1;
        }
        if let Some(w) = p.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(Error::InvalidWitness(format!("{} and {} are not adjacent", w[0], w[1])));
        }
    }
    if covered != n {
        return Err(Error::InvalidWitness(format!("{covered} of {n} vertices covered")));
    }
    Ok(())
}

/// Lower bound from a vertex set: `p` paths restricted to `G − S` split
/// into at most `p + |S|` pieces, so `p ≥ c(G − S) − |S|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorCertificate {
    pub separator: Vec<usize>,
    pub components_after: usize,
    pub bound: i64,
}

pub fn separator_lower_bound(g: &Graph, s: &[usize]) -> Result<SeparatorCertificate> {
    let rest = g.remove_vertices(s)?;
    let mut separator = s.to_vec();
    separator.sort_unstable();
    separator.dedup();
    let components_after = rest.component_count();
    Ok(SeparatorCertificate {
        bound: components_after as i64 - separator.len() as i64,
        separator,
        components_after,
    })
}

/// Best separator bound over a fixed candidate family: the empty set,
/// every prefix (up to half the order) of the vertices sorted by
/// decreasing degree, and every open neighborhood.
pub fn best_separator_certificate(g: &Graph) -> SeparatorCertificate {
    let n = g.order();
    let mut best = separator_lower_bound(g, &[]).expect("empty set is valid");
    let mut consider = |s: &[usize]| {
        let c = separator_lower_bound(g, s).expect("candidates are in range");
        if c.bound > best.bound {
            best = c;
        }
    };
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for t in 1..=n / 2 {
        consider(&by_degree[..t]);
    }
    for v in 0..n {
        let nb: Vec<usize> = g.neighbors(v).collect();
        if !nb.is_empty() && nb.len() < n - 1 {
            consider(&nb);
        }
    }
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    Coverable,
    NotCoverable,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "route", rename_all = "kebab-case")]
pub enum Evidence {
    /// Exact cover number with a validated witness.
    Exact { result: PathCoverResult },
    /// `cl_{n−k}(G)` is complete.
    ClosureComplete { closure_k: usize },
    /// Validated cover by at most `k` paths.
    Witness { paths: Vec<Vec<usize>> },
    /// Separator bound exceeding `k`.
    Separator { certificate: SeparatorCertificate },
    /// No certificate either way; the strongest separator bound found.
    Inconclusive { best_separator: SeparatorCertificate },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverVerdict {
    pub k: usize,
    pub decision: Decision,
    pub evidence: Evidence,
}

impl CoverVerdict {
    /// Short name of the certification route.
    pub fn route(&self) -> &'static str {
        match self.evidence {
            Evidence::Exact { .. } => "dp",
            Evidence::ClosureComplete { .. } => "closure",
            Evidence::Witness { .. } => "witness",
            Evidence::Separator { .. } => "separator",
            Evidence::Inconclusive { .. } => "none",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverConfig {
    pub dp_cap: usize,
    pub greedy: GreedyBudget,
}

impl Default for CoverConfig {
    fn default() -> Self {
        CoverConfig {
            dp_cap: DEFAULT_DP_CAP,
            greedy: GreedyBudget::default(),
        }
    }
}

/// Decides whether `g` is covered by at most `k` disjoint paths.
///
/// Up to `cfg.dp_cap` vertices the DP answers exactly. Above it the routes
/// are tried in order: complete `(n−k)`-closure, witness search, separator
/// bound `≥ k + 1`; if none applies the decision is `Unknown`.
pub fn is_k_path_coverable(g: &Graph, k: usize, cfg: &CoverConfig) -> Result<CoverVerdict> {
    let n = g.order();
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    if n == 0 {
        return Err(Error::TooFewVertices { required: 1, actual: 0 });
    }
    if n <= cfg.dp_cap {
        let result = min_path_cover_dp(g, cfg.dp_cap)?;
        let decision = if result.cover_number <= k {
            Decision::Coverable
        } else {
            Decision::NotCoverable
        };
        return Ok(CoverVerdict {
            k,
            decision,
            evidence: Evidence::Exact { result },
        });
    }
    if k >= n {
        let paths: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        return Ok(CoverVerdict {
            k,
            decision: Decision::Coverable,
            evidence: Evidence::Witness { paths },
        });
    }
    if closure_is_complete(g, n - k)? {
        return Ok(CoverVerdict {
            k,
            decision: Decision::Coverable,
            evidence: Evidence::ClosureComplete { closure_k: n - k },
        });
    }
    if let Some(paths) = find_cover(g, k, &cfg.greedy) {
        validate_witness(g, &paths)?;
        if paths.len() <= k {
            return Ok(CoverVerdict {
                k,
                decision: Decision::Coverable,
                evidence: Evidence::Witness { paths },
            });
        }
    }
    let best = best_separator_certificate(g);
    if best.bound > k as i64 {
        return Ok(CoverVerdict {
            k,
            decision: Decision::NotCoverable,
            evidence: Evidence::Separator { certificate: best },
        });
    }
    Ok(CoverVerdict {
        k,
        decision: Decision::Unknown,
        evidence: Evidence::Inconclusive { best_separator: best },
    })
}
