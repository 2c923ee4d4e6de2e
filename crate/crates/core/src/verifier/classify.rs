use std::io::BufRead;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Check, CheckResult, Outcome, SkippedLine, VerifierConfig, VerifierReport};
use crate::error::{Error, Result};
use crate::extremal::{is_spanning_subgraph_of_b, recognize_b1_member, thresholds, Params};
use crate::graph::Graph;
use crate::graph6::{read_stream, to_graph6};
use crate::pathcover::{is_k_path_coverable, Decision, Evidence, SeparatorCertificate};
use crate::spectral::q_index;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypotheses {
    /// `k ≥ 1` and `δ ≥ 2`.
    pub parameters: bool,
    pub connected: bool,
    pub min_degree: bool,
    /// `q ≥ 2(n−δ−k−1)`, up to the configured slack.
    pub q_threshold: bool,
    pub order: bool,
}

impl Hypotheses {
    pub fn all(&self) -> bool {
        self.parameters && self.connected && self.min_degree && self.q_threshold && self.order
    }
}

/// One graph checked against the theorem's implication.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifierRecord {
    /// Position in the input stream (line number for corpora).
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub hypotheses: Hypotheses,
    pub q: f64,
    pub q_residual: f64,
    /// `q − 2(n−δ−k−1)`.
    pub q_margin: f64,
    pub edges: usize,
    /// `e(G)` minus the dense edge threshold.
    pub edge_margin: i64,
    pub decision: Decision,
    pub route: String,
    /// Exact cover number when the DP ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover_number: Option<usize>,
    /// Certificate behind a separator-based "not coverable".
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separator: Option<SeparatorCertificate>,
    pub spanning_subgraph_of_b: bool,
    /// Recognized as a first-family member.
    pub exception: bool,
    pub theorem_violated: bool,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

/// Evaluates the hypotheses, decides coverability with a certificate, and
/// checks containment in the extremal family.
pub fn classify_graph(g: &Graph, k: usize, delta: usize, cfg: &VerifierConfig) -> Result<VerifierRecord> {
    classify_at(g, 0, k, delta, cfg)
}

pub(crate) fn classify_at(g: &Graph, index: usize, k: usize, delta: usize, cfg: &VerifierConfig) -> Result<VerifierRecord> {
    let n = g.order();
    if n == 0 {
        return Err(Error::TooFewVertices { required: 1, actual: 0 });
    }
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    let start = Instant::now();
    let t = thresholds(n, k, delta);
    let spec = q_index(g, &cfg.spectral())?;
    let q = spec.value;
    let q_margin = q - t.q_threshold as f64;
    let edges = g.edge_count();
    let min_deg = g.min_degree().unwrap_or(0);
    let connected = g.is_connected()?;
    let hypotheses = Hypotheses {
        parameters: delta >= 2,
        connected,
        min_degree: min_deg >= delta,
        q_threshold: q_margin >= -cfg.slack,
        order: n as u64 >= t.n_min_theorem,
    };

    let verdict = is_k_path_coverable(g, k, &cfg.cover)?;
    let (cover_number, separator) = match &verdict.evidence {
        Evidence::Exact { result } => (Some(result.cover_number), None),
        Evidence::Separator { certificate } => (None, Some(certificate.clone())),
        _ => (None, None),
    };

    let params = Params::new(n, k, delta).ok();
    let spanning_subgraph_of_b = match params {
        Some(_) => is_spanning_subgraph_of_b(g, n, k, delta)?.is_some(),
        None => false,
    };
    let exception = match params {
        Some(_) if spanning_subgraph_of_b => recognize_b1_member(g, n, k, delta)?.is_some(),
        _ => false,
    };

    let mut checks = Vec::new();
    if n >= 2 {
        let bound = (2 * edges) as f64 / (n - 1) as f64 + n as f64 - 2.0;
        checks.push(CheckResult::at_least(Check::EdgeCountBound, bound - q, cfg.slack));
    } else {
        checks.push(CheckResult::not_applicable(Check::EdgeCountBound, "single vertex"));
    }

    let edge_margin = edges as i64 - t.edge_threshold;
    let dense = n as u64 >= t.n_min_dense && min_deg >= delta && delta >= 1 && edge_margin > 0;
    checks.push(if !dense {
        CheckResult::not_applicable(Check::DenseCoverableOrInB, "below order, degree or edge threshold")
    } else {
        let outcome = match verdict.decision {
            Decision::Coverable => Outcome::Pass,
            _ if spanning_subgraph_of_b => Outcome::Pass,
            Decision::NotCoverable => Outcome::Fail,
            Decision::Unknown => Outcome::Unknown,
        };
        CheckResult::new(Check::DenseCoverableOrInB, outcome).with_margin(edge_margin as f64)
    });

    let theorem_violated = hypotheses.all() && verdict.decision == Decision::NotCoverable && !exception;
    checks.push(if !hypotheses.all() {
        CheckResult::not_applicable(Check::CoverableUnlessB1, "hypotheses not met")
    } else {
        let outcome = match verdict.decision {
            Decision::Coverable => Outcome::Pass,
            _ if exception => Outcome::Pass,
            Decision::NotCoverable => Outcome::Fail,
            Decision::Unknown => Outcome::Unknown,
        };
        CheckResult::new(Check::CoverableUnlessB1, outcome).with_margin(q_margin)
    });

    Ok(VerifierRecord {
        index,
        graph6: to_graph6(g),
        n,
        k,
        delta,
        hypotheses,
        q,
        q_residual: spec.residual,
        q_margin,
        edges,
        edge_margin,
        decision: verdict.decision,
        route: verdict.route().to_string(),
        cover_number,
        separator,
        spanning_subgraph_of_b,
        exception,
        theorem_violated,
        checks,
        seconds: cfg.timings.then(|| start.elapsed().as_secs_f64()),
    })
}

/// Classifies every graph of a graph6 stream, in input order. Malformed
/// lines are skipped and listed with their line numbers. An I/O error
/// stops reading; the graphs read so far are still classified and the
/// error is listed as a skip.
pub fn scan_corpus<R: BufRead>(reader: R, k: usize, delta: usize, cfg: &VerifierConfig) -> Result<VerifierReport> {
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    let mut report = VerifierReport::new(cfg.clone());
    let mut graphs = Vec::new();
    let mut last_line = 0;
    for item in read_stream(reader) {
        match item {
            Ok(item) => match item.graph {
                Ok(g) if g.order() == 0 => report.skipped.push(SkippedLine {
                    line: item.line,
                    reason: "graph has no vertices".into(),
                }),
                Ok(g) => {
                    last_line = item.line;
                    graphs.push((item.line, g))
                }
                Err(e) => {
                    last_line = item.line;
                    report.skipped.push(SkippedLine {
                        line: item.line,
                        reason: e.to_string(),
                    })
                }
            },
            Err(e) => {
                report.skipped.push(SkippedLine {
                    line: last_line + 1,
                    reason: format!("read error: {e}"),
                });
                break;
            }
        }
    }
    let results: Vec<(usize, Result<VerifierRecord>)> = graphs
        .par_iter()
        .map(|(line, g)| (*line, classify_at(g, *line, k, delta, cfg)))
        .collect();
    for (line, r) in results {
        match r {
            Ok(rec) => report.records.push(rec),
            Err(e) => report.skipped.push(SkippedLine {
                line,
                reason: e.to_string(),
            }),
        }
    }
    report.skipped.sort_by_key(|s| s.line);
    Ok(report.finish())
}
