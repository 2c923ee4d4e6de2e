//! Desk-scale verification: per-graph classification against the
//! Q-index coverability theorem, family-wide eigenvalue checks on the
//! extremal family, and JSON reports.
//!
//! Every check produces a [`CheckResult`] with an [`Outcome`]; a
//! [`VerifierReport`] tallies them per [`Check`] so that the summary always
//! matches the records.

mod classify;
mod family;
mod sampling;

pub use classify::{classify_graph, scan_corpus, Hypotheses, VerifierRecord};
pub use family::{
    check_argmax_entries, check_entry_orderings, check_q_bounds, check_x_entry_bound, ArgmaxReport, MemberOutcome,
    MAX_ARGMAX_ORDER,
};
pub use sampling::{check_dense_graphs, dense_samples, stability_scan, DenseModel};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::pathcover::{CoverConfig, GreedyBudget, DEFAULT_DP_CAP};
use crate::spectral::SpectralConfig;

/// Everything a check can assert.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// `q(G) ≤ 2e(G)/(n−1) + n − 2` for every graph with `n ≥ 2`.
    EdgeCountBound,
    /// `G` has a cover by ≤ k paths iff `cl_{n−k}(G)` does.
    ClosureStability,
    /// Above the edge threshold (with `δ(G) ≥ δ`, `n` large enough), `G` is
    /// k-path-coverable or a spanning subgraph of `B(n,k,δ)`.
    DenseCoverableOrInB,
    /// The theorem's implication: hypotheses ⇒ coverable unless in B₁.
    CoverableUnlessB1,
    /// First-family members reach the Q-index threshold.
    B1QLower,
    /// First-family members are certified non-coverable with `S = Y`.
    B1ExceptionCertified,
    /// Second-family members exceed the threshold minus one.
    B2QLower,
    /// Second-family members stay strictly below the threshold.
    B2QUpper,
    /// X entries of the max-normalized Perron vector are at most `δ/(q−δ)`.
    XEntryBound,
    /// Entry orderings between degree classes on the second-family argmax.
    ArgmaxOrderings,
    /// Gap between the largest entry and the smallest `Y ∪ Z` entry.
    ArgmaxEntryGap,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::EdgeCountBound,
        Check::ClosureStability,
        Check::DenseCoverableOrInB,
        Check::CoverableUnlessB1,
        Check::B1QLower,
        Check::B1ExceptionCertified,
        Check::B2QLower,
        Check::B2QUpper,
        Check::XEntryBound,
        Check::ArgmaxOrderings,
        Check::ArgmaxEntryGap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::EdgeCountBound => "edge-count-bound",
            Check::ClosureStability => "closure-stability",
            Check::DenseCoverableOrInB => "dense-coverable-or-in-b",
            Check::CoverableUnlessB1 => "coverable-unless-b1",
            Check::B1QLower => "b1-q-lower",
            Check::B1ExceptionCertified => "b1-exception-certified",
            Check::B2QLower => "b2-q-lower",
            Check::B2QUpper => "b2-q-upper",
            Check::XEntryBound => "x-entry-bound",
            Check::ArgmaxOrderings => "argmax-orderings",
            Check::ArgmaxEntryGap => "argmax-entry-gap",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: Check,
    pub outcome: Outcome,
    /// Signed distance to the bound; positive means satisfied.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn new(check: Check, outcome: Outcome) -> Self {
        CheckResult {
            check,
            outcome,
            margin: None,
            detail: None,
        }
    }

    pub fn not_applicable(check: Check, why: impl Into<String>) -> Self {
        CheckResult::new(check, Outcome::NotApplicable).with_detail(why)
    }

    /// Non-strict `margin ≥ 0`, accepting at most `slack` of violation.
    pub fn at_least(check: Check, margin: f64, slack: f64) -> Self {
        let ok = margin >= -slack;
        CheckResult::new(check, if ok { Outcome::Pass } else { Outcome::Fail }).with_margin(margin)
    }

    /// Strict `margin > 0`; no slack is granted to strict inequalities.
    pub fn strictly(check: Check, margin: f64) -> Self {
        let ok = margin > 0.0;
        CheckResult::new(check, if ok { Outcome::Pass } else { Outcome::Fail }).with_margin(margin)
    }

    pub fn with_margin(mut self, margin: f64) -> Self {
        self.margin = Some(margin);
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifierConfig {
    pub seed: u64,
    /// Eigen residual target (∞-norm).
    pub tolerance: f64,
    /// Slack for non-strict eigenvalue inequalities.
    pub slack: f64,
    /// Slack for Perron-vector entry bounds.
    pub entry_slack: f64,
    pub cover: CoverConfig,
    /// Wall-clock timings make reports differ run to run, so they are off
    /// unless requested.
    pub timings: bool,
    pub allow_unknown: bool,
}

impl Default for VerifierConfig {
    fn default() -> Self {
        VerifierConfig {
            seed: 0,
            tolerance: 1e-8,
            slack: 1e-6,
            entry_slack: 1e-8,
            cover: CoverConfig {
                dp_cap: DEFAULT_DP_CAP,
                greedy: GreedyBudget::default(),
            },
            timings: false,
            allow_unknown: false,
        }
    }
}

impl VerifierConfig {
    pub fn spectral(&self) -> SpectralConfig<f64> {
        SpectralConfig {
            tolerance: self.tolerance,
            slack: self.slack,
            ..SpectralConfig::default()
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub unknown: usize,
}

impl Tally {
    fn add(&mut self, o: Outcome) {
        match o {
            Outcome::Pass => self.pass += 1,
            Outcome::Fail => self.fail += 1,
            Outcome::NotApplicable => self.not_applicable += 1,
            Outcome::Unknown => self.unknown += 1,
        }
    }

    /// Applicable results only.
    pub fn applicable(&self) -> usize {
        self.pass + self.fail + self.unknown
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub records: usize,
    pub members: usize,
    pub skipped: usize,
    pub theorem_violations: usize,
    pub checks: BTreeMap<Check, Tally>,
}

impl Summary {
    pub fn failures(&self) -> usize {
        self.checks.values().map(|t| t.fail).sum()
    }

    pub fn unknowns(&self) -> usize {
        self.checks.values().map(|t| t.unknown).sum()
    }

    pub fn tally(&self, check: Check) -> Tally {
        self.checks.get(&check).copied().unwrap_or_default()
    }
}

/// A malformed or unusable input line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedLine {
    pub line: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifierReport {
    pub config: VerifierConfig,
    pub records: Vec<VerifierRecord>,
    pub members: Vec<MemberOutcome>,
    /// Checks that belong to a whole run rather than to one graph.
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub argmax: Option<ArgmaxReport>,
    pub skipped: Vec<SkippedLine>,
    pub summary: Summary,
}

impl VerifierReport {
    pub fn new(config: VerifierConfig) -> Self {
        VerifierReport {
            config,
            records: Vec::new(),
            members: Vec::new(),
            checks: Vec::new(),
            argmax: None,
            skipped: Vec::new(),
            summary: Summary::default(),
        }
    }

    /// Appends another report's contents; call [`finish`](Self::finish)
    /// afterwards.
    pub fn absorb(&mut self, other: VerifierReport) {
        self.records.extend(other.records);
        self.members.extend(other.members);
        self.checks.extend(other.checks);
        self.skipped.extend(other.skipped);
        if other.argmax.is_some() {
            self.argmax = other.argmax;
        }
    }

    /// Recomputes the summary from the current contents.
    pub fn finish(mut self) -> Self {
        let mut s = Summary {
            records: self.records.len(),
            members: self.members.len(),
            skipped: self.skipped.len(),
            theorem_violations: self.records.iter().filter(|r| r.theorem_violated).count(),
            checks: BTreeMap::new(),
        };
        let all = self
            .records
            .iter()
            .flat_map(|r| &r.checks)
            .chain(self.members.iter().flat_map(|m| &m.checks))
            .chain(&self.checks);
        for c in all {
            s.checks.entry(c.check).or_default().add(c.outcome);
        }
        self.summary = s;
        self
    }

    /// 0 when clean, 1 on any failure or theorem violation, 2 when unknowns
    /// remain and are not allowed.
    pub fn exit_code(&self) -> i32 {
        if self.summary.failures() > 0 || self.summary.theorem_violations > 0 {
            1
        } else if self.summary.unknowns() > 0 && !self.config.allow_unknown {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{}\"", c.name()));
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn slack_is_asymmetric() {
        assert_eq!(CheckResult::at_least(Check::B1QLower, -5e-7, 1e-6).outcome, Outcome::Pass);
        assert_eq!(CheckResult::at_least(Check::B1QLower, -2e-6, 1e-6).outcome, Outcome::Fail);
        assert_eq!(CheckResult::strictly(Check::B2QUpper, 0.0).outcome, Outcome::Fail);
        assert_eq!(CheckResult::strictly(Check::B2QUpper, 1e-12).outcome, Outcome::Pass);
    }

    #[test]
    fn summary_matches_tallies_and_exit_codes() {
        let mut r = VerifierReport::new(VerifierConfig::default());
        r.checks.push(CheckResult::new(Check::ClosureStability, Outcome::Pass));
        r.checks.push(CheckResult::new(Check::ClosureStability, Outcome::Unknown));
        let r = r.finish();
        assert_eq!(r.summary.tally(Check::ClosureStability).applicable(), 2);
        assert_eq!(r.exit_code(), 2);
        let mut r2 = r.clone();
        r2.checks.push(CheckResult::new(Check::B2QUpper, Outcome::Fail));
        assert_eq!(r2.finish().exit_code(), 1);
        let empty = VerifierReport::new(VerifierConfig::default()).finish();
        assert_eq!(empty.exit_code(), 0);
        assert_eq!(empty.summary.records, 0);
    }
}
