use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::json;

use qcover_core::closure::k_closure;
use qcover_core::enumerate::{all_graphs, connected_graphs};
use qcover_core::extremal::{build_member, enumerate_eprime, sample_eprime, Params};
use qcover_core::graph6::to_graph6;
use qcover_core::pathcover::{
    is_k_path_coverable, min_path_cover_dp, CoverConfig, Decision, Evidence, GreedyBudget, DEFAULT_DP_CAP,
};
use qcover_core::spectral::{leading_eigenpair, MatrixKind, Method, Normalization, SpectralConfig};
use qcover_core::verifier::{
    check_argmax_entries, check_dense_graphs, check_q_bounds, check_x_entry_bound, scan_corpus, stability_scan, Check,
    VerifierConfig, VerifierReport,
};
use qcover_core::EdgeList;

use crate::input::{load, FamilyParams, Source};
use crate::CliError;

/// Largest order accepted by `enumerate`.
const ENUMERATE_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Power,
    Jacobi,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Power => Method::Power,
            MethodArg::Jacobi => Method::Jacobi,
        }
    }
}

#[derive(Args, Debug)]
pub struct QindexArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    params: FamilyParams,
    /// Adjacency spectral radius instead of the Q-index.
    #[arg(long)]
    adjacency: bool,
    /// Scale the eigenvector so its largest entry is 1.
    #[arg(long)]
    max_entry_one: bool,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Residual target (∞-norm).
    #[arg(long, default_value_t = 1e-8)]
    tolerance: f64,
}

pub fn qindex(a: &QindexArgs, as_json: bool) -> Result<u8, CliError> {
    let cfg = SpectralConfig {
        tolerance: a.tolerance,
        ..SpectralConfig::<f64>::default()
    }
    .with_method(a.method.into())
    .with_normalization(if a.max_entry_one {
        Normalization::MaxEntryOne
    } else {
        Normalization::UnitNorm
    });
    let kind = if a.adjacency {
        MatrixKind::Adjacency
    } else {
        MatrixKind::SignlessLaplacian
    };
    let items = load(&a.source, &a.params)?;
    let mut out = io::stdout().lock();
    if !as_json {
        writeln!(out, "input\tn\tvalue\tresidual\titerations\troute")?;
    }
    for item in items {
        let r = leading_eigenpair(&item.graph, kind, &cfg)?;
        let route = match r.method {
            Method::Jacobi => "eigensolve-jacobi",
            _ => "eigensolve-power",
        };
        if as_json {
            let v = json!({
                "input": item.label,
                "n": item.graph.order(),
                "matrix": kind,
                "value": r.value,
                "residual": r.residual,
                "iterations": r.iterations,
                "route": route,
                "degenerate": r.degenerate,
                "normalization": r.normalization,
                "vector": r.vector,
            });
            writeln!(out, "{v}")?;
        } else {
            writeln!(
                out,
                "{}\t{}\t{:.12}\t{:.3e}\t{}\t{route}",
                item.label,
                item.graph.order(),
                r.value,
                r.residual,
                r.iterations
            )?;
        }
    }
    Ok(0)
}

#[derive(Args, Debug)]
pub struct PathcoverArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    params: FamilyParams,
    /// Decide "at most k paths" by certificates (closure, witness,
    /// separator) instead of requiring the exact DP.
    #[arg(long)]
    certificate: bool,
    /// Exit with status 3 when no certificate settles the question.
    #[arg(long)]
    strict: bool,
    /// Largest order solved exactly.
    #[arg(long, default_value_t = DEFAULT_DP_CAP)]
    dp_cap: usize,
    /// Seed for the randomized witness search.
    #[arg(long, default_value_t = GreedyBudget::default().seed)]
    seed: u64,
}

pub fn pathcover(a: &PathcoverArgs, as_json: bool) -> Result<u8, CliError> {
    let items = load(&a.source, &a.params)?;
    let cfg = CoverConfig {
        dp_cap: a.dp_cap,
        greedy: GreedyBudget {
            seed: a.seed,
            ..GreedyBudget::default()
        },
    };
    let mut out = io::stdout().lock();
    let mut code = 0;
    if !as_json {
        writeln!(out, "input\tresult\troute")?;
    }
    for item in items {
        let g = &item.graph;
        if !a.certificate {
            if g.order() > a.dp_cap {
                return Err(CliError::Usage(format!(
                    "{}: order {} exceeds the DP cap {}; use --certificate",
                    item.label,
                    g.order(),
                    a.dp_cap
                )));
            }
            let r = min_path_cover_dp(g, a.dp_cap)?;
            if as_json {
                writeln!(out, "{}", json!({ "input": item.label, "route": "dp", "result": r }))?;
            } else {
                writeln!(out, "{}\t{}\tdp", item.label, r.cover_number)?;
                for p in r.witness.iter().flatten() {
                    writeln!(out, "path\t{}", join(p))?;
                }
            }
            continue;
        }
        let v = is_k_path_coverable(g, a.params.k, &cfg)?;
        let result = match (&v.decision, &v.evidence) {
            (_, Evidence::Exact { result }) => result.cover_number.to_string(),
            (Decision::Coverable, _) => format!("≤ {}", v.k),
            (Decision::NotCoverable, Evidence::Separator { certificate }) => format!("≥ {}", certificate.bound),
            (Decision::NotCoverable, _) => format!("> {}", v.k),
            (Decision::Unknown, _) => "unknown".to_string(),
        };
        if v.decision == Decision::Unknown && a.strict {
            code = 3;
        }
        if as_json {
            writeln!(out, "{}", json!({ "input": item.label, "result": result, "verdict": v }))?;
        } else {
            writeln!(out, "{}\t{result}\t{}", item.label, v.route())?;
        }
    }
    Ok(code)
}

fn join(p: &[usize]) -> String {
    p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Args, Debug)]
pub struct ClosureArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    params: FamilyParams,
    /// Degree-sum threshold; defaults to n − k, the value that preserves
    /// coverability by k paths.
    #[arg(long)]
    threshold: Option<usize>,
}

pub fn closure(a: &ClosureArgs, as_json: bool) -> Result<u8, CliError> {
    let items = load(&a.source, &a.params)?;
    let mut out = io::stdout().lock();
    if !as_json {
        writeln!(out, "input\tthreshold\tadded\tcomplete\tgraph6")?;
    }
    for item in items {
        let t = a
            .threshold
            .unwrap_or_else(|| item.graph.order().saturating_sub(a.params.k));
        let r = k_closure(&item.graph, t);
        if as_json {
            writeln!(out, "{}", json!({ "input": item.label, "complete": r.closed_graph.is_complete(), "closure": r }))?;
        } else {
            writeln!(
                out,
                "{}\t{t}\t{}\t{}\t{}",
                item.label,
                r.added_edges.len(),
                r.closed_graph.is_complete(),
                to_graph6(&r.closed_graph)
            )?;
        }
    }
    Ok(0)
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Connected graphs only.
    #[arg(long)]
    connected: bool,
    /// Print only the number of graphs.
    #[arg(long)]
    count: bool,
}

pub fn enumerate(a: &EnumerateArgs, as_json: bool) -> Result<u8, CliError> {
    if a.n > ENUMERATE_CAP {
        return Err(CliError::Usage(format!("--n must be at most {ENUMERATE_CAP}")));
    }
    let graphs = if a.connected {
        connected_graphs(a.n)
    } else {
        all_graphs(a.n)
    };
    let mut out = io::stdout().lock();
    if a.count {
        if as_json {
            writeln!(out, "{}", json!({ "n": a.n, "connected": a.connected, "count": graphs.len() }))?;
        } else {
            writeln!(out, "{}", graphs.len())?;
        }
        return Ok(0);
    }
    for g in &graphs {
        writeln!(out, "{}", to_graph6(g))?;
    }
    Ok(0)
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Checks to run (repeatable or comma-separated). Family checks use
    /// --n/--k/--delta; `closure-stability` uses --max-n.
    #[arg(long = "check", value_delimiter = ',')]
    checks: Vec<String>,
    /// Shorthand for `--check closure-stability`.
    #[arg(long)]
    stability: bool,
    /// Classify every graph of a graph6 file.
    #[arg(long, conflicts_with = "stdin")]
    corpus: Option<PathBuf>,
    /// Classify every graph read from standard input.
    #[arg(long)]
    stdin: bool,
    #[command(flatten)]
    params: FamilyParams,
    /// Largest order for the exhaustive stability scan.
    #[arg(long, default_value_t = 7)]
    max_n: usize,
    /// Members or graphs to sample.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Enumerate every family member instead of sampling.
    #[arg(long)]
    exhaustive: bool,
    /// Residual target (∞-norm).
    #[arg(long, default_value_t = 1e-8)]
    tolerance: f64,
    /// Slack for non-strict eigenvalue inequalities.
    #[arg(long, default_value_t = 1e-6)]
    slack: f64,
    #[arg(long, default_value_t = DEFAULT_DP_CAP)]
    dp_cap: usize,
    /// Record wall-clock timings (reports then differ between runs).
    #[arg(long)]
    timings: bool,
    /// Do not treat unknown verdicts as an error.
    #[arg(long)]
    allow_unknown: bool,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Deletion sets of one size: all of them, or up to `samples` distinct
/// seeded ones.
fn family_members(p: Params, size: usize, exhaustive: bool, samples: usize, seed: u64) -> Result<Vec<EdgeList>, CliError> {
    if exhaustive {
        return Ok(enumerate_eprime(p, size).collect());
    }
    let m = p.e1_size() as u128;
    let available = (0..size as u128).fold(1u128, |acc, i| acc.saturating_mul(m - i) / (i + 1));
    let count = (samples as u128).min(available) as usize;
    Ok(sample_eprime(p, size, count, seed)?)
}

fn verify_report(a: &VerifyArgs, cfg: &VerifierConfig) -> Result<VerifierReport, CliError> {
    let mut checks: Vec<Check> = a
        .checks
        .iter()
        .map(|s| s.parse::<Check>())
        .collect::<Result<_, _>>()?;
    if a.stability {
        checks.push(Check::ClosureStability);
    }
    let corpus_mode = a.corpus.is_some() || a.stdin;
    if checks.is_empty() && !corpus_mode {
        return Err(CliError::Usage(
            "nothing to verify: give --check, --stability, --corpus or --stdin".into(),
        ));
    }
    let (k, delta) = (a.params.k, a.params.delta);
    let mut report = VerifierReport::new(cfg.clone());

    if let Some(path) = &a.corpus {
        let f = File::open(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        report.absorb(scan_corpus(BufReader::new(f), k, delta, cfg)?);
    } else if a.stdin {
        report.absorb(scan_corpus(io::stdin().lock(), k, delta, cfg)?);
    }

    let has = |c: &[Check]| c.iter().any(|x| checks.contains(x));
    if has(&[Check::EdgeCountBound, Check::CoverableUnlessB1]) && !corpus_mode {
        return Err(CliError::Usage(
            "edge-count-bound and coverable-unless-b1 are per-graph checks; give --corpus or --stdin".into(),
        ));
    }
    if has(&[Check::ClosureStability]) {
        report.checks.extend(stability_scan(a.max_n, &[k])?);
    }
    let family = [
        Check::B1QLower,
        Check::B1ExceptionCertified,
        Check::B2QLower,
        Check::B2QUpper,
        Check::XEntryBound,
        Check::ArgmaxOrderings,
        Check::ArgmaxEntryGap,
        Check::DenseCoverableOrInB,
    ];
    if !has(&family) {
        return Ok(report.finish());
    }
    let n = a.params.n()?;
    let p = Params::new(n, k, delta)?;
    let budget = p.b1_budget();

    let b1: Vec<EdgeList> = if has(&[Check::B1QLower, Check::B1ExceptionCertified]) {
        let mut v: Vec<EdgeList> = vec![EdgeList::new()];
        if a.exhaustive {
            for size in 1..=budget {
                v.extend(enumerate_eprime(p, size));
            }
        } else if budget > 0 {
            v.extend(family_members(p, budget, false, a.samples, cfg.seed)?);
        }
        v
    } else {
        Vec::new()
    };
    let b2 = if has(&[Check::B2QLower, Check::B2QUpper]) {
        family_members(p, budget + 1, a.exhaustive, a.samples, cfg.seed)?
    } else {
        Vec::new()
    };
    if !b1.is_empty() || !b2.is_empty() {
        report.members.extend(check_q_bounds(p, &b1, &b2, cfg)?);
    }

    if has(&[Check::XEntryBound]) {
        let mut sets = vec![EdgeList::new()];
        let half = a.samples / 2;
        if budget > 0 {
            sets.extend(family_members(p, budget, a.exhaustive, half, cfg.seed)?);
        }
        sets.extend(family_members(p, budget + 1, a.exhaustive, a.samples - half, cfg.seed)?);
        for e in sets {
            report.members.push(check_x_entry_bound(&build_member(p, &e)?, cfg)?);
        }
    }
    if has(&[Check::ArgmaxOrderings, Check::ArgmaxEntryGap]) {
        let r = check_argmax_entries(p, cfg)?;
        report.checks.extend(r.checks.iter().cloned());
        report.argmax = Some(r);
    }
    if has(&[Check::DenseCoverableOrInB]) {
        report.absorb(check_dense_graphs(n, k, delta, a.samples, cfg)?);
    }
    Ok(report.finish())
}

pub fn verify(a: &VerifyArgs, as_json: bool) -> Result<u8, CliError> {
    let cfg = VerifierConfig {
        seed: a.seed,
        tolerance: a.tolerance,
        slack: a.slack,
        cover: CoverConfig {
            dp_cap: a.dp_cap,
            ..CoverConfig::default()
        },
        timings: a.timings,
        allow_unknown: a.allow_unknown,
        ..VerifierConfig::default()
    };
    let report = verify_report(a, &cfg)?;
    let text = report.to_json();
    if let Some(path) = &a.out {
        fs::write(path, format!("{text}\n"))?;
    }
    let mut out = io::stdout().lock();
    if as_json && a.out.is_none() {
        writeln!(out, "{text}")?;
    } else {
        let s = &report.summary;
        writeln!(out, "check\tpass\tfail\tunknown\tnot_applicable\tsummary")?;
        for (c, t) in &s.checks {
            writeln!(
                out,
                "{c}\t{}\t{}\t{}\t{}\t{}/{} pass",
                t.pass,
                t.fail,
                t.unknown,
                t.not_applicable,
                t.pass,
                t.applicable()
            )?;
        }
        writeln!(out, "records\t{}", s.records)?;
        writeln!(out, "members\t{}", s.members)?;
        writeln!(out, "skipped\t{}", s.skipped)?;
        for sk in &report.skipped {
            writeln!(out, "skip\tline {}\t{}", sk.line, sk.reason)?;
        }
        writeln!(out, "theorem_violations\t{}", s.theorem_violations)?;
        if let Some(am) = &report.argmax {
            writeln!(
                out,
                "argmax\t{:?}\tq={:.9}\tedges_inside_y={}\tties={}",
                am.argmax.as_slice(),
                am.q,
                am.edges_inside_y,
                am.ties
            )?;
        }
    }
    Ok(report.exit_code() as u8)
}
