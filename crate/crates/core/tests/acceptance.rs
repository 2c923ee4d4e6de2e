//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use qcover_core::enumerate::{all_graphs, connected_graphs};
use qcover_core::extremal::{build_b, build_member, enumerate_eprime, sample_eprime, thresholds, Params};
use qcover_core::pathcover::{min_path_cover_brute, min_path_cover_dp, validate_witness, DEFAULT_DP_CAP};
use qcover_core::spectral::{edge_count_bound, q_index};
use qcover_core::verifier::{
    check_argmax_entries, check_dense_graphs, check_q_bounds, check_x_entry_bound, stability_scan, Check, MemberOutcome,
    Outcome, VerifierConfig, VerifierReport,
};
use qcover_core::{EdgeList, Graph, SpectralConfig64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 7;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn member_tally(members: &[MemberOutcome], check: Check) -> (usize, usize, f64) {
    let mut pass = 0;
    let mut total = 0;
    let mut worst = f64::INFINITY;
    for c in members.iter().flat_map(|m| &m.checks).filter(|c| c.check == check) {
        total += 1;
        if c.outcome == Outcome::Pass {
            pass += 1;
        }
        if let Some(m) = c.margin {
            worst = worst.min(m);
        }
    }
    (pass, total, worst)
}

fn regular_graphs() -> Verdict {
    let cfg = SpectralConfig64::default();
    let mut worst_err: f64 = 0.0;
    let mut worst_res: f64 = 0.0;
    for n in 3..=50 {
        for (g, want) in [(Graph::complete(n), 2.0 * (n as f64 - 1.0)), (Graph::cycle(n).unwrap(), 4.0)] {
            let r = q_index(&g, &cfg).unwrap();
            worst_err = worst_err.max((r.value - want).abs());
            worst_res = worst_res.max(r.residual);
        }
    }
    verdict(
        worst_err <= 1e-9 && worst_res <= 1e-8,
        format!("max |q − expected| = {worst_err:.2e}, max residual = {worst_res:.2e}"),
    )
}

fn edge_count_bound_check() -> Verdict {
    let cfg = SpectralConfig64::default();
    let mut checked = 0;
    let mut failed = 0;
    let mut min_margin = f64::INFINITY;
    let mut tally = |g: &Graph| {
        let b = edge_count_bound(g, &cfg).unwrap();
        checked += 1;
        min_margin = min_margin.min(b.bound - b.q);
        if b.q > b.bound + 1e-6 {
            failed += 1;
        }
    };
    let census = connected_graphs(7).len();
    for n in 2..=7 {
        connected_graphs(n).iter().for_each(&mut tally);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=30);
        let p: f64 = rng.gen();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        tally(&g);
    }
    verdict(
        failed == 0 && census == 853,
        format!("{checked} graphs, {failed} violations, min margin {min_margin:.3e}, connected n=7 census {census}"),
    )
}

fn cover_oracles() -> Verdict {
    let mut checked = 0;
    let mut mismatches = 0;
    let mut compare = |g: &Graph| {
        let dp = min_path_cover_dp(g, DEFAULT_DP_CAP).unwrap();
        let brute = min_path_cover_brute(g).unwrap();
        let ok = dp.cover_number == brute.cover_number
            && validate_witness(g, dp.witness.as_ref().unwrap()).is_ok()
            && validate_witness(g, brute.witness.as_ref().unwrap()).is_ok();
        checked += 1;
        if !ok {
            mismatches += 1;
        }
    };
    for n in 1..=7 {
        connected_graphs(n).iter().for_each(&mut compare);
    }
    for n in 1..=5 {
        all_graphs(n).iter().for_each(&mut compare);
    }
    verdict(mismatches == 0, format!("{checked} graphs compared, {mismatches} mismatches"))
}

fn stability() -> Verdict {
    let results = stability_scan(7, &[1, 2]).unwrap();
    let bad: Vec<_> = results.iter().filter(|c| c.outcome != Outcome::Pass).collect();
    verdict(bad.is_empty(), format!("{} (n, k) cases, {} with discrepancies", results.len(), bad.len()))
}

fn b1_members_245() -> Vec<EdgeList> {
    let p = Params::new(245, 1, 2).unwrap();
    enumerate_eprime(p, 0).chain(enumerate_eprime(p, 1)).collect()
}

fn b1_report(cfg: &VerifierConfig) -> VerifierReport {
    let p = Params::new(245, 1, 2).unwrap();
    let mut r = VerifierReport::new(cfg.clone());
    r.members = check_q_bounds(p, &b1_members_245(), &[], cfg).unwrap();
    r.finish()
}

fn b2_report(cfg: &VerifierConfig) -> VerifierReport {
    let p = Params::new(245, 1, 2).unwrap();
    let b2 = sample_eprime(p, 2, 1000, cfg.seed).unwrap();
    let mut r = VerifierReport::new(cfg.clone());
    r.members = check_q_bounds(p, &[], &b2, cfg).unwrap();
    r.finish()
}

struct ArgmaxRun {
    report: VerifierReport,
    json: String,
    enumerated: usize,
    summary: String,
}

fn argmax_report(cfg: &VerifierConfig) -> ArgmaxRun {
    let a = check_argmax_entries(Params::new(30, 1, 2).unwrap(), cfg).unwrap();
    let mut report = VerifierReport::new(cfg.clone());
    report.checks = a.checks.clone();
    let report = report.finish();
    let json = serde_json::to_string(&a).unwrap() + &report.to_json();
    let summary = format!(
        "enumerated {}, argmax E′ = {:?}, q = {:.9}, edges in Y = {}, ties = {}",
        a.enumerated,
        a.argmax.as_slice(),
        a.q,
        a.edges_inside_y,
        a.ties
    );
    ArgmaxRun {
        report,
        json,
        enumerated: a.enumerated,
        summary,
    }
}

fn check_tally_line(r: &VerifierReport) -> String {
    r.summary
        .checks
        .iter()
        .map(|(c, t)| format!("{c}: {}/{} pass", t.pass, t.applicable()))
        .collect::<Vec<_>>()
        .join(", ")
}

fn main() {
    let cfg = VerifierConfig {
        seed: SEED,
        ..VerifierConfig::default()
    };
    let mut results: Vec<(usize, &str, Verdict, Duration)> = Vec::new();
    let mut run = |id: usize, name: &'static str, f: &mut dyn FnMut() -> Verdict| {
        let t = Instant::now();
        let v = f();
        let dt = t.elapsed();
        println!(
            "criterion {id:>2} [{name}]: {} — {} ({:.1}s)",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail,
            dt.as_secs_f64()
        );
        results.push((id, name, v, dt));
    };

    run(1, "regular-graph q-index", &mut regular_graphs);
    run(2, "edge-count bound", &mut edge_count_bound_check);
    run(3, "path-cover oracle equivalence", &mut cover_oracles);
    run(4, "closure stability", &mut stability);

    let mut b1 = VerifierReport::new(cfg.clone());
    run(5, "first family reaches threshold (n=245)", &mut || {
        b1 = b1_report(&cfg);
        let (pass, total, worst) = member_tally(&b1.members, Check::B1QLower);
        verdict(
            pass == total && total == 29_162,
            format!("{pass}/{total} members, min q − 482 = {worst:.6e}"),
        )
    });

    let mut b2 = VerifierReport::new(cfg.clone());
    run(6, "second family bracket 481 < q < 482 (n=245)", &mut || {
        b2 = b2_report(&cfg);
        let in_bracket = b2.members.iter().filter(|m| m.q > 481.0 && m.q < 482.0).count();
        let (lo, _, lo_m) = member_tally(&b2.members, Check::B2QLower);
        let (hi, _, hi_m) = member_tally(&b2.members, Check::B2QUpper);
        verdict(
            in_bracket == 1000 && lo == 1000 && hi == 1000,
            format!("{in_bracket}/1000 in bracket, min q − 481 = {lo_m:.6}, min 482 − q = {hi_m:.6}"),
        )
    });

    run(7, "first-family exceptions are genuine", &mut || {
        let (pass, total, _) = member_tally(&b1.members, Check::B1ExceptionCertified);
        verdict(
            pass == total && total == 29_162,
            format!("{pass}/{total} members with separator Y giving bound 2, δ(G) ≥ 2, q ≥ 482"),
        )
    });

    run(8, "small-scale exact cover numbers", &mut || {
        let covers: Vec<usize> = (9..=18)
            .map(|n| min_path_cover_dp(&build_b(n, 1, 2).unwrap().graph, DEFAULT_DP_CAP).unwrap().cover_number)
            .collect();
        let b12 = covers[12 - 9];
        verdict(
            b12 == 2 && covers.iter().all(|&c| c == 2),
            format!("B(12,1,2) → {b12}; n = 9..18 → {covers:?}"),
        )
    });

    run(9, "X-entry bound", &mut || {
        let p = Params::new(245, 1, 2).unwrap();
        let mut instances = vec![build_b(245, 1, 2).unwrap(), build_b(30, 1, 2).unwrap()];
        for e in sample_eprime(p, 1, 50, SEED).unwrap() {
            instances.push(build_member(p, &e).unwrap());
        }
        for e in sample_eprime(p, 2, 50, SEED).unwrap() {
            instances.push(build_member(p, &e).unwrap());
        }
        let outs: Vec<MemberOutcome> = instances.iter().map(|i| check_x_entry_bound(i, &cfg).unwrap()).collect();
        let (pass, total, worst) = member_tally(&outs, Check::XEntryBound);
        verdict(pass == total && total == 102, format!("{pass}/{total} graphs, min margin {worst:.3e}"))
    });

    let mut argmax = None;
    run(10, "argmax entry orderings and gap (n=30)", &mut || {
        let argmax = argmax.insert(argmax_report(&cfg));
        let s = &argmax.report.summary;
        let orderings = s.tally(Check::ArgmaxOrderings);
        let ok = s.failures() == 0
            && orderings.pass >= 1
            && orderings.pass == orderings.applicable()
            && s.tally(Check::ArgmaxEntryGap).pass == 1
            && argmax.enumerated == 61_425;
        verdict(ok, format!("{}; {}", argmax.summary, check_tally_line(&argmax.report)))
    });

    let mut dense = VerifierReport::new(cfg.clone());
    run(11, "dense graphs coverable or inside B (n=29)", &mut || {
        dense = check_dense_graphs(29, 1, 2, 200, &cfg).unwrap();
        let t = dense.summary.tally(Check::DenseCoverableOrInB);
        let routes = ["closure", "witness", "separator", "dp", "none"]
            .iter()
            .map(|r| format!("{r}={}", dense.records.iter().filter(|x| x.route == *r).count()))
            .collect::<Vec<_>>()
            .join(" ");
        let thr = thresholds(29, 1, 2).edge_threshold;
        let hyp = dense
            .records
            .iter()
            .all(|r| r.edges as i64 > thr && r.hypotheses.min_degree);
        verdict(
            t.pass == 200 && t.fail == 0 && t.unknown == 0 && hyp,
            format!("{}/200 pass, {} unknown; routes {routes}", t.pass, t.unknown),
        )
    });

    run(12, "determinism", &mut || {
        let same = [
            b1.to_json() == b1_report(&cfg).to_json(),
            b2.to_json() == b2_report(&cfg).to_json(),
            argmax.as_ref().map(|a| a.json.clone()) == Some(argmax_report(&cfg).json),
            dense.to_json() == check_dense_graphs(29, 1, 2, 200, &cfg).unwrap().to_json(),
        ];
        verdict(same.iter().all(|&s| s), format!("identical reports for criteria 5, 6, 10, 11: {same:?}"))
    });

    let failed: Vec<usize> = results.iter().filter(|r| !r.2.pass).map(|r| r.0).collect();
    let total: f64 = results.iter().map(|r| r.3.as_secs_f64()).sum();
    println!(
        "acceptance: {}/{} criteria pass in {total:.1}s",
        results.len() - failed.len(),
        results.len()
    );
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
