//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criterion 2 (the n = 9 sweep) is opt-in: set `CYCLAB_ACCEPTANCE_FULL=1`
//! or pass `--include-ignored`.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use cyclability::closure::{bondy_chvatal_closure, bondy_chvatal_closure_shuffled, is_closed};
use cyclability::constructions::{build, route_ordered_cycle_bipartite, ConstructionSpec};
use cyclability::cycles::{self, Budget};
use cyclability::enumerate::{enumerate_graphs, GRAPH_COUNTS};
use cyclability::explorer::compute_fg_from;
use cyclability::invariants::{independence_number, sigma_k, vertex_connectivity};
use cyclability::theorems::{verify_corpus, CheckConfig, ClaimId, CorpusReport};
use cyclability::Graph;

use common::{brute_connectivity, brute_independence, labelled_graphs, naive_circumference};

enum Verdict {
    Pass,
    Fail,
    Skip,
    NotApplicable,
}

struct Outcome {
    verdict: Verdict,
    detail: Vec<String>,
}

impl Outcome {
    fn new(ok: bool, detail: Vec<String>) -> Self {
        Outcome {
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            detail,
        }
    }
}

fn corpus(n_max: usize) -> (Vec<Graph>, Vec<String>) {
    let mut graphs = Vec::new();
    let mut notes = Vec::new();
    for n in 1..=n_max {
        let gs = enumerate_graphs(n).expect("within the built-in limit");
        if gs.len() != GRAPH_COUNTS[n] {
            notes.push(format!("n={n}: enumerated {} graphs, expected {}", gs.len(), GRAPH_COUNTS[n]));
        }
        graphs.extend(gs);
    }
    (graphs, notes)
}

fn report_lines(report: &CorpusReport) -> Vec<String> {
    report
        .claims
        .iter()
        .map(|(id, s)| {
            let first = s
                .first_counterexample
                .as_ref()
                .map(|c| format!(" first={} {}", c.graph6, c.bindings))
                .unwrap_or_default();
            format!(
                "{:<20} checked={:<7} vacuous={:<7} violated={}{}",
                id.name(),
                s.checked,
                s.vacuous,
                s.violated,
                first
            )
        })
        .collect()
}

fn sweep(n_max: usize, claims: &[ClaimId]) -> Outcome {
    let (graphs, mut detail) = corpus(n_max);
    let expected: usize = GRAPH_COUNTS[1..=n_max].iter().sum();
    detail.push(format!("{} graphs on 1..={n_max} vertices (expected {expected})", graphs.len()));
    let report = verify_corpus(&graphs, claims, &CheckConfig::default()).expect("within budget");
    detail.extend(report_lines(&report));
    Outcome::new(graphs.len() == expected && report.total_violations() == 0, detail)
}

fn criterion_1() -> Outcome {
    sweep(8, &ClaimId::ALL)
}

fn criterion_2() -> Outcome {
    let claims: Vec<ClaimId> = ClaimId::ALL.into_iter().filter(|c| !c.is_ordered()).collect();
    let gs = enumerate_graphs(9).expect("within the built-in limit");
    let mut detail = vec![format!("{} graphs on 9 vertices (expected {})", gs.len(), GRAPH_COUNTS[9])];
    let report = verify_corpus(&gs, &claims, &CheckConfig::default()).expect("within budget");
    detail.extend(report_lines(&report));
    Outcome::new(gs.len() == GRAPH_COUNTS[9] && report.total_violations() == 0, detail)
}

fn criterion_3() -> Outcome {
    let budget = Budget::default();
    let mut bad = Vec::new();
    let mut cases = 0;
    for n in 4..=14usize {
        for k in (2..).take_while(|k| k * k <= n + 3) {
            cases += 1;
            let g = build(&ConstructionSpec::CompleteBipartite { k, n }).unwrap();
            let cyclable = cycles::is_k_cyclable(&g, k, &budget).unwrap().holds;
            let (c, _) = cycles::circumference(&g, &budget).unwrap();
            if !cyclable || c != 2 * k {
                bad.push(format!("K_{{{k},{}}}: k-cyclable={cyclable}, c={c}", n - k));
            }
        }
    }
    let mut detail = vec![format!("{cases} (n, k) pairs")];
    let ok = bad.is_empty();
    detail.extend(bad);
    Outcome::new(ok, detail)
}

fn criterion_4() -> Outcome {
    let budget = Budget::default();
    let mut bad = Vec::new();
    let mut shapes = 0;
    for n in 4..=12usize {
        for k in (2..=4).filter(|k| 2 * k <= n) {
            shapes += 1;
            let g = build(&ConstructionSpec::CompleteBipartite { k, n }).unwrap();
            if !cycles::is_k_ordered(&g, k, &budget).unwrap().holds {
                bad.push(format!("K_{{{k},{}}} is not {k}-ordered", n - k));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut mismatches = 0;
    for _ in 0..1000 {
        let n = rng.random_range(4..=12usize);
        let k = rng.random_range(2..=(n / 2).min(5));
        let len = rng.random_range(2..=k);
        let mut verts: Vec<usize> = (0..n).collect();
        verts.shuffle(&mut rng);
        let seq = &verts[..len];
        let g = Graph::complete_bipartite(k, n - k).unwrap();
        let ok = match route_ordered_cycle_bipartite(k, n, seq) {
            Ok(cert) => {
                cert.validate(&g).is_ok()
                    && cert.visits_in_order(seq)
                    && cycles::has_ordered_cycle(&g, seq, &budget).unwrap().holds
            }
            Err(_) => false,
        };
        if !ok {
            mismatches += 1;
            if mismatches <= 5 {
                bad.push(format!("routing failed: k={k}, n={n}, T={seq:?}"));
            }
        }
    }
    let mut detail = vec![format!(
        "{shapes} bipartite shapes checked k-ordered; 1000 routed sequences, {mismatches} mismatches"
    )];
    let ok = bad.is_empty();
    detail.extend(bad);
    Outcome::new(ok, detail)
}

fn criterion_5() -> Outcome {
    let budget = Budget::default();
    let mut bad = Vec::new();
    let mut detail = Vec::new();
    for k in [2usize, 3] {
        let lo = 2 * (k * k + k);
        for n in lo..=lo + 6 {
            let g = build(&ConstructionSpec::ExtremalNonham { n, k }).unwrap();
            let m = g.edge_count();
            let want_m = (n - k) * (n - k - 1) / 2 + k * k;
            let kappa = vertex_connectivity(&g);
            let ham = cycles::is_hamiltonian(&g, &budget).map(|h| h.0);
            let closed = is_closed(&g);
            let sigma = sigma_k(&g, k + 1).unwrap();
            let mut aug_fail = Vec::new();
            for (u, v) in g.non_edges() {
                let h = g.with_edge(u, v).unwrap();
                match cycles::is_hamiltonian(&h, &budget) {
                    Ok((true, Some(cert))) if cert.validate(&h).is_ok() => {}
                    other => aug_fail.push(format!("+{u}{v}: {other:?}")),
                }
            }
            let ok = m == want_m
                && kappa >= k
                && ham == Ok(false)
                && closed
                && sigma == Some(n + k * k - k - 1)
                && aug_fail.is_empty();
            if !ok {
                bad.push(format!(
                    "E({n},{k}): m={m} (want {want_m}), kappa={kappa}, ham={ham:?}, closed={closed}, sigma={sigma:?}, failed augmentations={aug_fail:?}"
                ));
            }
        }
        detail.push(format!("k={k}: n={lo}..={}", lo + 6));
    }
    let ok = bad.is_empty();
    detail.extend(bad);
    Outcome::new(ok, detail)
}

fn criterion_6() -> Outcome {
    let budget = Budget::default();
    let mut detail = Vec::new();
    let mut ok = true;
    for n in 3..=9usize {
        let bound = (n - 1) * (n - 2) / 2 + 1;
        let gs = enumerate_graphs(n).expect("within the built-in limit");
        let dense: Vec<&Graph> = gs.iter().filter(|g| g.edge_count() > bound).collect();
        let nonham = dense
            .iter()
            .filter(|g| !cycles::is_hamiltonian(g, &budget).unwrap().0)
            .count();
        ok &= nonham == 0 && gs.len() == GRAPH_COUNTS[n];
        detail.push(format!("n={n}: {} graphs, {} above the bound, {nonham} nonhamiltonian", gs.len(), dense.len()));
    }
    Outcome::new(ok, detail)
}

fn criterion_7() -> Outcome {
    let budget = Budget::default();
    let p = Graph::petersen();
    let kappa = vertex_connectivity(&p);
    let alpha = independence_number(&p).size;
    let (c, cert) = cycles::circumference(&p, &budget).unwrap();
    let hypo = cycles::is_hypohamiltonian(&p, &budget).unwrap();
    let nine = cycles::is_k_cyclable(&p, 9, &budget).unwrap().holds;
    let ham = cycles::is_hamiltonian(&p, &budget).unwrap().0;
    let oracle = (brute_connectivity(&p), brute_independence(&p), naive_circumference(&p));
    // K10 refutes k = 10, the Petersen graph refutes k = 9
    let fg = compute_fg_from(10, &[p.clone(), Graph::complete(10).unwrap()], &budget).unwrap();
    let f10_at_most_8 = fg.rows[9 - 2..].iter().all(|r| !r.all_c_gt_k)
        && fg.rows[9 - 2].witness_c_gt_k.as_deref() == Some(cyclability::write_graph6(&p).as_str());
    let ok = (kappa, alpha, c) == (3, 4, 9)
        && oracle == (kappa, alpha, c)
        && cert.is_some_and(|x| x.validate(&p).is_ok())
        && hypo
        && nine
        && !ham
        && f10_at_most_8;
    Outcome::new(
        ok,
        vec![
            format!("kappa={kappa} alpha={alpha} c={c} (oracles: {oracle:?})"),
            format!("hypohamiltonian={hypo} 9-cyclable={nine} hamiltonian={ham}"),
            format!("f(10) <= 8 certified by the Petersen graph (K10 refutes k = 10): {f10_at_most_8}"),
        ],
    )
}

fn criterion_8() -> Outcome {
    let budget = Budget::default();
    let mut detail = Vec::new();
    let mut ok = true;
    for n in 3..=8usize {
        let gs = enumerate_graphs(n).expect("within the built-in limit");
        let r = compute_fg_from(n, &gs, &budget).expect("within budget");
        let sqrt_bound = (2..).take_while(|k| k * k <= n + 3).last().unwrap_or(1);
        let g_ok = r.g_n.is_some_and(|g| g >= sqrt_bound);
        let mut line = format!("n={n}: f={:?} g={:?}; g >= {sqrt_bound}: {g_ok}", r.f_n, r.g_n);
        ok &= g_ok;
        // the second regime applies when some k >= 2 has 4k + 4 <= 3n
        if 12 <= 3 * n {
            let lower = 3 * n / 4 - 1;
            let upper = n - 2;
            let lo_ok = r.f_n.is_some_and(|f| f >= lower);
            let up_ok = r.f_n.is_some_and(|f| f <= upper);
            ok &= lo_ok && up_ok;
            line.push_str(&format!("; f >= {lower}: {lo_ok}; f <= {upper}: {up_ok}"));
        }
        detail.push(line);
    }
    Outcome::new(ok, detail)
}

fn criterion_9() -> Outcome {
    let budget = Budget::default();
    let mut mismatches = Vec::new();
    let mut total = 0;
    let mut check = |g: &Graph| {
        total += 1;
        let dp = cycles::circumference(g, &budget).unwrap().0;
        let naive = naive_circumference(g);
        if dp != naive && mismatches.len() < 5 {
            mismatches.push(format!("{}: dp={dp} naive={naive}", cyclability::write_graph6(g)));
        }
    };
    for n in 0..=6 {
        labelled_graphs(n).for_each(|g| check(&g));
    }
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..500 {
        let n = rng.random_range(7..=8);
        let g = Graph::gnp(n, rng.random_range(0.2..0.9), &mut rng).unwrap();
        check(&g);
    }
    let mut closure_bad = 0;
    for _ in 0..200 {
        let n = rng.random_range(1..=30);
        let g = Graph::gnp(n, rng.random_range(0.1..0.9), &mut rng).unwrap();
        let c = bondy_chvatal_closure(&g);
        for _ in 0..100 {
            if bondy_chvatal_closure_shuffled(&g, &mut rng) != c {
                closure_bad += 1;
            }
        }
    }
    let mut detail = vec![
        format!("circumference: {total} graphs, {} mismatches", mismatches.len()),
        format!("closure: 200 graphs x 100 orders, {closure_bad} differing fixed points"),
    ];
    let ok = mismatches.is_empty() && closure_bad == 0;
    detail.extend(mismatches);
    Outcome::new(ok, detail)
}

fn criterion_10() -> Outcome {
    Outcome {
        verdict: Verdict::NotApplicable,
        detail: vec!["asymptotic statements are not checkable at this scale; finite consistency is covered by criteria 3 and 8".into()],
    }
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let full = std::env::var_os("CYCLAB_ACCEPTANCE_FULL").is_some()
        || std::env::args().any(|a| a == "--include-ignored" || a == "--ignored");
    let criteria: [Criterion; 10] = [
        (1, "exhaustive claim sweep, n <= 8", criterion_1),
        (2, "extended sweep, n = 9, no ordered premises", criterion_2),
        (3, "K_{k,n-k} is k-cyclable with c = 2k", criterion_3),
        (4, "K_{k,n-k} is k-ordered; routing certificates", criterion_4),
        (5, "extremal nonhamiltonian structure", criterion_5),
        (6, "classical edge bound, n <= 9", criterion_6),
        (7, "Petersen certificate", criterion_7),
        (8, "f(n) and g(n) tables, n <= 8", criterion_8),
        (9, "oracle equivalence and closure order-invariance", criterion_9),
        (10, "asymptotic statements", criterion_10),
    ];
    let mut failed = Vec::new();
    for (id, title, run) in criteria {
        let start = Instant::now();
        let outcome = if id == 2 && !full {
            Outcome {
                verdict: Verdict::Skip,
                detail: vec!["opt-in: set CYCLAB_ACCEPTANCE_FULL=1".into()],
            }
        } else {
            run()
        };
        let tag = match outcome.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => {
                failed.push(id);
                "FAIL"
            }
            Verdict::Skip => "SKIP",
            Verdict::NotApplicable => "N/A ",
        };
        println!("{tag} criterion {id:>2}: {title} ({:.1}s)", start.elapsed().as_secs_f64());
        for line in outcome.detail {
            println!("       {line}");
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
