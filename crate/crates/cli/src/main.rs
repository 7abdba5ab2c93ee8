//! `cyclab`: batch front end for the cyclability toolkit.
//!
//! Exit status is 0 on success, 1 when a claim is violated, and 2 for usage,
//! input and budget errors.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use cyclability::constructions::{build, route_ordered_cycle_bipartite, ConstructionSpec};
use cyclability::cycles::Budget;
use cyclability::explorer::{compute_fg, max_edges_nonhamiltonian, CorpusSource};
use cyclability::graph6::read_graph6;
use cyclability::invariants::InvariantReport;
use cyclability::theorems::{
    check_all, check_claim, parse_claim_list, verify_corpus, Bindings, CheckConfig, ClaimCheck, ClaimId,
    CorpusReport, Parameter,
};
use cyclability::{parse_graph6, write_graph6, Graph};

#[derive(Debug, Parser)]
#[command(name = "cyclab", version, about = "Exact cycle and connectivity queries over small graphs")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct RunConfig {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
    /// Largest 2-core component solved exactly.
    #[arg(long, global = true, env = "CYCLAB_MAX_N", value_parser = clap::value_parser!(u32).range(1..))]
    max_n: Option<u32>,
    /// Wall-clock limit per graph query, in milliseconds.
    #[arg(long, global = true, env = "CYCLAB_TIME_LIMIT_MS", value_parser = clap::value_parser!(u64).range(1..))]
    time_limit_ms: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariant reports for graph6 records (arguments, files or stdin).
    Invariants {
        /// graph6 strings.
        graphs: Vec<String>,
        /// graph6 files, one record per line.
        #[arg(long = "input", short)]
        inputs: Vec<PathBuf>,
        /// σ_k values to include.
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        sigma: Vec<usize>,
    },
    /// Evaluates claims on one graph.
    Check {
        graph: String,
        #[arg(long, default_value = "all")]
        claims: String,
        /// Single value for the claim parameter (k or m); all values otherwise.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 5)]
        ordered_k_max: usize,
    },
    /// Evaluates claims over a corpus.
    Verify {
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value = "builtin")]
        source: Source,
        #[arg(long, default_value_t = 5)]
        ordered_k_max: usize,
    },
    /// The f(n) and g(n) table for one order.
    Explore {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "builtin")]
        source: Source,
    },
    /// Most edges in a nonhamiltonian k-connected graph of order n.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "builtin")]
        source: Source,
    },
    /// Builds a named construction, e.g. `extremal-nonham 12 2`.
    Construct {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        spec: Vec<String>,
    },
    /// Routes an ordered cycle through terminals of K_{k,n-k}.
    Route {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(required = true, value_delimiter = ',', num_args = 1..)]
        terminals: Vec<usize>,
    },
}

/// `builtin` or a graph6 file path.
#[derive(Debug, Clone)]
struct Source(CorpusSource);

impl FromStr for Source {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err("empty source".into());
        }
        Ok(Source(if s == "builtin" {
            CorpusSource::default()
        } else {
            CorpusSource::File(PathBuf::from(s))
        }))
    }
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

enum Outcome {
    Clean,
    Violation,
}

impl RunConfig {
    fn budget(&self) -> Budget {
        let mut b = Budget::default();
        if let Some(n) = self.max_n {
            b = b.with_max_vertices(n as usize);
        }
        if let Some(ms) = self.time_limit_ms {
            b = b.with_time_limit(Duration::from_millis(ms));
        }
        b
    }

    fn format(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.run.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t as usize).build_global() {
            eprintln!("cyclab: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = String::new();
    let result = run(&cli, &mut out);
    let mut stdout = io::stdout().lock();
    if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    match result {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("cyclab: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut String) -> Result<Outcome, Failure> {
    let budget = cli.run.budget();
    match &cli.command {
        Command::Invariants { graphs, inputs, sigma } => {
            let graphs = collect_graphs(graphs, inputs)?;
            let reports = graphs
                .par_iter()
                .map(|g| InvariantReport::compute(g, sigma, &budget).map_err(|e| format!("{}: {e}", write_graph6(g))))
                .collect::<Result<Vec<_>, _>>()?;
            emit_invariants(&reports, cli.run.format(Format::Text), out)?;
            Ok(Outcome::Clean)
        }
        Command::Check {
            graph,
            claims,
            k,
            ordered_k_max,
        } => {
            let g = parse_graph6(graph)?;
            let claims = parse_claim_list(claims)?;
            let config = CheckConfig {
                budget,
                ordered_k_max: *ordered_k_max,
            };
            let checks = match k {
                None => check_all(&g, &claims, &config)?,
                Some(k) => claims
                    .iter()
                    .map(|&c| check_claim(&g, c, bind(c, *k), &config))
                    .collect::<Result<Vec<_>, _>>()?,
            };
            emit_checks(&checks, cli.run.format(Format::Text), out)?;
            Ok(if checks.iter().any(ClaimCheck::violated) {
                Outcome::Violation
            } else {
                Outcome::Clean
            })
        }
        Command::Verify {
            claims,
            n_max,
            source,
            ordered_k_max,
        } => {
            let claims = parse_claim_list(claims)?;
            let graphs = source.0.graphs_up_to(*n_max)?;
            let config = CheckConfig {
                budget,
                ordered_k_max: *ordered_k_max,
            };
            let report = verify_corpus(&graphs, &claims, &config)?;
            emit_report(&report, cli.run.format(Format::Text), out)?;
            Ok(if report.total_violations() > 0 {
                Outcome::Violation
            } else {
                Outcome::Clean
            })
        }
        Command::Explore { n, source } => {
            let r = compute_fg(*n, &source.0, &budget)?;
            match cli.run.format(Format::Csv) {
                Format::Csv => out.push_str(&r.to_csv()),
                Format::Json => push_json(out, &serde_json::to_value(&r)?)?,
                Format::Text => {
                    let opt = |v: Option<usize>| v.map_or("undefined".to_string(), |x| x.to_string());
                    writeln!(out, "n={} graphs={} skipped={} f={} g={}", r.n, r.graphs, r.skipped, opt(r.f_n), opt(r.g_n))?;
                    for row in &r.rows {
                        writeln!(
                            out,
                            "k={:<3} cyclable={:<8} c>k={:<5} c>=2k={:<5}{}",
                            row.k,
                            row.cyclable_graphs,
                            row.all_c_gt_k,
                            row.all_c_ge_2k,
                            if row.vacuous { " (vacuous)" } else { "" }
                        )?;
                    }
                }
            }
            Ok(Outcome::Clean)
        }
        Command::Extremal { n, k, source } => {
            let r = max_edges_nonhamiltonian(*n, *k, &source.0, &budget)?;
            match cli.run.format(Format::Text) {
                Format::Json => push_json(out, &serde_json::to_value(&r)?)?,
                Format::Csv => {
                    writeln!(out, "n,k,max_edges,witness")?;
                    let m = r.max_edges.map(|m| m.to_string()).unwrap_or_default();
                    if r.witnesses.is_empty() {
                        writeln!(out, "{},{},{m},", r.n, r.k)?;
                    }
                    for w in &r.witnesses {
                        writeln!(out, "{},{},{m},{w}", r.n, r.k)?;
                    }
                }
                Format::Text => {
                    match r.max_edges {
                        Some(m) => writeln!(out, "n={} k={} max_edges={m} witnesses={}", r.n, r.k, r.witnesses.len())?,
                        None => writeln!(out, "n={} k={} no nonhamiltonian {}-connected graph", r.n, r.k, r.k)?,
                    }
                    for w in &r.witnesses {
                        writeln!(out, "{w}")?;
                    }
                }
            }
            Ok(Outcome::Clean)
        }
        Command::Construct { spec } => {
            let spec: ConstructionSpec = spec.join(" ").parse()?;
            let g = build(&spec)?;
            let g6 = write_graph6(&g);
            match cli.run.format(Format::Text) {
                Format::Text => writeln!(out, "{g6}")?,
                Format::Csv => writeln!(out, "spec,n,m,graph6\n{spec},{},{},{g6}", g.order(), g.edge_count())?,
                Format::Json => push_json(
                    out,
                    &json!({"spec": spec.to_string(), "n": g.order(), "m": g.edge_count(), "graph6": g6}),
                )?,
            }
            Ok(Outcome::Clean)
        }
        Command::Route { k, n, terminals } => {
            let cert = route_ordered_cycle_bipartite(*k, *n, terminals)?;
            let cycle = cert.vertices();
            let join = |sep: &str| cycle.iter().map(usize::to_string).collect::<Vec<_>>().join(sep);
            match cli.run.format(Format::Text) {
                Format::Text => writeln!(out, "{}", join(" "))?,
                Format::Csv => writeln!(out, "{}", join(","))?,
                Format::Json => push_json(out, &json!({"k": k, "n": n, "terminals": terminals, "cycle": cycle}))?,
            }
            Ok(Outcome::Clean)
        }
    }
}

fn bind(claim: ClaimId, value: usize) -> Bindings {
    match claim.parameter() {
        Parameter::None => Bindings::default(),
        Parameter::K => Bindings::k(value),
        Parameter::M => Bindings::m(value),
    }
}

fn collect_graphs(args: &[String], inputs: &[PathBuf]) -> Result<Vec<Graph>, Failure> {
    let mut graphs = args.iter().map(|s| parse_graph6(s)).collect::<Result<Vec<_>, _>>()?;
    for path in inputs {
        let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
        for g in read_graph6(BufReader::new(file)) {
            graphs.push(g.map_err(|e| format!("{}: {e}", path.display()))?);
        }
    }
    if args.is_empty() && inputs.is_empty() {
        for g in read_graph6(io::stdin().lock()) {
            graphs.push(g.map_err(|e| format!("stdin: {e}"))?);
        }
    }
    Ok(graphs)
}

fn push_json(out: &mut String, value: &serde_json::Value) -> Result<(), Failure> {
    out.push_str(&serde_json::to_string_pretty(value)?);
    out.push('\n');
    Ok(())
}

fn emit_invariants(reports: &[InvariantReport], format: Format, out: &mut String) -> Result<(), Failure> {
    match format {
        Format::Json => push_json(out, &serde_json::to_value(reports)?)?,
        Format::Csv => {
            writeln!(out, "graph6,n,m,min_degree,connectivity,independence,circumference,hamiltonian,sigma")?;
            for r in reports {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    r.graph6,
                    r.n,
                    r.m,
                    r.min_degree,
                    r.connectivity,
                    r.independence,
                    r.circumference,
                    r.hamiltonian,
                    sigma_text(r, ";")
                )?;
            }
        }
        Format::Text => {
            for r in reports {
                writeln!(
                    out,
                    "{} n={} m={} delta={} kappa={} alpha={} c={} hamiltonian={} {}",
                    r.graph6,
                    r.n,
                    r.m,
                    r.min_degree,
                    r.connectivity,
                    r.independence,
                    r.circumference,
                    r.hamiltonian,
                    sigma_text(r, " ")
                )?;
            }
        }
    }
    Ok(())
}

fn sigma_text(r: &InvariantReport, sep: &str) -> String {
    r.sigma
        .iter()
        .map(|(k, s)| format!("sigma{k}={}", s.map_or("-".to_string(), |v| v.to_string())))
        .collect::<Vec<_>>()
        .join(sep)
}

fn emit_checks(checks: &[ClaimCheck], format: Format, out: &mut String) -> Result<(), Failure> {
    match format {
        Format::Json => push_json(out, &serde_json::to_value(checks)?)?,
        Format::Csv => {
            writeln!(out, "claim,graph6,bindings,premise,conclusion,vacuous,violated")?;
            for c in checks {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    c.claim, c.graph6, c.bindings, c.premise_holds, c.conclusion_holds, c.vacuous, c.violated()
                )?;
            }
        }
        Format::Text => {
            for c in checks {
                let status = if c.violated() {
                    "VIOLATED"
                } else if c.vacuous {
                    "vacuous"
                } else {
                    "holds"
                };
                writeln!(out, "{:<20} {:<6} {status}", c.claim.name(), c.bindings.to_string())?;
            }
        }
    }
    Ok(())
}

fn emit_report(report: &CorpusReport, format: Format, out: &mut String) -> Result<(), Failure> {
    match format {
        Format::Json => push_json(out, &serde_json::to_value(report)?)?,
        Format::Csv => {
            writeln!(out, "claim,checked,vacuous,violated,counterexample,bindings")?;
            for (id, s) in &report.claims {
                let (g6, b) = s
                    .first_counterexample
                    .as_ref()
                    .map(|c| (c.graph6.clone(), c.bindings.to_string()))
                    .unwrap_or_default();
                writeln!(out, "{id},{},{},{},{g6},{b}", s.checked, s.vacuous, s.violated)?;
            }
        }
        Format::Text => {
            writeln!(out, "graphs={} skipped={} violations={}", report.graphs, report.skipped, report.total_violations())?;
            for (id, s) in &report.claims {
                write!(out, "{:<20} checked={} vacuous={} violated={}", id.name(), s.checked, s.vacuous, s.violated)?;
                if let Some(c) = &s.first_counterexample {
                    write!(out, " first={} {}", c.graph6, c.bindings)?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(())
}
