//! Exhaustive computation of f(n) and g(n), the largest k for which every
//! k-cyclable graph on n vertices has c > k (respectively c >= 2k), and of
//! edge-maximal nonhamiltonian k-connected graphs.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::{self, Budget, CycleError, CycleStructure};
use crate::enumerate::{enumerate_graphs_with_limit, EnumerateError, DEFAULT_ENUMERATION_LIMIT};
use crate::graph::{bits, Graph};
use crate::graph6::{parse_graph6, read_graph6, write_graph6, CorpusError};
use crate::invariants::vertex_connectivity;

/// Where the graphs of a run come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    /// Built-in isomorph-free enumeration, up to `limit` vertices.
    Builtin { limit: usize },
    /// A graph6 file, one record per line.
    File(PathBuf),
}

impl Default for CorpusSource {
    fn default() -> Self {
        CorpusSource::Builtin {
            limit: DEFAULT_ENUMERATION_LIMIT,
        }
    }
}

#[derive(Debug, Error)]
pub enum ExploreError {
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("{path}: {source}")]
    Corpus { path: PathBuf, source: CorpusError },
    #[error("{path}: {source}")]
    Open { path: PathBuf, source: std::io::Error },
    #[error("{graph6}: {source}")]
    Budget { graph6: String, source: CycleError },
}

impl CorpusSource {
    /// Graphs of order exactly `n`.
    pub fn graphs_of_order(&self, n: usize) -> Result<Vec<Graph>, ExploreError> {
        match self {
            CorpusSource::Builtin { limit } => Ok(enumerate_graphs_with_limit(n, *limit)?),
            CorpusSource::File(_) => Ok(self.read_file()?.into_iter().filter(|g| g.order() == n).collect()),
        }
    }

    /// Graphs of every order up to `n_max`.
    pub fn graphs_up_to(&self, n_max: usize) -> Result<Vec<Graph>, ExploreError> {
        match self {
            CorpusSource::Builtin { .. } => {
                let mut out = Vec::new();
                for n in 0..=n_max {
                    out.extend(self.graphs_of_order(n)?);
                }
                Ok(out)
            }
            CorpusSource::File(_) => Ok(self.read_file()?.into_iter().filter(|g| g.order() <= n_max).collect()),
        }
    }

    fn read_file(&self) -> Result<Vec<Graph>, ExploreError> {
        let CorpusSource::File(path) = self else {
            unreachable!("file sources only")
        };
        let file = File::open(path).map_err(|source| ExploreError::Open {
            path: path.clone(),
            source,
        })?;
        read_graph6(BufReader::new(file))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|source| ExploreError::Corpus {
                path: path.clone(),
                source,
            })
    }
}

/// One k of the f/g table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FgRow {
    pub k: usize,
    /// Number of k-cyclable graphs seen.
    pub cyclable_graphs: usize,
    /// No k-cyclable graph exists, so both flags hold vacuously.
    pub vacuous: bool,
    pub all_c_gt_k: bool,
    pub all_c_ge_2k: bool,
    /// Smallest graph6 of a k-cyclable graph with c <= k.
    pub witness_c_gt_k: Option<String>,
    /// Smallest graph6 of a k-cyclable graph with c < 2k.
    pub witness_c_ge_2k: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplorationResult {
    pub n: usize,
    pub graphs: usize,
    /// Graphs skipped as not 2-connected (hence k-cyclable for no k >= 2).
    pub skipped: usize,
    pub rows: Vec<FgRow>,
    /// Largest k with `all_c_gt_k`; `None` if no k qualifies.
    pub f_n: Option<usize>,
    /// Largest k with `all_c_ge_2k`; `None` if no k qualifies.
    pub g_n: Option<usize>,
}

pub const CSV_HEADER: &str = "n,k,all_c_gt_k,all_c_ge_2k,vacuous,witness,f_n,g_n";

impl ExplorationResult {
    /// CSV rows (no header). The witness column holds the c > k witness
    /// when that flag fails, otherwise the c >= 2k witness.
    pub fn csv_rows(&self) -> Vec<String> {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        self.rows
            .iter()
            .map(|r| {
                let witness = r.witness_c_gt_k.as_ref().or(r.witness_c_ge_2k.as_ref());
                format!(
                    "{},{},{},{},{},{},{},{}",
                    self.n,
                    r.k,
                    r.all_c_gt_k,
                    r.all_c_ge_2k,
                    r.vacuous,
                    witness.map(String::as_str).unwrap_or(""),
                    opt(self.f_n),
                    opt(self.g_n)
                )
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from(CSV_HEADER);
        s.push('\n');
        for row in self.csv_rows() {
            s.push_str(&row);
            s.push('\n');
        }
        s
    }
}

/// Per-graph contribution to the table.
#[derive(Default)]
struct Tally {
    graphs: usize,
    skipped: usize,
    /// k -> (count, worst c witness for c <= k, for c < 2k)
    rows: BTreeMap<usize, (usize, Option<String>, Option<String>)>,
}

fn min_opt(a: Option<String>, b: Option<String>) -> Option<String> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.graphs += other.graphs;
        self.skipped += other.skipped;
        for (k, (c, a, b)) in other.rows {
            let e = self.rows.entry(k).or_default();
            e.0 += c;
            e.1 = min_opt(e.1.take(), a);
            e.2 = min_opt(e.2.take(), b);
        }
        self
    }
}

/// A pair of vertices that no cycle contains both of, when `g` is not
/// 2-connected.
fn separated_pair(g: &Graph) -> Option<(usize, usize)> {
    let all = g.vertex_mask();
    let split = |within: u64| {
        let comps = g.components(within);
        (comps.len() >= 2).then(|| (comps[0].trailing_zeros() as usize, comps[1].trailing_zeros() as usize))
    };
    split(all).or_else(|| bits(all).find_map(|x| split(all & !(1 << x))))
}

/// f(n) and g(n) over the graphs of order `n` drawn from `source`.
pub fn compute_fg(n: usize, source: &CorpusSource, budget: &Budget) -> Result<ExplorationResult, ExploreError> {
    compute_fg_from(n, &source.graphs_of_order(n)?, budget)
}

/// f(n) and g(n) over `graphs` (those not of order `n` are ignored). The
/// graphs are taken to cover every isomorphism class of order `n`.
pub fn compute_fg_from(n: usize, graphs: &[Graph], budget: &Budget) -> Result<ExplorationResult, ExploreError> {
    let tally = graphs
        .par_iter()
        .filter(|g| g.order() == n)
        .map(|g| -> Result<Tally, ExploreError> {
            let mut t = Tally {
                graphs: 1,
                ..Tally::default()
            };
            if n < 3 || vertex_connectivity(g) < 2 {
                if let Some((u, v)) = separated_pair(g) {
                    let verdict = cycles::is_cyclable_set(g, &[u, v], budget).map_err(|source| ExploreError::Budget {
                        graph6: write_graph6(g),
                        source,
                    })?;
                    assert!(!verdict.holds, "a skipped graph must not be 2-cyclable");
                }
                t.skipped = 1;
                return Ok(t);
            }
            let s = CycleStructure::new(g, budget).map_err(|source| ExploreError::Budget {
                graph6: write_graph6(g),
                source,
            })?;
            let profile = s.cyclability_profile();
            let c = s.circumference().0;
            let g6 = write_graph6(g);
            for k in 2..=n {
                if profile[k] {
                    let bad_gt = (c <= k).then(|| g6.clone());
                    let bad_2k = (c < 2 * k).then(|| g6.clone());
                    t.rows.insert(k, (1, bad_gt, bad_2k));
                }
            }
            Ok(t)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;

    let mut rows = Vec::new();
    for k in 2..=n {
        let (count, gt, ge) = tally.rows.get(&k).cloned().unwrap_or_default();
        for (w, strict) in [(&gt, true), (&ge, false)] {
            if let Some(w) = w {
                reverify_witness(w, k, strict, budget);
            }
        }
        rows.push(FgRow {
            k,
            cyclable_graphs: count,
            vacuous: count == 0,
            all_c_gt_k: gt.is_none(),
            all_c_ge_2k: ge.is_none(),
            witness_c_gt_k: gt,
            witness_c_ge_2k: ge,
        });
    }
    let f_n = rows.iter().filter(|r| r.all_c_gt_k).map(|r| r.k).max();
    let g_n = rows.iter().filter(|r| r.all_c_ge_2k).map(|r| r.k).max();
    Ok(ExplorationResult {
        n,
        graphs: tally.graphs,
        skipped: tally.skipped,
        rows,
        f_n,
        g_n,
    })
}

/// Recomputes a witness from its graph6 text: k-cyclable, and violating
/// c > k (`strict`) or c >= 2k.
fn reverify_witness(g6: &str, k: usize, strict: bool, budget: &Budget) {
    let g = parse_graph6(g6).expect("witness graph6 re-parses");
    assert!(cycles::is_k_cyclable(&g, k, budget).expect("within budget").holds);
    let c = cycles::circumference(&g, budget).expect("within budget").0;
    assert!(if strict { c <= k } else { c < 2 * k }, "witness {g6} does not violate its bound");
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxEdgesResult {
    pub n: usize,
    pub k: usize,
    /// Largest edge count of a nonhamiltonian k-connected graph of order n.
    pub max_edges: Option<usize>,
    /// All graphs attaining it, as sorted graph6.
    pub witnesses: Vec<String>,
}

/// The maximum edge count over nonhamiltonian k-connected graphs of order
/// `n` in `source`, with every graph attaining it.
pub fn max_edges_nonhamiltonian(n: usize, k: usize, source: &CorpusSource, budget: &Budget) -> Result<MaxEdgesResult, ExploreError> {
    max_edges_nonhamiltonian_from(n, k, &source.graphs_of_order(n)?, budget)
}

pub fn max_edges_nonhamiltonian_from(n: usize, k: usize, graphs: &[Graph], budget: &Budget) -> Result<MaxEdgesResult, ExploreError> {
    let mut by_edges: BTreeMap<usize, Vec<&Graph>> = BTreeMap::new();
    if n >= 3 {
        for g in graphs.iter().filter(|g| g.order() == n) {
            by_edges.entry(g.edge_count()).or_default().push(g);
        }
    }
    for (&m, level) in by_edges.iter().rev() {
        let found: Vec<String> = level
            .par_iter()
            .filter(|g| vertex_connectivity(g) >= k)
            .map(|g| {
                let (h, _) = cycles::is_hamiltonian(g, budget).map_err(|source| ExploreError::Budget {
                    graph6: write_graph6(g),
                    source,
                })?;
                Ok((!h).then(|| write_graph6(g)))
            })
            .collect::<Result<Vec<Option<String>>, ExploreError>>()?
            .into_iter()
            .flatten()
            .collect();
        if !found.is_empty() {
            let mut witnesses = found;
            witnesses.sort();
            witnesses.dedup();
            for w in &witnesses {
                let g = parse_graph6(w).expect("witness graph6 re-parses");
                assert!(vertex_connectivity(&g) >= k);
                assert!(!cycles::is_hamiltonian(&g, budget).expect("within budget").0);
            }
            return Ok(MaxEdgesResult {
                n,
                k,
                max_edges: Some(m),
                witnesses,
            });
        }
    }
    Ok(MaxEdgesResult {
        n,
        k,
        max_edges: None,
        witnesses: vec![],
    })
}
