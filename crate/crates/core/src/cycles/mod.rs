//! Exact cycle queries with checkable certificates.
//!
//! Everything is answered from [`CycleStructure`], a subset dynamic program
//! over the 2-core, except ordered-cycle queries (their own constrained DP)
//! and hamiltonicity beyond the DP cap (certificate search, see
//! [`is_hamiltonian`]).

mod certificate;
mod hamilton;
mod ordered;
mod structure;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use certificate::{CertificateError, CycleCertificate};
pub use hamilton::{is_scattering, next_combination};
pub use structure::{two_core, CycleStructure};

use crate::graph::{bits, Graph};
use hamilton::Search;
use ordered::OrderedSolver;

/// Largest block the subset DP accepts, whatever the configured budget.
pub const HARD_EXACT_CAP: usize = 28;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("exact solve needs a {vertices}-vertex table, above the budget of {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("time limit exceeded")]
    TimeLimit,
    #[error("hamiltonicity of a {n}-vertex graph undecided within the search budget")]
    Undecided { n: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("at least 2 vertices are required, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {0} given twice")]
    Duplicate(usize),
    #[error("k = {k} is out of range 2..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("query needs a graph on at least 3 vertices, got {0}")]
    GraphTooSmall(usize),
}

impl CycleError {
    /// Budget failures, as opposed to malformed queries.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            CycleError::TooLarge { .. } | CycleError::TimeLimit | CycleError::Undecided { .. }
        )
    }
}

/// Resource limits for the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    /// Largest 2-core component handed to the subset DP (at most
    /// [`HARD_EXACT_CAP`]).
    pub max_exact_vertices: usize,
    /// Wall-clock limit per top-level query.
    pub time_limit: Option<Duration>,
    /// Node limit for the hamiltonian backtracking search.
    pub search_nodes: u64,
    /// Largest separator tried when looking for a scattering set.
    pub scattering_size: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_exact_vertices: 20,
            time_limit: None,
            search_nodes: 5_000_000,
            scattering_size: 4,
        }
    }
}

impl Budget {
    pub fn with_max_vertices(mut self, n: usize) -> Self {
        self.max_exact_vertices = n.min(HARD_EXACT_CAP);
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub(crate) fn clock(&self) -> Clock {
        Clock {
            deadline: self.time_limit.map(|d| Instant::now() + d),
        }
    }

    fn exact_cap(&self) -> usize {
        self.max_exact_vertices.min(HARD_EXACT_CAP)
    }
}

/// Deadline shared by one top-level query.
#[derive(Debug, Clone, Copy)]
pub struct Clock {
    deadline: Option<Instant>,
}

impl Clock {
    pub fn unlimited() -> Self {
        Clock { deadline: None }
    }

    pub fn check(&self) -> Result<(), CycleError> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(CycleError::TimeLimit),
            _ => Ok(()),
        }
    }
}

/// Outcome of a cyclability query.
///
/// A universal query (k-cyclable, k-ordered) carries a certificate when it
/// holds and the lexicographically first counterexample when it does not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclabilityVerdict {
    pub holds: bool,
    pub certificate: Option<CycleCertificate>,
    pub counterexample: Option<Vec<usize>>,
}

impl CyclabilityVerdict {
    fn found(cert: CycleCertificate) -> Self {
        CyclabilityVerdict {
            holds: true,
            certificate: Some(cert),
            counterexample: None,
        }
    }

    fn refuted(counterexample: Option<Vec<usize>>) -> Self {
        CyclabilityVerdict {
            holds: false,
            certificate: None,
            counterexample,
        }
    }
}

fn check_vertices(g: &Graph, vs: &[usize]) -> Result<u64, CycleError> {
    let mut mask = 0u64;
    for &v in vs {
        if v >= g.order() {
            return Err(CycleError::VertexOutOfRange { v, n: g.order() });
        }
        if mask >> v & 1 == 1 {
            return Err(CycleError::Duplicate(v));
        }
        mask |= 1 << v;
    }
    if vs.len() < 2 {
        return Err(CycleError::TooFewVertices(vs.len()));
    }
    Ok(mask)
}

fn check_k(g: &Graph, k: usize) -> Result<(), CycleError> {
    if k < 2 || k > g.order() {
        Err(CycleError::KOutOfRange { k, n: g.order() })
    } else {
        Ok(())
    }
}

/// c(G) with a longest cycle; 0 and no certificate when `g` is acyclic.
pub fn circumference(g: &Graph, budget: &Budget) -> Result<(usize, Option<CycleCertificate>), CycleError> {
    Ok(CycleStructure::new(g, &capped(budget))?.circumference())
}

fn capped(budget: &Budget) -> Budget {
    let mut b = budget.clone();
    b.max_exact_vertices = budget.exact_cap();
    b
}

/// Exact hamiltonicity. Within the DP cap this is the subset DP; above it
/// a verdict is returned only with proof (an explicit cycle, an exhausted
/// search or a scattering set), otherwise [`CycleError::Undecided`].
/// Scattering sets are tried up to [`Budget::scattering_size`] vertices,
/// plus the complement of a maximum independent set.
pub fn is_hamiltonian(g: &Graph, budget: &Budget) -> Result<(bool, Option<CycleCertificate>), CycleError> {
    let n = g.order();
    if n < 3 {
        return Err(CycleError::GraphTooSmall(n));
    }
    if two_core(g) != g.vertex_mask() || !g.is_connected() {
        return Ok((false, None));
    }
    let budget = capped(budget);
    let clock = budget.clock();
    if n <= budget.max_exact_vertices {
        let s = CycleStructure::with_clock(g, &budget, &clock)?;
        let c = s.hamiltonian_cycle();
        return Ok((c.is_some(), c));
    }
    // cheap attempt first: dense hamiltonian graphs fall quickly
    match hamilton::backtrack(g, 20_000, &clock)? {
        Search::Found(c) => return Ok((true, Some(CycleCertificate::trusted(g, c).canonical()))),
        Search::Exhausted => return Ok((false, None)),
        Search::LimitHit => {}
    }
    if hamilton::scattering_set(g, budget.scattering_size, &clock)?.is_some() {
        return Ok((false, None));
    }
    // the complement of an independent set of more than n/2 vertices scatters
    if 2 * crate::invariants::independence_number(g).size > n {
        return Ok((false, None));
    }
    match hamilton::backtrack(g, budget.search_nodes, &clock)? {
        Search::Found(c) => Ok((true, Some(CycleCertificate::trusted(g, c).canonical()))),
        Search::Exhausted => Ok((false, None)),
        Search::LimitHit => Err(CycleError::Undecided { n }),
    }
}

/// Whether some cycle passes through every vertex of `set`.
pub fn is_cyclable_set(g: &Graph, set: &[usize], budget: &Budget) -> Result<CyclabilityVerdict, CycleError> {
    let mask = check_vertices(g, set)?;
    let s = CycleStructure::new(g, &capped(budget))?;
    Ok(match s.cycle_through(mask) {
        Some(c) => CyclabilityVerdict::found(c),
        None => CyclabilityVerdict::refuted(None),
    })
}

/// The k-subsets of `0..n` in lexicographic order, as masks.
pub fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        out.push(combo.iter().fold(0u64, |m, &v| m | 1 << v));
        if !next_combination(&mut combo, n) {
            return out;
        }
    }
}

/// Lexicographic rank order of masks as sorted vertex lists.
fn lex_key(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

/// Whether every k-subset lies on a common cycle.
pub fn is_k_cyclable(g: &Graph, k: usize, budget: &Budget) -> Result<CyclabilityVerdict, CycleError> {
    check_k(g, k)?;
    let s = CycleStructure::new(g, &capped(budget))?;
    Ok(k_cyclable_from(&s, k))
}

/// [`is_k_cyclable`] against an already built structure.
pub fn k_cyclable_from(s: &CycleStructure, k: usize) -> CyclabilityVerdict {
    let n = s.graph().order();
    let subsets = k_subsets(n, k);
    let bad = subsets.par_iter().find_first(|&&m| !s.is_cyclable(m));
    match bad {
        Some(&m) => CyclabilityVerdict::refuted(Some(lex_key(m))),
        None => CyclabilityVerdict::found(
            s.cycle_through(subsets[0])
                .expect("first subset is cyclable"),
        ),
    }
}

/// Whether some cycle meets `seq` in this cyclic order (in either
/// traversal direction).
pub fn has_ordered_cycle(g: &Graph, seq: &[usize], budget: &Budget) -> Result<CyclabilityVerdict, CycleError> {
    let mask = check_vertices(g, seq)?;
    let budget = capped(budget);
    let clock = budget.clock();
    let s = CycleStructure::with_clock(g, &budget, &clock)?;
    let Some(block) = s.block_of(mask) else {
        return Ok(CyclabilityVerdict::refuted(None));
    };
    let mut solver = OrderedSolver::new(block);
    Ok(match solver.solve(seq, &clock)? {
        Some(c) => CyclabilityVerdict::found(CycleCertificate::trusted(g, c)),
        None => CyclabilityVerdict::refuted(None),
    })
}

/// Cyclic orders of `subset` up to rotation and reflection, in
/// lexicographic order: the smallest element first and, for three or more
/// elements, the second entry below the last.
pub fn dihedral_orders(subset: &[usize]) -> Vec<Vec<usize>> {
    let k = subset.len();
    if k <= 2 {
        return vec![subset.to_vec()];
    }
    let mut rest: Vec<usize> = subset[1..].to_vec();
    rest.sort_unstable();
    let mut out = Vec::new();
    loop {
        if rest[0] < rest[rest.len() - 1] {
            let mut seq = Vec::with_capacity(k);
            seq.push(subset[0]);
            seq.extend_from_slice(&rest);
            out.push(seq);
        }
        if !next_permutation(&mut rest) {
            return out;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Whether every sequence of k distinct vertices lies on a cycle in that
/// cyclic order. Sequences are enumerated up to rotation and reflection;
/// on failure the lexicographically first bad sequence is returned.
pub fn is_k_ordered(g: &Graph, k: usize, budget: &Budget) -> Result<CyclabilityVerdict, CycleError> {
    check_k(g, k)?;
    let budget = capped(budget);
    let clock = budget.clock();
    let s = CycleStructure::with_clock(g, &budget, &clock)?;
    k_ordered_from(&s, k, &clock)
}

/// [`is_k_ordered`] against an already built structure.
pub fn k_ordered_from(s: &CycleStructure, k: usize, clock: &Clock) -> Result<CyclabilityVerdict, CycleError> {
    let g = s.graph();
    let n = g.order();
    let subsets = k_subsets(n, k);
    // a subset that is not even cyclable fails in its first order
    let first_uncyclable = subsets.iter().position(|&m| !s.is_cyclable(m));
    let scan = &subsets[..first_uncyclable.unwrap_or(subsets.len())];

    let check_subset = |m: &u64| -> Result<Option<Vec<usize>>, CycleError> {
        let block = s.block_of(*m).expect("cyclable subsets sit inside one block");
        let mut solver = OrderedSolver::new(block);
        for seq in dihedral_orders(&lex_key(*m)) {
            if solver.solve(&seq, clock)?.is_none() {
                return Ok(Some(seq));
            }
        }
        Ok(None)
    };

    let bad = if scan.len() * dihedral_count(k) < 256 {
        scan.iter().find_map(|m| check_subset(m).transpose())
    } else {
        scan.par_iter().find_map_first(|m| check_subset(m).transpose())
    };
    if let Some(seq) = bad {
        return Ok(CyclabilityVerdict::refuted(Some(seq?)));
    }
    if let Some(i) = first_uncyclable {
        return Ok(CyclabilityVerdict::refuted(Some(lex_key(subsets[i]))));
    }
    let first: Vec<usize> = (0..k).collect();
    let block = s.block_of(subsets[0]).expect("cyclable");
    let cycle = OrderedSolver::new(block)
        .solve(&first, clock)?
        .expect("checked above");
    Ok(CyclabilityVerdict::found(CycleCertificate::trusted(g, cycle)))
}

fn dihedral_count(k: usize) -> usize {
    if k <= 2 {
        1
    } else {
        (1..k).product::<usize>() / 2
    }
}

/// Not hamiltonian, while every vertex-deleted subgraph is.
pub fn is_hypohamiltonian(g: &Graph, budget: &Budget) -> Result<bool, CycleError> {
    let n = g.order();
    if n < 3 {
        return Err(CycleError::GraphTooSmall(n));
    }
    if is_hamiltonian(g, budget)?.0 {
        return Ok(false);
    }
    if n < 4 {
        return Ok(false);
    }
    for v in 0..n {
        if !is_hamiltonian(&g.delete_vertex(v), budget)?.0 {
            return Ok(false);
        }
    }
    Ok(true)
}
