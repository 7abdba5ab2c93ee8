//! Statements about cyclability, circumference and hamiltonicity as
//! machine-checkable claims, evaluated one graph at a time.
//!
//! Every claim is an implication `premise => conclusion` over one graph and
//! at most one integer parameter (`k` or `m`). Fractional bounds are compared
//! in integer arithmetic.

use std::cell::{OnceCell, RefCell};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closure::{bondy_chvatal_closure, closed_nonadjacent_bound_holds};
use crate::cycles::{self, k_cyclable_from, k_ordered_from, Budget, CycleCertificate, CycleError, CycleStructure};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::invariants::{independence_number, sigma_k, vertex_connectivity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClaimId {
    #[serde(rename = "T1_2K")]
    T12k,
    #[serde(rename = "T1_KPLUS2")]
    T1Kplus2,
    #[serde(rename = "T2_ORDERED")]
    T2Ordered,
    #[serde(rename = "T3_EDGE_HAM")]
    T3EdgeHam,
    DiracCyclable,
    DiracCirc,
    ChvatalErdos,
    OwwBound,
    DiracMindeg,
    #[serde(rename = "BAUER_3CYC")]
    Bauer3cyc,
    NgSchultzConn,
    LiSigmaHam,
    #[serde(rename = "BYER_L9_PUBLISHED")]
    ByerL9Published,
    #[serde(rename = "BYER_L9_DERIVED")]
    ByerL9Derived,
    #[serde(rename = "BYER_L10")]
    ByerL10,
    ClosedDegreeBound,
    ClosureHamEquiv,
    ClassicalEdgeHam,
}

/// Which free variable a claim quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parameter {
    None,
    K,
    M,
}

impl ClaimId {
    pub const ALL: [ClaimId; 18] = [
        ClaimId::T12k,
        ClaimId::T1Kplus2,
        ClaimId::T2Ordered,
        ClaimId::T3EdgeHam,
        ClaimId::DiracCyclable,
        ClaimId::DiracCirc,
        ClaimId::ChvatalErdos,
        ClaimId::OwwBound,
        ClaimId::DiracMindeg,
        ClaimId::Bauer3cyc,
        ClaimId::NgSchultzConn,
        ClaimId::LiSigmaHam,
        ClaimId::ByerL9Published,
        ClaimId::ByerL9Derived,
        ClaimId::ByerL10,
        ClaimId::ClosedDegreeBound,
        ClaimId::ClosureHamEquiv,
        ClaimId::ClassicalEdgeHam,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::T12k => "T1_2K",
            ClaimId::T1Kplus2 => "T1_KPLUS2",
            ClaimId::T2Ordered => "T2_ORDERED",
            ClaimId::T3EdgeHam => "T3_EDGE_HAM",
            ClaimId::DiracCyclable => "DIRAC_CYCLABLE",
            ClaimId::DiracCirc => "DIRAC_CIRC",
            ClaimId::ChvatalErdos => "CHVATAL_ERDOS",
            ClaimId::OwwBound => "OWW_BOUND",
            ClaimId::DiracMindeg => "DIRAC_MINDEG",
            ClaimId::Bauer3cyc => "BAUER_3CYC",
            ClaimId::NgSchultzConn => "NG_SCHULTZ_CONN",
            ClaimId::LiSigmaHam => "LI_SIGMA_HAM",
            ClaimId::ByerL9Published => "BYER_L9_PUBLISHED",
            ClaimId::ByerL9Derived => "BYER_L9_DERIVED",
            ClaimId::ByerL10 => "BYER_L10",
            ClaimId::ClosedDegreeBound => "CLOSED_DEGREE_BOUND",
            ClaimId::ClosureHamEquiv => "CLOSURE_HAM_EQUIV",
            ClaimId::ClassicalEdgeHam => "CLASSICAL_EDGE_HAM",
        }
    }

    pub fn parameter(self) -> Parameter {
        match self {
            ClaimId::ChvatalErdos
            | ClaimId::DiracMindeg
            | ClaimId::Bauer3cyc
            | ClaimId::ClosedDegreeBound
            | ClaimId::ClosureHamEquiv
            | ClaimId::ClassicalEdgeHam => Parameter::None,
            ClaimId::ByerL10 => Parameter::M,
            _ => Parameter::K,
        }
    }

    /// Premise involves k-orderedness.
    pub fn is_ordered(self) -> bool {
        matches!(self, ClaimId::T2Ordered | ClaimId::NgSchultzConn)
    }

    /// The parameter values a claim is checked at on an n-vertex graph.
    pub fn parameter_range(self, n: usize, ordered_k_max: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            ClaimId::T3EdgeHam | ClaimId::LiSigmaHam | ClaimId::ByerL9Published | ClaimId::ByerL9Derived => {
                1..=n.saturating_sub(1)
            }
            ClaimId::T2Ordered | ClaimId::NgSchultzConn => 2..=n.min(ordered_k_max),
            ClaimId::ByerL10 => 1..=n,
            _ if self.parameter() == Parameter::K => 2..=n,
            _ => 0..=0,
        }
    }

    /// Every binding the claim is checked at on an n-vertex graph.
    pub fn bindings(self, n: usize, ordered_k_max: usize) -> Vec<Bindings> {
        match self.parameter() {
            Parameter::None => vec![Bindings::default()],
            Parameter::K => self.parameter_range(n, ordered_k_max).map(Bindings::k).collect(),
            Parameter::M => self.parameter_range(n, ordered_k_max).map(Bindings::m).collect(),
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown claim {0:?}")]
pub struct UnknownClaim(pub String);

impl FromStr for ClaimId {
    type Err = UnknownClaim;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let want = s.trim().to_ascii_uppercase().replace('-', "_");
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name() == want)
            .ok_or_else(|| UnknownClaim(s.to_string()))
    }
}

/// Parses a comma-separated claim list; `all` selects every claim.
pub fn parse_claim_list(s: &str) -> Result<Vec<ClaimId>, UnknownClaim> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(ClaimId::ALL.to_vec());
    }
    let mut out: Vec<ClaimId> = s.split(',').map(str::parse).collect::<Result<_, _>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bindings {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<usize>,
}

impl Bindings {
    pub fn k(k: usize) -> Self {
        Bindings { k: Some(k), m: None }
    }

    pub fn m(m: usize) -> Self {
        Bindings { k: None, m: Some(m) }
    }
}

impl fmt::Display for Bindings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.k, self.m) {
            (Some(k), _) => write!(f, "k={k}"),
            (_, Some(m)) => write!(f, "m={m}"),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Cycle(CycleCertificate),
    Vertices(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub claim: ClaimId,
    pub graph6: String,
    pub bindings: Bindings,
    pub premise_holds: bool,
    pub conclusion_holds: bool,
    pub vacuous: bool,
    pub witness: Option<Witness>,
}

impl ClaimCheck {
    pub fn violated(&self) -> bool {
        self.premise_holds && !self.conclusion_holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimError {
    #[error("{claim} needs a value for {name}")]
    MissingBinding { claim: ClaimId, name: &'static str },
    #[error("{claim}: {name} = {value} is outside {lo}..={hi} for n = {n}")]
    OutOfRange {
        claim: ClaimId,
        name: &'static str,
        value: usize,
        lo: usize,
        hi: usize,
        n: usize,
    },
    #[error("claims apply to graphs on at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("{graph6}: {source}")]
    Budget { graph6: String, source: CycleError },
}

/// Claim-checking options.
#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub budget: Budget,
    /// Largest k at which k-ordered premises are evaluated.
    pub ordered_k_max: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            budget: Budget::default(),
            ordered_k_max: 5,
        }
    }
}

/// Lazily computed facts about one graph, shared by all claims checked on
/// it. Not thread-safe; one instance per graph per thread.
pub struct GraphFacts<'a> {
    g: &'a Graph,
    budget: Budget,
    graph6: OnceCell<String>,
    kappa: OnceCell<usize>,
    alpha: OnceCell<usize>,
    structure: OnceCell<CycleStructure>,
    ham: OnceCell<(bool, Option<CycleCertificate>)>,
    profile: OnceCell<Vec<bool>>,
    closure: OnceCell<Graph>,
    closure_ham: OnceCell<bool>,
    closed: OnceCell<bool>,
    ordered: RefCell<BTreeMap<usize, bool>>,
    sigma: RefCell<BTreeMap<usize, Option<usize>>>,
}

impl<'a> GraphFacts<'a> {
    pub fn new(g: &'a Graph, budget: &Budget) -> Result<Self, ClaimError> {
        if g.order() < 3 {
            return Err(ClaimError::TooSmall(g.order()));
        }
        Ok(GraphFacts {
            g,
            budget: budget.clone(),
            graph6: OnceCell::new(),
            kappa: OnceCell::new(),
            alpha: OnceCell::new(),
            structure: OnceCell::new(),
            ham: OnceCell::new(),
            profile: OnceCell::new(),
            closure: OnceCell::new(),
            closure_ham: OnceCell::new(),
            closed: OnceCell::new(),
            ordered: RefCell::new(BTreeMap::new()),
            sigma: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn graph6(&self) -> &str {
        self.graph6.get_or_init(|| write_graph6(self.g))
    }

    fn n(&self) -> usize {
        self.g.order()
    }

    fn m(&self) -> usize {
        self.g.edge_count()
    }

    fn delta(&self) -> usize {
        crate::invariants::min_degree(self.g)
    }

    fn kappa(&self) -> usize {
        *self.kappa.get_or_init(|| vertex_connectivity(self.g))
    }

    fn alpha(&self) -> usize {
        *self.alpha.get_or_init(|| independence_number(self.g).size)
    }

    fn budget_error(&self, source: CycleError) -> ClaimError {
        ClaimError::Budget {
            graph6: self.graph6().to_string(),
            source,
        }
    }

    fn structure(&self) -> Result<&CycleStructure, ClaimError> {
        if let Some(s) = self.structure.get() {
            return Ok(s);
        }
        let s = CycleStructure::new(self.g, &self.budget).map_err(|e| self.budget_error(e))?;
        Ok(self.structure.get_or_init(|| s))
    }

    fn circumference(&self) -> Result<(usize, Option<CycleCertificate>), ClaimError> {
        Ok(self.structure()?.circumference())
    }

    fn hamiltonian(&self) -> Result<&(bool, Option<CycleCertificate>), ClaimError> {
        if let Some(h) = self.ham.get() {
            return Ok(h);
        }
        let h = if self.n() <= self.budget.max_exact_vertices {
            let c = self.structure()?.hamiltonian_cycle();
            (c.is_some(), c)
        } else {
            cycles::is_hamiltonian(self.g, &self.budget).map_err(|e| self.budget_error(e))?
        };
        Ok(self.ham.get_or_init(|| h))
    }

    fn k_cyclable(&self, k: usize) -> Result<bool, ClaimError> {
        if let Some(p) = self.profile.get() {
            return Ok(p[k]);
        }
        let p = self.structure()?.cyclability_profile();
        Ok(self.profile.get_or_init(|| p)[k])
    }

    fn k_ordered(&self, k: usize) -> Result<bool, ClaimError> {
        if let Some(&v) = self.ordered.borrow().get(&k) {
            return Ok(v);
        }
        // definitional shortcuts only: k-ordered graphs are k-cyclable, and
        // k-ordered implies (k-1)-ordered
        let known_smaller_fails = self.ordered.borrow().range(..k).any(|(&j, &v)| j >= 2 && !v);
        let v = if known_smaller_fails || !self.k_cyclable(k)? {
            false
        } else {
            k_ordered_from(self.structure()?, k, &self.budget.clock())
                .map_err(|e| self.budget_error(e))?
                .holds
        };
        self.ordered.borrow_mut().insert(k, v);
        Ok(v)
    }

    fn sigma(&self, k: usize) -> Option<usize> {
        *self
            .sigma
            .borrow_mut()
            .entry(k)
            .or_insert_with(|| sigma_k(self.g, k).expect("1 <= k <= n"))
    }

    fn closure(&self) -> &Graph {
        self.closure.get_or_init(|| bondy_chvatal_closure(self.g))
    }

    fn closed(&self) -> bool {
        *self.closed.get_or_init(|| self.closure() == self.g)
    }

    fn closure_hamiltonian(&self) -> Result<bool, ClaimError> {
        if let Some(&h) = self.closure_ham.get() {
            return Ok(h);
        }
        let h = if self.closed() {
            self.hamiltonian()?.0
        } else {
            cycles::is_hamiltonian(self.closure(), &self.budget)
                .map_err(|e| self.budget_error(e))?
                .0
        };
        Ok(*self.closure_ham.get_or_init(|| h))
    }

    fn complement_edges(&self) -> usize {
        let n = self.n();
        n * (n - 1) / 2 - self.m()
    }

    /// Evaluates one claim at one binding.
    pub fn check(&self, claim: ClaimId, bindings: Bindings) -> Result<ClaimCheck, ClaimError> {
        let n = self.n();
        let param = match claim.parameter() {
            Parameter::None => 0,
            Parameter::K => bindings.k.ok_or(ClaimError::MissingBinding { claim, name: "k" })?,
            Parameter::M => bindings.m.ok_or(ClaimError::MissingBinding { claim, name: "m" })?,
        };
        if claim.parameter() != Parameter::None {
            let range = claim.parameter_range(n, usize::MAX);
            if !range.contains(&param) {
                return Err(ClaimError::OutOfRange {
                    claim,
                    name: if claim.parameter() == Parameter::K { "k" } else { "m" },
                    value: param,
                    lo: *range.start(),
                    hi: *range.end(),
                    n,
                });
            }
        }
        let (premise, conclusion, witness) = self.evaluate(claim, param)?;
        Ok(ClaimCheck {
            claim,
            graph6: self.graph6().to_string(),
            bindings,
            premise_holds: premise,
            conclusion_holds: conclusion,
            vacuous: !premise,
            witness,
        })
    }

    fn longest(&self) -> Result<(usize, Option<Witness>), ClaimError> {
        let (c, cert) = self.circumference()?;
        Ok((c, cert.map(Witness::Cycle)))
    }

    fn ham_witness(&self) -> Result<(bool, Option<Witness>), ClaimError> {
        let (h, cert) = self.hamiltonian()?;
        Ok((*h, cert.clone().map(Witness::Cycle)))
    }

    fn evaluate(&self, claim: ClaimId, k: usize) -> Result<(bool, bool, Option<Witness>), ClaimError> {
        let n = self.n();
        let (ni, ki) = (n as i64, k as i64);
        Ok(match claim {
            ClaimId::T12k => {
                let premise = k * k <= n + 3 && self.k_cyclable(k)?;
                let (c, w) = self.longest()?;
                (premise, c >= 2 * k, w)
            }
            ClaimId::T1Kplus2 => {
                let premise = 4 * k + 4 <= 3 * n && self.k_cyclable(k)?;
                let (c, w) = self.longest()?;
                (premise, c >= k + 2, w)
            }
            ClaimId::T2Ordered => {
                let premise = self.k_ordered(k)?;
                let (c, w) = self.longest()?;
                (premise, c >= n.min(2 * k), w)
            }
            ClaimId::T3EdgeHam => {
                let premise = self.kappa() >= k && n >= 2 * (k * k + k) && self.m() > binom2(n - k) + k * k;
                let (h, w) = self.ham_witness()?;
                (premise, h, w)
            }
            ClaimId::DiracCyclable => {
                let premise = self.kappa() >= k;
                let holds = self.k_cyclable(k)?;
                let witness = if holds {
                    None
                } else {
                    k_cyclable_from(self.structure()?, k).counterexample.map(Witness::Vertices)
                };
                (premise, holds, witness)
            }
            ClaimId::DiracCirc => {
                let premise = self.kappa() >= k;
                let (c, w) = self.longest()?;
                (premise, c >= n.min(2 * k), w)
            }
            ClaimId::ChvatalErdos => {
                let premise = self.alpha() <= self.kappa();
                let (h, w) = self.ham_witness()?;
                (premise, h, w)
            }
            ClaimId::OwwBound => {
                let alpha = self.alpha();
                let premise = self.kappa() >= k && alpha >= k;
                let (c, w) = self.longest()?;
                let a = alpha as i64;
                (premise, c as i64 * a >= ki * (ni + ki - a), w)
            }
            ClaimId::DiracMindeg => {
                let premise = self.kappa() >= 2;
                let (c, w) = self.longest()?;
                (premise, c >= n.min(2 * self.delta()), w)
            }
            ClaimId::Bauer3cyc => {
                let premise = self.k_cyclable(3)?;
                let (c, w) = self.longest()?;
                let d = self.delta() as i64;
                let bound = ni.min(3 * d - 3).min(ni + d - self.alpha() as i64);
                (premise, c as i64 >= bound, w)
            }
            ClaimId::NgSchultzConn => {
                let premise = self.k_ordered(k)?;
                (premise, self.kappa() + 1 >= k, None)
            }
            ClaimId::LiSigmaHam => {
                let sigma = self.sigma(k + 1);
                let alpha = self.alpha() as i64;
                let premise = self.kappa() >= k
                    && sigma.is_some_and(|s| s as i64 >= ni + (ki - 1) * alpha - (ki - 1));
                let (h, w) = self.ham_witness()?;
                (premise, h, w)
            }
            ClaimId::ByerL9Published | ClaimId::ByerL9Derived => {
                let sigma = self.sigma(k + 1);
                let premise = !self.hamiltonian()?.0 && self.kappa() >= k && sigma.is_some();
                let published = self.byer_l9(k, sigma, ki - 1);
                let derived = self.byer_l9(k, sigma, ki + 1);
                assert!(!derived || published, "derived Byer bound must imply the published one");
                (premise, if claim == ClaimId::ByerL9Published { published } else { derived }, None)
            }
            ClaimId::ByerL10 => {
                let m = k;
                let premise = self.closed() && !self.hamiltonian()?.0 && m <= self.alpha();
                let lhs = 2 * self.complement_edges();
                let rhs = if n % 2 == 1 { m * (n - m) } else { m * (n - m) + m - 2 };
                (premise, lhs >= rhs, None)
            }
            ClaimId::ClosedDegreeBound => {
                let premise = self.closed() && !self.hamiltonian()?.0;
                let bad = self
                    .g
                    .non_edges()
                    .find(|&(u, v)| self.g.degree(u) + self.g.degree(v) > n - 1);
                debug_assert_eq!(bad.is_none(), closed_nonadjacent_bound_holds(self.g));
                (premise, bad.is_none(), bad.map(|(u, v)| Witness::Vertices(vec![u, v])))
            }
            ClaimId::ClosureHamEquiv => {
                let (h, w) = self.ham_witness()?;
                (true, h == self.closure_hamiltonian()?, w)
            }
            ClaimId::ClassicalEdgeHam => {
                let premise = self.m() > binom2(n - 1) + 1;
                let (h, w) = self.ham_witness()?;
                (premise, h, w)
            }
        })
    }

    /// `2k <= n-1` and `|E(complement)| >= C(k+1,2) + coef*(n-k-1) - sigma`.
    /// With σ undefined only the first part is evaluated.
    fn byer_l9(&self, k: usize, sigma: Option<usize>, coef: i64) -> bool {
        let n = self.n() as i64;
        let ki = k as i64;
        let shape = 2 * k < self.n();
        shape
            && sigma.is_none_or(|s| {
                self.complement_edges() as i64 >= ki * (ki + 1) / 2 + coef * (n - ki - 1) - s as i64
            })
    }
}

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// Evaluates `claim` on `g` at `bindings`.
pub fn check_claim(g: &Graph, claim: ClaimId, bindings: Bindings, config: &CheckConfig) -> Result<ClaimCheck, ClaimError> {
    GraphFacts::new(g, &config.budget)?.check(claim, bindings)
}

/// Every check of `claims` on one graph, over all applicable bindings.
pub fn check_all(g: &Graph, claims: &[ClaimId], config: &CheckConfig) -> Result<Vec<ClaimCheck>, ClaimError> {
    let facts = GraphFacts::new(g, &config.budget)?;
    let mut out = Vec::new();
    for &claim in claims {
        for b in claim.bindings(g.order(), config.ordered_k_max) {
            out.push(facts.check(claim, b)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub bindings: Bindings,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimSummary {
    pub checked: usize,
    pub vacuous: usize,
    pub violated: usize,
    pub first_counterexample: Option<Counterexample>,
}

impl ClaimSummary {
    fn add(&mut self, c: &ClaimCheck) {
        self.checked += 1;
        self.vacuous += usize::from(c.vacuous);
        if c.violated() {
            self.violated += 1;
            let cand = Counterexample {
                graph6: c.graph6.clone(),
                bindings: c.bindings,
            };
            self.first_counterexample = Some(match self.first_counterexample.take() {
                Some(cur) => min_counterexample(cur, cand),
                None => cand,
            });
        }
    }

    fn merge(mut self, other: ClaimSummary) -> ClaimSummary {
        self.checked += other.checked;
        self.vacuous += other.vacuous;
        self.violated += other.violated;
        self.first_counterexample = match (self.first_counterexample, other.first_counterexample) {
            (Some(a), Some(b)) => Some(min_counterexample(a, b)),
            (a, b) => a.or(b),
        };
        self
    }
}

fn min_counterexample(a: Counterexample, b: Counterexample) -> Counterexample {
    if (&b.graph6, b.bindings) < (&a.graph6, a.bindings) {
        b
    } else {
        a
    }
}

/// Aggregate of a corpus run, keyed by claim name.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    /// Graphs examined.
    pub graphs: usize,
    /// Graphs on fewer than 3 vertices, to which no claim applies.
    pub skipped: usize,
    pub claims: BTreeMap<ClaimId, ClaimSummary>,
}

impl CorpusReport {
    pub fn total_violations(&self) -> usize {
        self.claims.values().map(|s| s.violated).sum()
    }

    fn merge(mut self, other: CorpusReport) -> CorpusReport {
        self.graphs += other.graphs;
        self.skipped += other.skipped;
        for (id, s) in other.claims {
            let cur = self.claims.remove(&id).unwrap_or_default();
            self.claims.insert(id, cur.merge(s));
        }
        self
    }
}

/// Checks `claims` on every graph of `graphs` at every applicable binding.
/// The report does not depend on the parallel schedule.
pub fn verify_corpus(graphs: &[Graph], claims: &[ClaimId], config: &CheckConfig) -> Result<CorpusReport, ClaimError> {
    let empty = || CorpusReport {
        claims: claims.iter().map(|&c| (c, ClaimSummary::default())).collect(),
        ..CorpusReport::default()
    };
    graphs
        .par_iter()
        .map(|g| {
            let mut r = empty();
            r.graphs = 1;
            if g.order() < 3 {
                r.skipped = 1;
                return Ok(r);
            }
            for c in check_all(g, claims, config)? {
                r.claims.get_mut(&c.claim).expect("selected claim").add(&c);
            }
            Ok(r)
        })
        .try_reduce(empty, |a, b| Ok(a.merge(b)))
}
