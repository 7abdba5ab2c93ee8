//! Named graph families and explicit ordered-cycle routing in complete
//! bipartite graphs.
//!
//! Index layouts:
//! - `complete-bipartite k n`: `K_{k,n-k}`, side A = `0..k`, side B = `k..n`.
//! - `join-k2-2kk k`: the edge is `0,1`, the cliques are `2..k+2` and `k+2..2k+2`.
//! - `extremal-nonham n k`: clique on `0..n-k`, independent vertices
//!   `n-k..n`, each adjacent to the attachment vertices `0..k`.
//! - `half-join n`: clique on `0..p`, independent vertices `p..n`, with
//!   `p = (n-1)/2` rounded down.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::cycles::{CertificateError, CycleCertificate};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionSpec {
    CompleteBipartite { k: usize, n: usize },
    JoinK2TwoKk { k: usize },
    ExtremalNonham { n: usize, k: usize },
    HalfJoin { n: usize },
    Petersen,
    Complete { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("cannot parse construction {0:?}; expected one of: complete-bipartite K N, join-k2-2kk K, extremal-nonham N K, half-join N, petersen, complete N")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl ConstructionSpec {
    pub fn validate(&self) -> Result<(), ConstructionError> {
        let bad = |msg: String| Err(ConstructionError::InvalidParameters(msg));
        match *self {
            ConstructionSpec::CompleteBipartite { k, n } if k < 1 || k + 1 > n => {
                bad(format!("complete-bipartite needs 1 <= k <= n-1, got k={k}, n={n}"))
            }
            ConstructionSpec::JoinK2TwoKk { k } if k < 1 => bad("join-k2-2kk needs k >= 1".into()),
            ConstructionSpec::ExtremalNonham { n, k } if k < 1 || 2 * k + 1 > n => {
                bad(format!("extremal-nonham needs 1 <= k <= (n-1)/2, got n={n}, k={k}"))
            }
            ConstructionSpec::HalfJoin { n } if n < 3 => bad(format!("half-join needs n >= 3, got {n}")),
            _ => Ok(()),
        }
    }

    /// Order of the built graph.
    pub fn order(&self) -> usize {
        match *self {
            ConstructionSpec::CompleteBipartite { n, .. }
            | ConstructionSpec::ExtremalNonham { n, .. }
            | ConstructionSpec::HalfJoin { n }
            | ConstructionSpec::Complete { n } => n,
            ConstructionSpec::JoinK2TwoKk { k } => 2 * k + 2,
            ConstructionSpec::Petersen => 10,
        }
    }
}

pub fn build(spec: &ConstructionSpec) -> Result<Graph, ConstructionError> {
    spec.validate()?;
    Ok(match *spec {
        ConstructionSpec::CompleteBipartite { k, n } => Graph::complete_bipartite(k, n - k)?,
        ConstructionSpec::JoinK2TwoKk { k } => {
            let kk = Graph::complete(k)?;
            Graph::complete(2)?.join(&kk.disjoint_union(&kk)?)?
        }
        ConstructionSpec::ExtremalNonham { n, k } => {
            let clique = (1..n - k).flat_map(|j| (0..j).map(move |i| (i, j)));
            let attach = (n - k..n).flat_map(|x| (0..k).map(move |a| (a, x)));
            Graph::from_edges(n, clique.chain(attach))?
        }
        ConstructionSpec::HalfJoin { n } => {
            let p = (n - 1) / 2;
            Graph::complete(p)?.join(&Graph::empty(n - p)?)?
        }
        ConstructionSpec::Petersen => Graph::petersen(),
        ConstructionSpec::Complete { n } => Graph::complete(n)?,
    })
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstructionSpec::CompleteBipartite { k, n } => write!(f, "complete-bipartite {k} {n}"),
            ConstructionSpec::JoinK2TwoKk { k } => write!(f, "join-k2-2kk {k}"),
            ConstructionSpec::ExtremalNonham { n, k } => write!(f, "extremal-nonham {n} {k}"),
            ConstructionSpec::HalfJoin { n } => write!(f, "half-join {n}"),
            ConstructionSpec::Petersen => write!(f, "petersen"),
            ConstructionSpec::Complete { n } => write!(f, "complete {n}"),
        }
    }
}

impl FromStr for ConstructionSpec {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ConstructionError::Parse(s.to_string());
        let words: Vec<&str> = s.split_whitespace().collect();
        let (name, args) = words.split_first().ok_or_else(err)?;
        let nums: Vec<usize> = args
            .iter()
            .map(|a| a.parse().map_err(|_| err()))
            .collect::<Result<_, _>>()?;
        let spec = match (name.to_ascii_lowercase().replace('_', "-").as_str(), nums.as_slice()) {
            ("complete-bipartite", &[k, n]) => ConstructionSpec::CompleteBipartite { k, n },
            ("join-k2-2kk", &[k]) => ConstructionSpec::JoinK2TwoKk { k },
            ("extremal-nonham", &[n, k]) => ConstructionSpec::ExtremalNonham { n, k },
            ("half-join", &[n]) => ConstructionSpec::HalfJoin { n },
            ("petersen", &[]) => ConstructionSpec::Petersen,
            ("complete", &[n]) => ConstructionSpec::Complete { n },
            _ => return Err(err()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RouteError {
    #[error("routing needs 1 <= k <= n/2, got k={k}, n={n}")]
    BadShape { k: usize, n: usize },
    #[error("terminal sequence must have between 2 and k={k} vertices, got {len}")]
    BadLength { len: usize, k: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    OutOfRange { v: usize, n: usize },
    #[error("vertex {0} given twice")]
    Duplicate(usize),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
}

/// A cycle of `K_{k,n-k}` through `terms` in the given cyclic order,
/// listed from the first terminal.
///
/// Consecutive terminals on opposite sides are joined directly; terminals
/// on the same side are bridged through the lowest unused vertex of the
/// other side. Two terminals on opposite sides detour through one spare
/// vertex per side.
pub fn route_ordered_cycle_bipartite(k: usize, n: usize, terms: &[usize]) -> Result<CycleCertificate, RouteError> {
    if k < 1 || 2 * k > n {
        return Err(RouteError::BadShape { k, n });
    }
    if terms.len() < 2 || terms.len() > k {
        return Err(RouteError::BadLength { len: terms.len(), k });
    }
    let mut used = 0u64;
    for &t in terms {
        if t >= n {
            return Err(RouteError::OutOfRange { v: t, n });
        }
        if used >> t & 1 == 1 {
            return Err(RouteError::Duplicate(t));
        }
        used |= 1 << t;
    }
    let in_a = |v: usize| v < k;
    let spare = |side_a: bool, used: &mut u64| -> usize {
        let range = if side_a { 0..k } else { k..n };
        let v = range
            .into_iter()
            .find(|&v| *used >> v & 1 == 0)
            .expect("each side keeps a spare vertex");
        *used |= 1 << v;
        v
    };

    let mut seq = Vec::with_capacity(2 * terms.len());
    if terms.len() == 2 && in_a(terms[0]) != in_a(terms[1]) {
        seq.extend_from_slice(terms);
        let s1 = spare(in_a(terms[0]), &mut used);
        let s2 = spare(in_a(terms[1]), &mut used);
        seq.extend([s1, s2]);
    } else {
        for (i, &t) in terms.iter().enumerate() {
            seq.push(t);
            let next = terms[(i + 1) % terms.len()];
            if in_a(t) == in_a(next) {
                seq.push(spare(!in_a(t), &mut used));
            }
        }
    }
    let g = Graph::complete_bipartite(k, n - k).expect("valid shape");
    Ok(CycleCertificate::new(&g, seq)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_grammar() {
        assert_eq!(
            "extremal-nonham 12 2".parse::<ConstructionSpec>().unwrap(),
            ConstructionSpec::ExtremalNonham { n: 12, k: 2 }
        );
        assert_eq!("petersen".parse::<ConstructionSpec>().unwrap(), ConstructionSpec::Petersen);
        assert_eq!(
            "complete-bipartite 3 8".parse::<ConstructionSpec>().unwrap(),
            ConstructionSpec::CompleteBipartite { k: 3, n: 8 }
        );
        for spec in [
            ConstructionSpec::JoinK2TwoKk { k: 3 },
            ConstructionSpec::HalfJoin { n: 9 },
            ConstructionSpec::Complete { n: 4 },
        ] {
            assert_eq!(spec.to_string().parse::<ConstructionSpec>().unwrap(), spec);
        }
        assert!(matches!("petersen 3".parse::<ConstructionSpec>(), Err(ConstructionError::Parse(_))));
        assert!(matches!("wheel 5".parse::<ConstructionSpec>(), Err(ConstructionError::Parse(_))));
        assert!(matches!(
            "extremal-nonham 4 2".parse::<ConstructionSpec>(),
            Err(ConstructionError::InvalidParameters(_))
        ));
        assert!(matches!(
            "complete-bipartite 5 5".parse::<ConstructionSpec>(),
            Err(ConstructionError::InvalidParameters(_))
        ));
    }

    #[test]
    fn sizes() {
        let e = build(&ConstructionSpec::ExtremalNonham { n: 12, k: 2 }).unwrap();
        assert_eq!((e.order(), e.edge_count()), (12, 49));
        assert!(e.has_edge(10, 0) && e.has_edge(11, 1) && !e.has_edge(10, 2) && !e.has_edge(10, 11));
        let j = build(&ConstructionSpec::JoinK2TwoKk { k: 3 }).unwrap();
        assert_eq!((j.order(), j.edge_count()), (8, 19));
        let h = build(&ConstructionSpec::HalfJoin { n: 9 }).unwrap();
        assert_eq!((h.order(), h.edge_count()), (9, 6 + 4 * 5));
        let b = build(&ConstructionSpec::CompleteBipartite { k: 3, n: 10 }).unwrap();
        assert_eq!(b.edge_count(), 21);
        assert_eq!(ConstructionSpec::JoinK2TwoKk { k: 3 }.order(), 8);
    }

    #[test]
    fn routing_follows_the_procedure() {
        let c = route_ordered_cycle_bipartite(3, 8, &[0, 1, 3]).unwrap();
        assert_eq!(c.vertices(), &[0, 4, 1, 3]);
        let c = route_ordered_cycle_bipartite(2, 6, &[0, 1]).unwrap();
        assert_eq!(c.vertices(), &[0, 2, 1, 3]);
        let c = route_ordered_cycle_bipartite(2, 6, &[0, 2]).unwrap();
        assert_eq!(c.vertices(), &[0, 2, 1, 3]);
        let c = route_ordered_cycle_bipartite(3, 6, &[3, 4, 5]).unwrap();
        assert_eq!(c.vertices(), &[3, 0, 4, 1, 5, 2]);
        assert!(c.visits_in_order(&[3, 4, 5]));
    }

    #[test]
    fn routing_errors() {
        assert_eq!(route_ordered_cycle_bipartite(4, 7, &[0, 1]), Err(RouteError::BadShape { k: 4, n: 7 }));
        assert_eq!(
            route_ordered_cycle_bipartite(2, 5, &[0, 1, 2]),
            Err(RouteError::BadLength { len: 3, k: 2 })
        );
        assert_eq!(route_ordered_cycle_bipartite(2, 5, &[0]), Err(RouteError::BadLength { len: 1, k: 2 }));
        assert_eq!(route_ordered_cycle_bipartite(2, 5, &[0, 0]), Err(RouteError::Duplicate(0)));
        assert_eq!(
            route_ordered_cycle_bipartite(2, 5, &[0, 5]),
            Err(RouteError::OutOfRange { v: 5, n: 5 })
        );
    }
}
