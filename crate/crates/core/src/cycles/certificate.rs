use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("vertex {0} repeated")]
    Repeated(usize),
    #[error("{0} and {1} are consecutive but not adjacent")]
    NotAdjacent(usize, usize),
}

/// A cycle given as its vertex sequence; the closing edge runs from the
/// last vertex back to the first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleCertificate(Vec<usize>);

impl CycleCertificate {
    /// Wraps and validates a vertex sequence against `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, CertificateError> {
        let c = CycleCertificate(vertices);
        c.validate(g)?;
        Ok(c)
    }

    /// Internal constructor for sequences built by a solver; validated in
    /// debug builds only.
    pub(crate) fn trusted(g: &Graph, vertices: Vec<usize>) -> Self {
        let c = CycleCertificate(vertices);
        debug_assert_eq!(c.validate(g), Ok(()), "solver produced an invalid cycle");
        c
    }

    pub fn validate(&self, g: &Graph) -> Result<(), CertificateError> {
        let vs = &self.0;
        if vs.len() < 3 {
            return Err(CertificateError::TooShort(vs.len()));
        }
        let mut seen = 0u64;
        for &v in vs {
            if v >= g.order() {
                return Err(CertificateError::OutOfRange(v));
            }
            if seen >> v & 1 == 1 {
                return Err(CertificateError::Repeated(v));
            }
            seen |= 1 << v;
        }
        for (i, &v) in vs.iter().enumerate() {
            let w = vs[(i + 1) % vs.len()];
            if !g.has_edge(v, w) {
                return Err(CertificateError::NotAdjacent(v, w));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1 << v)
    }

    /// Rotated to start at the smallest vertex, oriented so the smaller of
    /// its two cycle neighbours comes second.
    pub fn canonical(mut self) -> Self {
        let (i, _) = self
            .0
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| *v)
            .expect("non-empty cycle");
        self.0.rotate_left(i);
        if self.0.len() > 2 && self.0[self.0.len() - 1] < self.0[1] {
            self.0[1..].reverse();
        }
        self
    }

    /// True if some traversal direction of the cycle meets `seq` in that
    /// cyclic order.
    pub fn visits_in_order(&self, seq: &[usize]) -> bool {
        let pos: Option<Vec<usize>> = seq
            .iter()
            .map(|t| self.0.iter().position(|v| v == t))
            .collect();
        let Some(pos) = pos else {
            return false;
        };
        let k = pos.len();
        if k <= 2 {
            return true;
        }
        let descents = (0..k).filter(|&i| pos[(i + 1) % k] < pos[i]).count();
        descents == 1 || descents == k - 1
    }
}
