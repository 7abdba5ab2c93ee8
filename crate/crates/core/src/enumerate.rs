//! Isomorph-free generation of all graphs on n vertices by canonical
//! augmentation: a graph on n vertices is emitted from its parent on n-1
//! vertices only if the added vertex is the canonical one to delete.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::canonical_form;
use crate::graph::{bits, Graph};
use crate::graph6::write_graph6;

/// Largest order the built-in enumeration serves by default.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 9;

/// Number of non-isomorphic graphs on n vertices, n = 0..=10.
pub const GRAPH_COUNTS: [usize; 11] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("built-in enumeration stops at n = {limit} (asked for {n}); supply a graph6 corpus instead")]
    OverLimit { n: usize, limit: usize },
}

/// All graphs on `n` vertices up to isomorphism, in canonical form, sorted
/// by graph6 text.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    enumerate_graphs_with_limit(n, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_graphs_with_limit(n: usize, limit: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n > limit {
        return Err(EnumerateError::OverLimit { n, limit });
    }
    let mut level = vec![Graph::empty(0).expect("empty graph")];
    for _ in 0..n {
        level = level.par_iter().flat_map_iter(children).collect();
    }
    let mut keyed: Vec<(String, Graph)> = level.into_iter().map(|g| (write_graph6(&g), g)).collect();
    keyed.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

/// Canonical children of a canonical parent.
fn children(parent: &Graph) -> Vec<Graph> {
    let p = parent.order();
    let n = p + 1;
    let deg: Vec<u32> = (0..p).map(|v| parent.degree(v) as u32).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in 0u64..(1 << p) {
        let d = s.count_ones();
        // the new vertex must have minimum degree in the child
        if (0..p).any(|v| deg[v] + ((s >> v & 1) as u32) < d) {
            continue;
        }
        let mut adj = parent.rows().to_vec();
        for v in bits(s) {
            adj[v] |= 1 << p;
        }
        adj.push(s);
        let child = Graph::from_adjacency(adj).expect("valid extension");
        let canon = canonical_form(&child);
        // canonical deletion: the minimum-degree vertex with the largest label
        let w = (0..n)
            .filter(|&v| child.degree(v) == d as usize)
            .max_by_key(|&v| canon.labeling[v])
            .expect("new vertex has minimum degree");
        if w != p && canonical_form(&child.delete_vertex(w)).graph != *parent {
            continue;
        }
        if seen.insert(canon.graph.rows().to_vec()) {
            out.push(canon.graph);
        }
    }
    out
}
