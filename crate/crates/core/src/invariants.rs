//! Degree, connectivity and independence invariants.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::{self, Budget, CycleError};
use crate::graph::{bits, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("k = {k} is out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("invariant undefined on the empty graph")]
    EmptyGraph,
}

pub fn min_degree(g: &Graph) -> usize {
    (0..g.order()).map(|v| g.degree(v)).min().unwrap_or(0)
}

pub fn max_degree(g: &Graph) -> usize {
    (0..g.order()).map(|v| g.degree(v)).max().unwrap_or(0)
}

/// Degrees in vertex order.
pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    (0..g.order()).map(|v| g.degree(v)).collect()
}

pub fn edge_count(g: &Graph) -> usize {
    g.edge_count()
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths for a
/// non-adjacent pair, via unit vertex capacities on the split digraph.
pub fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    assert!(s != t && !g.has_edge(s, t), "local connectivity needs a non-adjacent pair");
    let n = g.order();
    // node 2v = v_in, 2v+1 = v_out
    let m = 2 * n;
    let big = n as i32 + 1;
    let mut cap = vec![0i32; m * m];
    for v in 0..n {
        cap[(2 * v) * m + 2 * v + 1] = if v == s || v == t { big } else { 1 };
        for w in bits(g.neighbors(v)) {
            cap[(2 * v + 1) * m + 2 * w] = big;
        }
    }
    let (src, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    let mut prev = vec![usize::MAX; m];
    let mut queue = VecDeque::with_capacity(m);
    loop {
        prev.fill(usize::MAX);
        prev[src] = src;
        queue.clear();
        queue.push_back(src);
        'bfs: while let Some(x) = queue.pop_front() {
            for y in 0..m {
                if prev[y] == usize::MAX && cap[x * m + y] > 0 {
                    prev[y] = x;
                    if y == sink {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut y = sink;
        while y != src {
            let x = prev[y];
            cap[x * m + y] -= 1;
            cap[y * m + x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// κ(G): the minimum number of vertices whose removal disconnects `g`,
/// with κ(K_n) = n-1 and κ = 0 for disconnected graphs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    // κ ≤ δ, and a minimum separator misses one of the first κ+1 vertices.
    let mut best = min_degree(g);
    let all = g.vertex_mask();
    let mut i = 0;
    while i <= best && i < n {
        for j in bits(all & !g.neighbors(i) & !(1u64 << i)) {
            best = best.min(local_connectivity(g, i, j));
        }
        i += 1;
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependentSet {
    pub size: usize,
    pub vertices: Vec<usize>,
}

/// α(G) with a maximum independent set, by branch and bound on a maximum
/// degree vertex, bounded by a greedy clique cover.
pub fn independence_number(g: &Graph) -> IndependentSet {
    let mut best = (0usize, 0u64);
    mis_search(g, g.vertex_mask(), 0, 0, &mut best);
    let vertices: Vec<usize> = bits(best.1).collect();
    debug_assert!(vertices
        .iter()
        .all(|&v| g.neighbors(v) & best.1 == 0));
    IndependentSet {
        size: best.0,
        vertices,
    }
}

fn mis_search(g: &Graph, mut cand: u64, mut size: usize, mut chosen: u64, best: &mut (usize, u64)) {
    // vertices with no neighbour among the candidates are always taken
    loop {
        let free = bits(cand)
            .filter(|&v| g.neighbors(v) & cand == 0)
            .fold(0u64, |m, v| m | 1 << v);
        if free == 0 {
            break;
        }
        size += free.count_ones() as usize;
        chosen |= free;
        cand &= !free;
    }
    if cand == 0 {
        if size > best.0 {
            *best = (size, chosen);
        }
        return;
    }
    if size + clique_cover_size(g, cand) <= best.0 {
        return;
    }
    let v = bits(cand)
        .max_by_key(|&v| ((g.neighbors(v) & cand).count_ones(), std::cmp::Reverse(v)))
        .expect("non-empty candidate set");
    mis_search(g, cand & !g.neighbors(v) & !(1 << v), size + 1, chosen | 1 << v, best);
    mis_search(g, cand & !(1 << v), size, chosen, best);
}

/// Number of cliques in a greedy clique cover of `g[within]`: an upper
/// bound on its independence number.
fn clique_cover_size(g: &Graph, within: u64) -> usize {
    let mut rest = within;
    let mut count = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let mut clique = 1u64 << v;
        let mut cand = g.neighbors(v) & rest;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            clique |= 1 << w;
            cand &= g.neighbors(w);
        }
        rest &= !clique;
        count += 1;
    }
    count
}

/// σ_k(G): the minimum degree sum over independent sets of size `k`, or
/// `None` when α(G) < k.
pub fn sigma_k(g: &Graph, k: usize) -> Result<Option<usize>, InvariantError> {
    let n = g.order();
    if k == 0 || k > n {
        return Err(InvariantError::KOutOfRange { k, n });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut best = None;
    sigma_search(g, &order, 0, k, 0, 0, &mut best);
    Ok(best)
}

fn sigma_search(
    g: &Graph,
    order: &[usize],
    from: usize,
    need: usize,
    chosen: u64,
    sum: usize,
    best: &mut Option<usize>,
) {
    if need == 0 {
        if best.is_none_or(|b| sum < b) {
            *best = Some(sum);
        }
        return;
    }
    for i in from..order.len() {
        if order.len() - i < need {
            return;
        }
        let v = order[i];
        // degrees are non-decreasing along `order`
        if best.is_some_and(|b| sum + need * g.degree(v) >= b) {
            return;
        }
        if g.neighbors(v) & chosen == 0 {
            sigma_search(g, order, i + 1, need - 1, chosen | 1 << v, sum + g.degree(v), best);
        }
    }
}

/// Every invariant of one graph that the claim checker consumes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub connectivity: usize,
    pub independence: usize,
    pub independent_set: Vec<usize>,
    pub circumference: usize,
    pub longest_cycle: Option<Vec<usize>>,
    pub hamiltonian: bool,
    /// σ_k for each requested k; `None` when no independent k-set exists.
    pub sigma: BTreeMap<usize, Option<usize>>,
}

impl InvariantReport {
    /// Computes the report; `sigma_ks` selects which σ_k to include
    /// (out-of-range values are skipped).
    pub fn compute(g: &Graph, sigma_ks: &[usize], budget: &Budget) -> Result<Self, CycleError> {
        let n = g.order();
        let connectivity = vertex_connectivity(g);
        let delta = min_degree(g);
        let alpha = independence_number(g);
        let (circumference, cert) = cycles::circumference(g, budget)?;
        let sigma = sigma_ks
            .iter()
            .filter_map(|&k| sigma_k(g, k).ok().map(|s| (k, s)))
            .collect::<BTreeMap<_, _>>();

        assert!(connectivity <= delta || n <= 1, "κ ≤ δ violated");
        if n >= 1 {
            assert!((1..=n).contains(&alpha.size));
            if let Some(Some(s1)) = sigma.get(&1) {
                assert_eq!(*s1, delta, "σ_1 must equal δ");
            }
        }
        for (&k, s) in &sigma {
            if let Some(s) = s {
                assert!(*s >= k * delta);
            }
        }
        Ok(InvariantReport {
            graph6: crate::graph6::write_graph6(g),
            n,
            m: g.edge_count(),
            min_degree: delta,
            connectivity,
            independence: alpha.size,
            independent_set: alpha.vertices,
            circumference,
            longest_cycle: cert.map(|c| c.vertices().to_vec()),
            hamiltonian: n >= 3 && circumference == n,
            sigma,
        })
    }
}
