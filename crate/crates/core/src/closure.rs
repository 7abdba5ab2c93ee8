//! Bondy–Chvátal closure: repeatedly join non-adjacent pairs whose degree
//! sum is at least n. The fixed point does not depend on the join order and
//! preserves hamiltonicity.

use std::collections::VecDeque;

use rand::Rng;

use crate::graph::{bits, Graph};

/// The closure, joining eligible pairs in first-in first-out order.
pub fn bondy_chvatal_closure(g: &Graph) -> Graph {
    close(g, |queue: &mut VecDeque<(usize, usize)>| queue.pop_front())
}

/// The closure, joining eligible pairs in a random order drawn from `rng`.
pub fn bondy_chvatal_closure_shuffled<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    close(g, |queue: &mut VecDeque<(usize, usize)>| {
        if queue.is_empty() {
            None
        } else {
            let i = rng.random_range(0..queue.len());
            queue.swap_remove_back(i)
        }
    })
}

/// Worklist closure. Degrees only grow, so a pair can only become eligible
/// when one of its endpoints gains an edge; only those pairs are re-queued.
fn close<F>(g: &Graph, mut next: F) -> Graph
where
    F: FnMut(&mut VecDeque<(usize, usize)>) -> Option<(usize, usize)>,
{
    let n = g.order();
    let mut adj = g.rows().to_vec();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queued = vec![0u64; n];
    let mut queue = VecDeque::new();
    for (u, v) in g.non_edges() {
        if deg[u] + deg[v] >= n {
            queue.push_back((u, v));
            queued[u] |= 1 << v;
        }
    }
    let all = g.vertex_mask();
    while let Some((u, v)) = next(&mut queue) {
        if adj[u] >> v & 1 == 1 {
            continue;
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        deg[u] += 1;
        deg[v] += 1;
        for x in [u, v] {
            for y in bits(all & !adj[x] & !(1 << x)) {
                let (a, b) = if x < y { (x, y) } else { (y, x) };
                if deg[a] + deg[b] >= n && queued[a] >> b & 1 == 0 {
                    queued[a] |= 1 << b;
                    queue.push_back((a, b));
                }
            }
        }
    }
    Graph::from_adjacency(adj).expect("closure keeps the graph simple")
}

/// `cl(G) = G`.
pub fn is_closed(g: &Graph) -> bool {
    bondy_chvatal_closure(g) == *g
}

/// Every non-adjacent pair has degree sum at most n-1.
pub fn closed_nonadjacent_bound_holds(g: &Graph) -> bool {
    let n = g.order();
    g.non_edges().all(|(u, v)| g.degree(u) + g.degree(v) < n)
}
