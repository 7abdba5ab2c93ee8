#![allow(dead_code)]

use cyclability::Graph;

/// Every labelled graph on `n` vertices.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |code| {
        Graph::from_edges(
            n,
            pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &e)| e),
        )
        .unwrap()
    })
}

/// Longest cycle by trying every vertex order of every subset.
pub fn naive_circumference(g: &Graph) -> usize {
    fn grow(g: &Graph, path: &mut Vec<usize>, used: u64, best: &mut usize) {
        let (start, last) = (path[0], *path.last().unwrap());
        if path.len() >= 3 && g.has_edge(last, start) {
            *best = (*best).max(path.len());
        }
        for w in start + 1..g.order() {
            if used >> w & 1 == 0 && g.has_edge(last, w) {
                path.push(w);
                grow(g, path, used | 1 << w, best);
                path.pop();
            }
        }
    }
    let mut best = 0;
    for s in 0..g.order() {
        grow(g, &mut vec![s], 1 << s, &mut best);
    }
    best
}

fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|m| m.count_ones() as usize == k).collect()
}

fn connected_within(g: &Graph, within: u64) -> bool {
    within == 0 || g.component_of(within.trailing_zeros() as usize, within) == within
}

/// κ by trying every vertex set of increasing size.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.order();
    let all = g.vertex_mask();
    for k in 0..n.saturating_sub(1) {
        for x in subsets_of_size(n, k) {
            if !connected_within(g, all & !x) {
                return k;
            }
        }
    }
    n.saturating_sub(1)
}

/// α by trying every vertex subset.
pub fn brute_independence(g: &Graph) -> usize {
    (0u64..1 << g.order())
        .filter(|&m| (0..g.order()).all(|v| m >> v & 1 == 0 || g.neighbors(v) & m == 0))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Hamiltonicity by permutations.
pub fn brute_hamiltonian(g: &Graph) -> bool {
    g.order() >= 3 && naive_circumference(g) == g.order()
}

/// Vertex sets of all cycles, by the same path growth as the naive
/// circumference.
pub fn cycle_masks(g: &Graph) -> Vec<u64> {
    fn grow(g: &Graph, last: usize, start: usize, len: usize, used: u64, out: &mut Vec<u64>) {
        if len >= 3 && g.has_edge(last, start) {
            out.push(used);
        }
        for w in start + 1..g.order() {
            if used >> w & 1 == 0 && g.has_edge(last, w) {
                grow(g, w, start, len + 1, used | 1 << w, out);
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.order() {
        grow(g, s, s, 1, 1 << s, &mut out);
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Every k-subset lies inside the vertex set of some cycle.
pub fn brute_k_cyclable(g: &Graph, k: usize) -> bool {
    let cycles = cycle_masks(g);
    subsets_of_size(g.order(), k)
        .into_iter()
        .all(|s| cycles.iter().any(|&c| c & s == s))
}
