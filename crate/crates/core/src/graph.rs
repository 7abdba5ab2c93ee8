//! Immutable simple graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Vertices are the dense indices `0..n`. Each vertex owns one adjacency
//! word, so neighbourhood algebra is plain bit arithmetic on `u64`.

use std::fmt;

use rand::Rng;
use thiserror::Error;

/// Hard ceiling on the order of a [`Graph`]: one adjacency row per machine word.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {n} exceeds the vertex cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Mask with the low `n` bits set.
#[inline]
pub const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the indices of the set bits of `mask` in increasing order.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A finite, undirected, simple graph.
///
/// `adj[v]` holds the neighbour set of `v`. The rows are symmetric, have a
/// clear diagonal, and never set a bit at or above `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        let all = low_bits(n);
        let adj = (0..n).map(|v| all & !(1u64 << v)).collect();
        Ok(Graph { n, adj })
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `K_{a,b}` with side A = `0..a` and side B = `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        Graph::empty(a)?.join(&Graph::empty(b)?)
    }

    /// The Petersen graph as the Kneser graph K(5,2): vertices are the
    /// 2-subsets of {0,..,4} in lexicographic order, adjacent when disjoint.
    pub fn petersen() -> Self {
        let pairs: Vec<u64> = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (1u64 << i) | (1u64 << j)))
            .collect();
        let mut edges = Vec::with_capacity(15);
        for (u, pu) in pairs.iter().enumerate() {
            for (v, pv) in pairs.iter().enumerate().skip(u + 1) {
                if pu & pv == 0 {
                    edges.push((u, v));
                }
            }
        }
        Self::from_edges(10, edges).expect("petersen construction is valid")
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        check_order(n)?;
        let outside = !low_bits(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & outside != 0 {
                let w = (row & outside).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { v: w, n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            for w in bits(row) {
                if adj[w] >> v & 1 == 0 {
                    return Err(GraphError::InvalidParameter(format!(
                        "adjacency is not symmetric at ({v},{w})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            for u in 0..v {
                if rng.random_bool(p) {
                    g.adj[u] |= 1 << v;
                    g.adj[v] |= 1 << u;
                }
            }
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { v: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Neighbour set of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    /// Unordered non-adjacent pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.vertex_mask();
        (0..self.n).flat_map(move |u| {
            bits(all & !self.adj[u] & !low_bits(u + 1)).map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| all & !self.adj[v] & !(1u64 << v))
            .collect();
        self.checked(adj)
    }

    /// `self ∨ other`: disjoint copies plus every cross edge. Vertices of
    /// `other` are shifted by `self.order()`.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = self.vertex_mask();
        let right = g.vertex_mask() & !left;
        for v in 0..g.n {
            g.adj[v] |= if v < self.n { right } else { left };
        }
        Ok(g.validated())
    }

    /// Index-shifted union with no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        check_order(n)?;
        let shift = self.n;
        let adj = self
            .adj
            .iter()
            .copied()
            .chain(other.adj.iter().map(|&r| r << shift))
            .collect();
        Ok(self.checked(adj))
    }

    /// Copy with the edge `uv` added (no-op if present).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// The subgraph induced on `mask`, relabelled to `0..popcount(mask)`
    /// preserving vertex order.
    pub fn induced(&self, mask: u64) -> Graph {
        let mask = mask & self.vertex_mask();
        let keep: Vec<usize> = bits(mask).collect();
        let adj = keep
            .iter()
            .map(|&v| compress(self.adj[v] & mask, mask))
            .collect();
        self.checked(adj)
    }

    /// `G - v`, with higher indices shifted down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertex_mask() & !(1u64 << v))
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            for w in bits(self.adj[v]) {
                adj[perm[v]] |= 1 << perm[w];
            }
        }
        self.checked(adj)
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_of(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced on `within`, each as a
    /// mask, ordered by smallest vertex.
    pub fn components(&self, within: u64) -> Vec<u64> {
        let mut rest = within & self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.component_of(rest.trailing_zeros() as usize, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0, self.vertex_mask()) == self.vertex_mask()
    }

    fn checked(&self, adj: Vec<u64>) -> Graph {
        Graph { n: adj.len(), adj }.validated()
    }

    fn validated(self) -> Graph {
        debug_assert!(
            Graph::from_adjacency(self.adj.clone()).is_ok(),
            "graph invariants violated"
        );
        self
    }
}

/// Packs the bits of `row` selected by `mask` into the low bits.
#[inline]
pub fn compress(row: u64, mask: u64) -> u64 {
    let mut out = 0;
    for (i, v) in bits(mask).enumerate() {
        out |= (row >> v & 1) << i;
    }
    out
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n > MAX_VERTICES {
        Err(GraphError::TooLarge { n, cap: MAX_VERTICES })
    } else {
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn assert_simple(g: &Graph) {
        Graph::from_adjacency(g.rows().to_vec()).unwrap();
    }

    #[test]
    fn primitive_families() {
        assert_eq!(Graph::complete(4).unwrap().edge_count(), 6);
        let c5 = Graph::cycle(5).unwrap();
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(Graph::path(4).unwrap().edge_count(), 3);
        assert_eq!(Graph::path(0).unwrap().order(), 0);
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::complete(65).is_err());
    }

    #[test]
    fn petersen_is_cubic_on_ten_vertices() {
        let p = Graph::petersen();
        assert_eq!(p.order(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_simple(&p);
    }

    #[test]
    fn complement_partitions_pairs() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 0..12 {
            let g = Graph::gnp(n, 0.4, &mut rng).unwrap();
            let h = g.complement();
            assert_simple(&h);
            assert_eq!(g.edge_count() + h.edge_count(), n * n.saturating_sub(1) / 2);
            assert_eq!(h.complement(), g);
        }
        assert_eq!(Graph::complete(6).unwrap().complement(), Graph::empty(6).unwrap());
    }

    #[test]
    fn join_and_union() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.join(&k1).unwrap(), Graph::complete(2).unwrap());
        assert_eq!(k1.disjoint_union(&k1).unwrap(), Graph::empty(2).unwrap());

        let k3 = Graph::complete(3).unwrap();
        let g = Graph::complete(2)
            .unwrap()
            .join(&k3.disjoint_union(&k3).unwrap())
            .unwrap();
        assert_eq!(g.order(), 8);
        // 1 edge in K2, 3 + 3 in the triangles, 2 * 6 cross edges
        assert_eq!(g.edge_count(), 1 + 3 + 3 + 12);

        let kab = Graph::empty(3).unwrap().join(&Graph::empty(4).unwrap()).unwrap();
        assert_eq!(kab, Graph::complete_bipartite(3, 4).unwrap());
        assert_eq!(kab.edge_count(), 12);
        assert!(!kab.has_edge(0, 1) && kab.has_edge(0, 3));

        let big = Graph::empty(40).unwrap();
        assert!(matches!(big.join(&big), Err(GraphError::TooLarge { n: 80, .. })));
    }

    #[test]
    fn join_edge_count_is_additive_plus_cross() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for _ in 0..50 {
            let a = Graph::gnp(rng.random_range(0..10), 0.5, &mut rng).unwrap();
            let b = Graph::gnp(rng.random_range(0..10), 0.5, &mut rng).unwrap();
            let j = a.join(&b).unwrap();
            assert_simple(&j);
            assert_eq!(
                j.edge_count(),
                a.edge_count() + b.edge_count() + a.order() * b.order()
            );
            let u = a.disjoint_union(&b).unwrap();
            assert_eq!(u.edge_count(), a.edge_count() + b.edge_count());
        }
    }

    #[test]
    fn induced_and_delete() {
        let c5 = Graph::cycle(5).unwrap();
        let p4 = c5.delete_vertex(0);
        assert_eq!(p4.order(), 4);
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(c5.induced(0b10101).edge_count(), 1);
    }

    #[test]
    fn from_adjacency_rejects_bad_rows() {
        assert!(matches!(
            Graph::from_adjacency(vec![0b1, 0]),
            Err(GraphError::SelfLoop(0))
        ));
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b100, 0]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn components_in_order() {
        let g = Graph::from_edges(6, [(0, 3), (1, 2), (4, 5)]).unwrap();
        assert_eq!(g.components(g.vertex_mask()), vec![0b1001, 0b0110, 0b110000]);
        assert!(!g.is_connected());
    }
}
