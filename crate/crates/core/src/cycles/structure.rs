//! Subset dynamic program over simple paths.
//!
//! For every vertex mask `M` of a block, `ends[M]` is the set of vertices
//! `v` such that some path starts at `min(M)`, visits exactly `M` and stops
//! at `v`. `M` is the vertex set of a cycle iff `|M| >= 3` and some end is
//! adjacent to `min(M)`. A set `S` is cyclable iff it lies below such an
//! `M`, which `covered` records as a downward closure.

use crate::graph::{bits, compress, Graph};

use super::{Budget, Clock, CycleCertificate, CycleError};

/// One connected component of the 2-core, with its path table.
pub(crate) struct Block {
    /// local index -> vertex of the host graph
    pub verts: Vec<usize>,
    pub mask: u64,
    pub adj: Vec<u32>,
    ends: Vec<u32>,
    covered: Vec<bool>,
    /// vertex set of a longest cycle (local), 0 if acyclic
    longest: u32,
}

impl Block {
    fn build(g: &Graph, mask: u64, clock: &Clock) -> Result<Block, CycleError> {
        let verts: Vec<usize> = bits(mask).collect();
        let c = verts.len();
        let adj: Vec<u32> = verts
            .iter()
            .map(|&v| compress(g.neighbors(v) & mask, mask) as u32)
            .collect();
        let size = 1usize << c;
        let mut ends = vec![0u32; size];
        for s in 0..c {
            ends[1 << s] = 1 << s;
        }
        let mut covered = vec![false; size];
        let mut longest = 0u32;
        for m in 1..size {
            if m & 0x3fff == 0 {
                clock.check()?;
            }
            let e = ends[m];
            if e == 0 {
                continue;
            }
            let m32 = m as u32;
            let s = m32.trailing_zeros();
            // only vertices above the start, so each path is rooted at min(M)
            let above = !((2u32 << s) - 1);
            for v in bits(u64::from(e)) {
                for w in bits(u64::from(adj[v] & !m32 & above)) {
                    ends[m | 1 << w] |= 1 << w;
                }
            }
            if m32.count_ones() >= 3 && e & adj[s as usize] != 0 {
                covered[m] = true;
                if m32.count_ones() > longest.count_ones() {
                    longest = m32;
                }
            }
        }
        // downward closure: S is covered if some S + v is
        for m in (1..size).rev() {
            if covered[m] {
                continue;
            }
            let mut rest = !(m as u32) & ((size - 1) as u32);
            while rest != 0 {
                let w = rest.trailing_zeros();
                if covered[m | 1 << w] {
                    covered[m] = true;
                    break;
                }
                rest &= rest - 1;
            }
        }
        Ok(Block {
            verts,
            mask,
            adj,
            ends,
            covered,
            longest,
        })
    }

    fn is_cycle_set(&self, m: u32) -> bool {
        m.count_ones() >= 3 && self.ends[m as usize] & self.adj[m.trailing_zeros() as usize] != 0
    }

    /// Local vertex sequence of a cycle with exact vertex set `m`.
    fn cycle_on(&self, m: u32) -> Vec<usize> {
        debug_assert!(self.is_cycle_set(m));
        let s = m.trailing_zeros() as usize;
        let mut cur = (self.ends[m as usize] & self.adj[s]).trailing_zeros() as usize;
        let mut mask = m;
        let mut seq = vec![cur];
        while mask != 1 << s {
            mask &= !(1 << cur);
            let prev = (self.ends[mask as usize] & self.adj[cur]).trailing_zeros() as usize;
            seq.push(prev);
            cur = prev;
        }
        seq.reverse();
        seq
    }

    fn cycle_covering(&self, s: u32) -> Option<Vec<usize>> {
        if !self.covered[s as usize] {
            return None;
        }
        let all = ((1u64 << self.adj.len()) - 1) as u32;
        let mut m = s;
        while !self.is_cycle_set(m) {
            let mut rest = all & !m;
            let mut grown = false;
            while rest != 0 {
                let w = rest.trailing_zeros();
                if self.covered[(m | 1 << w) as usize] {
                    m |= 1 << w;
                    grown = true;
                    break;
                }
                rest &= rest - 1;
            }
            assert!(grown, "downward closure is inconsistent");
        }
        Some(self.cycle_on(m))
    }

    fn globalize(&self, g: &Graph, local: Vec<usize>) -> CycleCertificate {
        let seq = local.into_iter().map(|i| self.verts[i]).collect();
        CycleCertificate::trusted(g, seq).canonical()
    }
}

/// Precomputed cycle structure of one graph; answers circumference,
/// hamiltonicity and terminal cyclability queries.
pub struct CycleStructure {
    graph: Graph,
    core: u64,
    blocks: Vec<Block>,
}

/// Vertices that survive iterated deletion of vertices of degree < 2.
pub fn two_core(g: &Graph) -> u64 {
    let mut alive = g.vertex_mask();
    loop {
        let low = bits(alive)
            .filter(|&v| (g.neighbors(v) & alive).count_ones() < 2)
            .fold(0u64, |m, v| m | 1 << v);
        if low == 0 {
            return alive;
        }
        alive &= !low;
    }
}

impl CycleStructure {
    pub fn new(g: &Graph, budget: &Budget) -> Result<Self, CycleError> {
        let clock = budget.clock();
        Self::with_clock(g, budget, &clock)
    }

    pub(crate) fn with_clock(g: &Graph, budget: &Budget, clock: &Clock) -> Result<Self, CycleError> {
        let core = two_core(g);
        let comps = g.components(core);
        if let Some(big) = comps.iter().map(|c| c.count_ones() as usize).max() {
            if big > budget.max_exact_vertices {
                return Err(CycleError::TooLarge {
                    vertices: big,
                    cap: budget.max_exact_vertices,
                });
            }
        }
        let blocks = comps
            .into_iter()
            .map(|c| Block::build(g, c, clock))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CycleStructure {
            graph: g.clone(),
            core,
            blocks,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Vertices lying on at least one cycle candidate (the 2-core).
    pub fn core(&self) -> u64 {
        self.core
    }

    pub fn circumference(&self) -> (usize, Option<CycleCertificate>) {
        let best = self
            .blocks
            .iter()
            .filter(|b| b.longest != 0)
            .max_by_key(|b| (b.longest.count_ones(), std::cmp::Reverse(b.verts[0])));
        match best {
            None => (0, None),
            Some(b) => {
                let cert = b.globalize(&self.graph, b.cycle_on(b.longest));
                (cert.len(), Some(cert))
            }
        }
    }

    pub fn hamiltonian_cycle(&self) -> Option<CycleCertificate> {
        let n = self.graph.order();
        if n < 3 || self.core != self.graph.vertex_mask() || self.blocks.len() != 1 {
            return None;
        }
        let b = &self.blocks[0];
        let full = ((1u64 << n) - 1) as u32;
        b.is_cycle_set(full)
            .then(|| b.globalize(&self.graph, b.cycle_on(full)))
    }

    /// A cycle through every vertex of `set`, if one exists.
    pub fn cycle_through(&self, set: u64) -> Option<CycleCertificate> {
        if set & !self.core != 0 {
            return None;
        }
        let b = self.blocks.iter().find(|b| set & !b.mask == 0)?;
        let local = compress(set, b.mask) as u32;
        b.cycle_covering(local)
            .map(|seq| b.globalize(&self.graph, seq))
    }

    /// Whether `set` lies on a common cycle, without building a certificate.
    pub fn is_cyclable(&self, set: u64) -> bool {
        if set & !self.core != 0 {
            return false;
        }
        match self.blocks.iter().find(|b| set & !b.mask == 0) {
            Some(b) => b.covered[compress(set, b.mask) as usize],
            None => false,
        }
    }

    /// `profile[k]` is true iff every k-subset of the vertices is cyclable,
    /// for `2 <= k <= n`; entries 0 and 1 are unused and false.
    pub fn cyclability_profile(&self) -> Vec<bool> {
        let n = self.graph.order();
        let mut out = vec![false; n + 1];
        if n < 3 || self.core != self.graph.vertex_mask() || self.blocks.len() != 1 {
            return out;
        }
        let b = &self.blocks[0];
        for slot in out.iter_mut().skip(2) {
            *slot = true;
        }
        for (m, &cov) in b.covered.iter().enumerate() {
            if !cov {
                let k = (m as u32).count_ones() as usize;
                if k >= 2 {
                    out[k] = false;
                }
            }
        }
        out
    }

    /// Local view used by the ordered-cycle solver: the block holding `set`.
    pub(crate) fn block_of(&self, set: u64) -> Option<&Block> {
        if set & !self.core != 0 {
            return None;
        }
        self.blocks.iter().find(|b| set & !b.mask == 0)
    }
}
