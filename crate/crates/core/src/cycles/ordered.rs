//! Cycles through a terminal sequence in a prescribed cyclic order.
//!
//! Paths grow from the first terminal; a terminal may only be entered when
//! all earlier terminals are already on the path, so every state with all
//! terminals visited spells them out in order. States are expanded layer by
//! layer (by path size), which returns a shortest ordered cycle first.

use crate::graph::{bits, compress};

use super::structure::Block;
use super::{Clock, CycleError};

pub(crate) struct OrderedSolver<'a> {
    block: &'a Block,
    ends: Vec<u32>,
    touched: Vec<u32>,
}

impl<'a> OrderedSolver<'a> {
    pub fn new(block: &'a Block) -> Self {
        OrderedSolver {
            block,
            ends: vec![0; 1 << block.adj.len()],
            touched: Vec::new(),
        }
    }

    /// Local cycle sequence through `terms` (host-graph indices, all inside
    /// the block) in order, or `None`.
    pub fn solve(&mut self, terms: &[usize], clock: &Clock) -> Result<Option<Vec<usize>>, CycleError> {
        for &m in &self.touched {
            self.ends[m as usize] = 0;
        }
        self.touched.clear();

        let b = self.block;
        let local: Vec<u32> = terms
            .iter()
            .map(|&t| compress(1u64 << t, b.mask).trailing_zeros())
            .collect();
        let tmask: u32 = local.iter().fold(0, |m, &t| m | 1 << t);
        let all = ((1u64 << b.adj.len()) - 1) as u32;
        let free = all & !tmask;
        let start = local[0];
        let k = local.len();

        let first = 1u32 << start;
        self.ends[first as usize] = first;
        self.touched.push(first);
        let mut layer = vec![first];
        let mut size = 1;
        let mut steps = 0usize;
        while !layer.is_empty() {
            let mut next = Vec::new();
            for &m in &layer {
                steps += 1;
                if steps & 0xfff == 0 {
                    clock.check()?;
                }
                let seen = (m & tmask).count_ones() as usize;
                let allowed = if seen < k { free | 1 << local[seen] } else { free };
                for v in bits(u64::from(self.ends[m as usize])) {
                    for w in bits(u64::from(b.adj[v] & !m & allowed)) {
                        let nm = m | 1 << w;
                        if self.ends[nm as usize] == 0 {
                            next.push(nm);
                            self.touched.push(nm);
                        }
                        self.ends[nm as usize] |= 1 << w;
                    }
                }
            }
            size += 1;
            if size >= 3 {
                for &m in &next {
                    if m & tmask == tmask && self.ends[m as usize] & b.adj[start as usize] != 0 {
                        return Ok(Some(self.trace(m, start)));
                    }
                }
            }
            layer = next;
        }
        Ok(None)
    }

    fn trace(&self, m: u32, start: u32) -> Vec<usize> {
        let b = self.block;
        let mut cur = (self.ends[m as usize] & b.adj[start as usize]).trailing_zeros() as usize;
        let mut mask = m;
        let mut seq = vec![cur];
        while mask != 1 << start {
            mask &= !(1 << cur);
            let prev = (self.ends[mask as usize] & b.adj[cur]).trailing_zeros() as usize;
            seq.push(prev);
            cur = prev;
        }
        seq.reverse();
        seq.into_iter().map(|i| b.verts[i]).collect()
    }
}
