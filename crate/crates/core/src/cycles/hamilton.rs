//! Certificate search for hamiltonicity on graphs beyond the subset-DP cap.
//!
//! A positive answer is an explicit cycle. A negative answer is either an
//! exhausted backtracking search or a scattering set: a vertex set `X` whose
//! deletion leaves more than `|X|` components, which no hamiltonian graph has.

use crate::graph::{bits, Graph};

use super::{Clock, CycleError};

pub(crate) enum Search {
    Found(Vec<usize>),
    Exhausted,
    LimitHit,
}

/// Depth-first search for a hamiltonian cycle, visiting the most
/// constrained neighbour first and pruning on residual degrees.
pub(crate) fn backtrack(g: &Graph, node_limit: u64, clock: &Clock) -> Result<Search, CycleError> {
    let n = g.order();
    let start = (0..n).min_by_key(|&v| (g.degree(v), v)).expect("n >= 3");
    let mut st = State {
        g,
        all: g.vertex_mask(),
        start,
        path: vec![start],
        visited: 1u64 << start,
        nodes: 0,
        limit: node_limit,
    };
    st.dfs(clock)
}

struct State<'a> {
    g: &'a Graph,
    all: u64,
    start: usize,
    path: Vec<usize>,
    visited: u64,
    nodes: u64,
    limit: u64,
}

impl State<'_> {
    fn dfs(&mut self, clock: &Clock) -> Result<Search, CycleError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Ok(Search::LimitHit);
        }
        if self.nodes & 0xffff == 0 {
            clock.check()?;
        }
        let g = self.g;
        let end = *self.path.last().unwrap();
        if self.visited == self.all {
            return Ok(if g.has_edge(end, self.start) {
                Search::Found(self.path.clone())
            } else {
                Search::Exhausted
            });
        }
        if !self.feasible(end) {
            return Ok(Search::Exhausted);
        }
        let rest = self.all & !self.visited;
        let mut cand: Vec<(u32, usize)> = bits(g.neighbors(end) & rest)
            .map(|w| ((g.neighbors(w) & rest).count_ones(), w))
            .collect();
        cand.sort_unstable();
        let mut limit_hit = false;
        for (_, w) in cand {
            self.path.push(w);
            self.visited |= 1 << w;
            let r = self.dfs(clock)?;
            self.path.pop();
            self.visited &= !(1 << w);
            match r {
                Search::Found(c) => return Ok(Search::Found(c)),
                Search::LimitHit => limit_hit = true,
                Search::Exhausted => {}
            }
            if limit_hit {
                break;
            }
        }
        Ok(if limit_hit { Search::LimitHit } else { Search::Exhausted })
    }

    /// Necessary conditions for extending the current path to a
    /// hamiltonian cycle.
    fn feasible(&self, end: usize) -> bool {
        let g = self.g;
        let rest = self.all & !self.visited;
        let ports = rest | 1 << end | 1 << self.start;
        for u in bits(rest) {
            if (g.neighbors(u) & ports & !(1 << u)).count_ones() < 2 {
                return false;
            }
        }
        if g.neighbors(self.start) & rest == 0 || g.neighbors(end) & rest == 0 {
            return false;
        }
        // the unvisited vertices must stay reachable from the path end
        g.component_of(end, rest | 1 << end) == rest | 1 << end
    }
}

/// A smallest non-empty set `X` with `|X| <= max_size` whose deletion
/// leaves more than `|X|` components.
pub(crate) fn scattering_set(g: &Graph, max_size: usize, clock: &Clock) -> Result<Option<Vec<usize>>, CycleError> {
    let n = g.order();
    let all = g.vertex_mask();
    for size in 1..=max_size.min(n.saturating_sub(1)) {
        let mut combo: Vec<usize> = (0..size).collect();
        let mut count = 0u64;
        loop {
            count += 1;
            if count & 0x3ff == 0 {
                clock.check()?;
            }
            let x = combo.iter().fold(0u64, |m, &v| m | 1 << v);
            if g.components(all & !x).len() > size {
                return Ok(Some(combo));
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances `combo` to the next k-subset of `0..n` in lexicographic order.
pub fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Whether `x` is a scattering set of `g`. The empty set scatters a
/// disconnected graph.
pub fn is_scattering(g: &Graph, x: &[usize]) -> bool {
    if x.is_empty() {
        return !g.is_connected();
    }
    let xm = x.iter().fold(0u64, |m, &v| m | 1 << v);
    g.components(g.vertex_mask() & !xm).len() > x.len()
}
