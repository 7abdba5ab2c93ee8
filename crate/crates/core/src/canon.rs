//! Canonical labelling by individualisation and refinement.
//!
//! The canonical form is the relabelling whose adjacency rows are
//! lexicographically largest among the leaves of the search tree. Subtrees
//! are skipped when they are images of explored ones under a known
//! automorphism fixing the current prefix (twin swaps, or automorphisms
//! found at equal leaves).

use crate::graph::{bits, Graph};

#[derive(Debug, Clone)]
pub struct Canonical {
    /// `g` relabelled into canonical form.
    pub graph: Graph,
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> Canonical {
    let n = g.order();
    if n == 0 {
        return Canonical {
            graph: g.clone(),
            labeling: vec![],
        };
    }
    let mut search = Search {
        g,
        best: None,
        autos: Vec::new(),
    };
    let root = vec![(0..n).collect::<Vec<_>>()];
    search.descend(root, &mut Vec::new());
    let (_, order) = search.best.expect("at least one leaf");
    let mut labeling = vec![0; n];
    for (label, &v) in order.iter().enumerate() {
        labeling[v] = label;
    }
    Canonical {
        graph: g.permuted(&labeling),
        labeling,
    }
}

/// Whether `a` and `b` are isomorphic.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_form(a).graph == canonical_form(b).graph
}

struct Search<'a> {
    g: &'a Graph,
    /// best code so far and the vertex order that produced it
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells.iter().map(|c| c[0]).collect());
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if explored.iter().any(|&u| self.twins(u, v)) || self.same_orbit(prefix, &explored, v) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let n = order.len();
        let mut label = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            label[v] = i;
        }
        let code: Vec<u64> = order
            .iter()
            .map(|&v| bits(self.g.neighbors(v)).fold(0u64, |m, w| m | 1 << label[w]))
            .collect();
        match &self.best {
            Some((best, best_order)) if *best == code => {
                // same code: the map between the two leaves is an automorphism
                let auto: Vec<usize> = (0..n).map(|v| best_order[label[v]]).collect();
                self.autos.push(auto);
            }
            Some((best, _)) if *best > code => {}
            _ => self.best = Some((code, order)),
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let strip = !((1u64 << u) | (1u64 << v));
        self.g.neighbors(u) & strip == self.g.neighbors(v) & strip
    }

    /// Is `v` the image of an explored sibling under the group generated by
    /// the known automorphisms that fix `prefix` pointwise?
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        if explored.is_empty() || self.autos.is_empty() {
            return false;
        }
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().all(|&x| a[x] == x) {
                any = true;
                for x in 0..n {
                    let (r1, r2) = (find(&mut parent, x), find(&mut parent, a[x]));
                    if r1 != r2 {
                        parent[r1] = r2;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

/// Equitable refinement: split cells by neighbour counts into other cells
/// until stable. Depends only on the cell structure, not on labels.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    'again: loop {
        for wi in 0..cells.len() {
            let wmask = cells[wi].iter().fold(0u64, |m, &v| m | 1 << v);
            for xi in 0..cells.len() {
                if cells[xi].len() == 1 {
                    continue;
                }
                let count = |v: usize| (g.neighbors(v) & wmask).count_ones();
                let first = count(cells[xi][0]);
                if cells[xi].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[xi].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut split: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (c, v) in keyed {
                    if last != Some(c) {
                        split.push(Vec::new());
                        last = Some(c);
                    }
                    split.last_mut().unwrap().push(v);
                }
                cells.splice(xi..=xi, split);
                continue 'again;
            }
        }
        return cells;
    }
}
