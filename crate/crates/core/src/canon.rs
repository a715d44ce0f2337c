//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered vertex partition to an
//! equitable one, individualize each vertex of the first non-singleton cell,
//! recurse. Every discrete leaf yields a relabeled adjacency matrix and the
//! largest one wins. Leaves that reproduce an already-seen matrix give
//! automorphisms, which prune siblings lying in a common orbit of the
//! pointwise stabilizer of the current path. No step depends on vertex names,
//! so the result is exact rather than heuristic.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Bits, Graph};
use crate::graph6::to_graph6_bytes;

/// Isomorphism-invariant byte string: the graph6 encoding of the canonically
/// relabeled graph. Equal forms mean isomorphic graphs and vice versa.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        core::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    pub fn into_string(self) -> String {
        String::from_utf8(self.0).expect("graph6 is ASCII")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A canonical ordering of the vertices together with the resulting form.
#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    /// `order[i]` is the original vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    pub form: CanonicalForm,
}

impl CanonicalLabeling {
    /// Canonical position of original vertex `v`.
    pub fn position(&self, v: usize) -> usize {
        self.order.iter().position(|&w| w == v).expect("vertex in labeling")
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabeled(&canonical_labeling(g).order)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && sorted_degrees(a) == sorted_degrees(b)
        && canonical_form(a) == canonical_form(b)
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degree_sequence();
    d.sort_unstable();
    d
}

pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    let n = g.order();
    if n == 0 {
        return CanonicalLabeling { order: Vec::new(), form: CanonicalForm(to_graph6_bytes(g)) };
    }
    let mut search = Search {
        g,
        best: None,
        first: None,
        automorphisms: Vec::new(),
    };
    let mut cells = vec![g.vertex_mask()];
    refine(g, &mut cells);
    search.descend(cells, &mut Vec::new());
    let (_, order) = search.best.expect("search visits at least one leaf");
    let form = CanonicalForm(to_graph6_bytes(&g.relabeled(&order)));
    CanonicalLabeling { order, form }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    first: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for v in Bits(cells[target]) {
            if !explored.is_empty() && self.equivalent_to_explored(path, v, &explored) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cells[target] & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut child);
            path.push(v);
            self.descend(child, path);
            path.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = relabeled_rows(self.g, &order);
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.0 == code {
                let mut gamma = vec![0; order.len()];
                for (i, &v) in order.iter().enumerate() {
                    gamma[v] = known.1[i];
                }
                if gamma.iter().enumerate().any(|(i, &j)| i != j) {
                    self.automorphisms.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((code.clone(), order.clone()));
        }
        if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
            self.best = Some((code, order));
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the
    /// automorphisms found so far that fix every vertex of `path`.
    fn equivalent_to_explored(&self, path: &[usize], v: usize, explored: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        let mut any = false;
        for gamma in &self.automorphisms {
            if path.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (i, &j) in gamma.iter().enumerate() {
                union(&mut parent, i, j);
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&x| find(&mut parent, x) == root)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

fn relabeled_rows(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut position = [0usize; 64];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order
        .iter()
        .map(|&v| Bits(g.neighbor_mask(v)).fold(0u64, |acc, w| acc | 1 << position[w]))
        .collect()
}

/// Refines an ordered partition (cells as vertex masks) until it is equitable:
/// every vertex of a cell has the same number of neighbors in every cell.
/// Split cells keep their position and are ordered by neighbor count.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    loop {
        let mut changed = false;
        let mut splitter = 0;
        while splitter < cells.len() {
            let w = cells[splitter];
            let mut next = Vec::with_capacity(cells.len() + 2);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut counts: [u64; 65] = [0; 65];
                let mut distinct = 0;
                for v in Bits(cell) {
                    let k = (g.neighbor_mask(v) & w).count_ones() as usize;
                    if counts[k] == 0 {
                        distinct += 1;
                    }
                    counts[k] |= 1 << v;
                }
                if distinct == 1 {
                    next.push(cell);
                } else {
                    changed = true;
                    next.extend(counts.iter().copied().filter(|&c| c != 0));
                }
            }
            *cells = next;
            splitter += 1;
        }
        if !changed {
            break;
        }
    }
}
