//! Pendant stripping, edge connectivity and two-sided edge cuts.

use alloc::vec::Vec;

use crate::error::GraphError;
use crate::graph::{edge, full_mask, Bits, Edge, Graph, HARD_ORDER_LIMIT};

/// The 2-core of a graph with the original names of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCore {
    pub graph: Graph,
    /// `vertices[i]` is the original vertex that became core vertex `i`.
    pub vertices: Vec<usize>,
}

impl TwoCore {
    /// Maps a core edge back to the host graph's labels.
    pub fn lift(&self, (u, v): Edge) -> Edge {
        edge(self.vertices[u], self.vertices[v])
    }
}

/// Repeatedly deletes vertices of degree at most one.
pub fn two_core(g: &Graph) -> TwoCore {
    let mut alive = g.vertex_mask();
    loop {
        let dead = Bits(alive)
            .filter(|&v| (g.neighbor_mask(v) & alive).count_ones() <= 1)
            .fold(0u64, |acc, v| acc | 1 << v);
        if dead == 0 {
            break;
        }
        alive &= !dead;
    }
    let vertices: Vec<usize> = Bits(alive).collect();
    TwoCore { graph: g.induced_subgraph(&vertices), vertices }
}

/// The graph left after repeatedly deleting pendant vertices. Empty for trees.
pub fn strip_pendants(g: &Graph) -> Graph {
    two_core(g).graph
}

/// Minimum number of edges whose removal disconnects `g`.
pub fn edge_connectivity(g: &Graph) -> Result<usize, GraphError> {
    let n = g.order();
    if n < 2 {
        return Err(GraphError::TooSmall { needed: 2, order: n });
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected { components: g.connected_components() });
    }
    let mut best = g.min_degree();
    for t in 1..n {
        if best == 1 {
            break;
        }
        best = best.min(max_flow_unit(g, 0, t, best));
    }
    Ok(best)
}

/// Unit-capacity max flow between `s` and `t`, stopping once `limit` is reached.
fn max_flow_unit(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.order();
    // residual[u] has bit v set iff the arc u->v has spare capacity
    let mut residual = [0u64; HARD_ORDER_LIMIT];
    for (v, row) in residual.iter_mut().enumerate().take(n) {
        *row = g.neighbor_mask(v);
    }
    // flow[u] has bit v set iff one unit currently flows u->v
    let mut flow = [0u64; HARD_ORDER_LIMIT];
    let mut total = 0;
    while total < limit {
        let mut pred = [usize::MAX; HARD_ORDER_LIMIT];
        let mut seen = 1u64 << s;
        let mut queue = [0usize; HARD_ORDER_LIMIT];
        let (mut head, mut tail) = (0, 1);
        queue[0] = s;
        while head < tail && seen >> t & 1 == 0 {
            let u = queue[head];
            head += 1;
            for v in Bits(residual[u] & !seen) {
                seen |= 1 << v;
                pred[v] = u;
                queue[tail] = v;
                tail += 1;
            }
        }
        if seen >> t & 1 == 0 {
            break;
        }
        let mut v = t;
        while v != s {
            let u = pred[v];
            if flow[v] >> u & 1 == 1 {
                // cancel the opposite unit; v->u becomes usable again
                flow[v] &= !(1 << u);
                residual[v] |= 1 << u;
            } else {
                flow[u] |= 1 << v;
                residual[u] &= !(1 << v);
            }
            v = u;
        }
        total += 1;
    }
    total
}

/// The edges between two complementary vertex sets that each induce a
/// connected subgraph: removing them leaves exactly two components and every
/// removed edge joins the two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCut {
    edges: Vec<Edge>,
    sides: [Vec<usize>; 2],
}

impl EdgeCut {
    /// Cut edges, normalized and sorted.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Vertex sets of the two components; `sides()[0]` holds the smallest vertex.
    pub fn sides(&self) -> &[Vec<usize>; 2] {
        &self.sides
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The two components of `g - F`, each relabeled in increasing vertex order.
    pub fn component_graphs(&self, g: &Graph) -> [Graph; 2] {
        let h = g.without_edges(&self.edges);
        [h.induced_subgraph(&self.sides[0]), h.induced_subgraph(&self.sides[1])]
    }
}

/// Normalizes `edges`, checks they belong to `g` and returns the cut if
/// `g - F` has exactly two components and every edge of `F` runs between
/// them.
pub fn two_sided_cut(g: &Graph, edges: &[Edge]) -> Result<Option<EdgeCut>, GraphError> {
    let mut normalized: Vec<Edge> = edges.iter().map(|&(u, v)| edge(u, v)).collect();
    normalized.sort_unstable();
    normalized.dedup();
    if let Some(&missing) = normalized.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Err(GraphError::MissingEdge(missing));
    }
    Ok(split_two(g, &normalized).map(|sides| EdgeCut { edges: normalized, sides }))
}

fn split_two(g: &Graph, edges: &[Edge]) -> Option<[Vec<usize>; 2]> {
    let n = g.order();
    let mut rows = [0u64; HARD_ORDER_LIMIT];
    for (v, row) in rows.iter_mut().enumerate().take(n) {
        *row = g.neighbor_mask(v);
    }
    for &(u, v) in edges {
        rows[u] &= !(1 << v);
        rows[v] &= !(1 << u);
    }
    let all = full_mask(n);
    if n == 0 {
        return None;
    }
    let first = reach(&rows, 0, all);
    let rest = all & !first;
    if rest == 0 {
        return None;
    }
    let second = reach(&rows, rest.trailing_zeros() as usize, rest);
    if second != rest {
        return None;
    }
    if edges.iter().any(|&(u, v)| (first >> u & 1) == (first >> v & 1)) {
        return None;
    }
    Some([Bits(first).collect(), Bits(second).collect()])
}

fn reach(rows: &[u64; HARD_ORDER_LIMIT], start: usize, allowed: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in Bits(frontier) {
            next |= rows[v];
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// All two-sided cuts with at most `max_size` edges.
///
/// Order is by cut size, then lexicographic on the sorted edge list, so the
/// first hit of any search over this stream is also a smallest one.
pub fn enumerate_two_sided_cuts(g: &Graph, max_size: usize) -> TwoSidedCuts<'_> {
    let edges = g.edges();
    TwoSidedCuts { g, max_size: max_size.min(edges.len()), edges, combo: Vec::new() }
}

pub struct TwoSidedCuts<'a> {
    g: &'a Graph,
    edges: Vec<Edge>,
    max_size: usize,
    /// Current combination of edge indices; empty before the first step.
    combo: Vec<usize>,
}

impl TwoSidedCuts<'_> {
    fn advance(&mut self) -> bool {
        let m = self.edges.len();
        let k = self.combo.len();
        // next k-combination in lexicographic order
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.combo[i] < m - (k - i) {
                self.combo[i] += 1;
                for j in i + 1..k {
                    self.combo[j] = self.combo[j - 1] + 1;
                }
                return true;
            }
        }
        if k < self.max_size {
            self.combo = (0..k + 1).collect();
            return true;
        }
        false
    }
}

impl Iterator for TwoSidedCuts<'_> {
    type Item = EdgeCut;

    fn next(&mut self) -> Option<EdgeCut> {
        while self.advance() {
            let chosen: Vec<Edge> = self.combo.iter().map(|&i| self.edges[i]).collect();
            if let Some(sides) = split_two(self.g, &chosen) {
                return Some(EdgeCut { edges: chosen, sides });
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn stripping() {
        assert_eq!(strip_pendants(&Graph::cycle(6)), Graph::cycle(6));
        assert!(strip_pendants(&Graph::path(5)).is_empty());
        assert!(strip_pendants(&Graph::empty(1)).is_empty());
        // triangle 0-1-2 with the path 2-3-4-5 hanging off it
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)])
            .unwrap();
        let core = two_core(&g);
        assert_eq!(core.graph, Graph::complete(3));
        assert_eq!(core.vertices, vec![0, 1, 2]);
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(edge_connectivity(&Graph::path(5)), Ok(1));
        assert_eq!(edge_connectivity(&Graph::star(4)), Ok(1));
        assert_eq!(edge_connectivity(&Graph::cycle(6)), Ok(2));
        assert_eq!(edge_connectivity(&Graph::complete(4)), Ok(3));
        assert_eq!(edge_connectivity(&Graph::complete(6)), Ok(5));
        assert_eq!(edge_connectivity(&Graph::complete_bipartite(3, 3)), Ok(3));
        assert_eq!(
            edge_connectivity(&Graph::empty(1)),
            Err(GraphError::TooSmall { needed: 2, order: 1 })
        );
        assert!(matches!(
            edge_connectivity(&Graph::empty(2)),
            Err(GraphError::Disconnected { .. })
        ));
    }

    #[test]
    fn cuts_small() {
        let p2 = Graph::path(2);
        let cuts: Vec<_> = enumerate_two_sided_cuts(&p2, 1).collect();
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].edges(), &[(0, 1)]);
        assert_eq!(cuts[0].sides(), &[vec![0], vec![1]]);

        assert_eq!(enumerate_two_sided_cuts(&Graph::cycle(4), 1).count(), 0);
    }

    #[test]
    fn k4_cuts() {
        let k4 = Graph::complete(4);
        let cuts: Vec<_> = enumerate_two_sided_cuts(&k4, 4).collect();
        let size3 = cuts.iter().filter(|c| c.len() == 3).count();
        let size4 = cuts.iter().filter(|c| c.len() == 4).count();
        assert_eq!((size3, size4), (4, 3));
        assert_eq!(cuts.len(), 7);
        assert!(cuts.windows(2).all(|w| (w[0].len(), w[0].edges()) < (w[1].len(), w[1].edges())));
    }

    #[test]
    fn explicit_cut_checks() {
        let c5 = Graph::cycle(5);
        let cut = two_sided_cut(&c5, &[(1, 0), (2, 3)]).unwrap().unwrap();
        assert_eq!(cut.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(cut.sides(), &[vec![0, 3, 4], vec![1, 2]]);
        let p3 = Graph::from_edge_list(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(cut.component_graphs(&c5), [p3, Graph::path(2)]);
        assert_eq!(two_sided_cut(&c5, &[(0, 1)]).unwrap(), None);
        assert_eq!(two_sided_cut(&c5, &[(0, 2)]), Err(GraphError::MissingEdge((0, 2))));
        // leaves P3 and a vertex, but (0, 2) lies inside the P3 side
        let k4 = Graph::complete(4);
        assert_eq!(two_sided_cut(&k4, &[(0, 2), (0, 3), (1, 3), (2, 3)]).unwrap(), None);
    }
}
