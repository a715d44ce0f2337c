//! Simple undirected graphs on at most [`HARD_ORDER_LIMIT`] vertices.
//!
//! Adjacency is stored as one `u64` bitmask row per vertex, so neighborhood
//! intersections and degree counts are single instructions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::GraphError;

/// Largest order representable with one-word adjacency rows.
pub const HARD_ORDER_LIMIT: usize = 64;

/// Order bound applied by the plain constructors and parsers.
pub const DEFAULT_ORDER_BOUND: usize = 32;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an edge so that `u < v`.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Graph {
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`HARD_ORDER_LIMIT`].
    pub fn empty(n: usize) -> Graph {
        assert!(n <= HARD_ORDER_LIMIT, "order {n} exceeds {HARD_ORDER_LIMIT}");
        Graph { rows: vec![0; n] }
    }

    /// Builds a graph from an edge list, using [`DEFAULT_ORDER_BOUND`].
    pub fn from_edge_list(n: usize, edges: &[Edge]) -> Result<Graph, GraphError> {
        Graph::from_edge_list_bounded(n, edges, DEFAULT_ORDER_BOUND)
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edge_list_bounded(
        n: usize,
        edges: &[Edge],
        bound: usize,
    ) -> Result<Graph, GraphError> {
        let bound = bound.min(HARD_ORDER_LIMIT);
        if n > bound {
            return Err(GraphError::OrderTooLarge { order: n, bound });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Bitmask of the neighbors of `v`.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.rows[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> Bits {
        Bits(self.rows[v])
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for (u, &row) in self.rows.iter().enumerate() {
            for v in Bits(row >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Mask with one bit set for every vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.order())
    }

    /// Vertices reachable from `start` inside `allowed` (which must contain `start`).
    pub(crate) fn reach_within(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.rows[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.reach_within(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut remaining = self.vertex_mask();
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let comp = self.reach_within(start, remaining);
            remaining &= !comp;
            out.push(Bits(comp).collect());
        }
        out
    }

    /// Cyclomatic number `m - n + 1` of a connected graph.
    pub fn cyclomatic_number(&self) -> Result<usize, GraphError> {
        if self.order() == 0 {
            return Err(GraphError::TooSmall { needed: 1, order: 0 });
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected { components: self.connected_components() });
        }
        Ok(self.size() + 1 - self.order())
    }

    pub fn is_tree(&self) -> bool {
        self.order() > 0 && self.size() + 1 == self.order() && self.is_connected()
    }

    /// True iff some pair of vertices has two common neighbors, i.e. the graph
    /// contains a 4-cycle as a subgraph.
    pub fn has_quadrangle(&self) -> bool {
        let n = self.order();
        (0..n).any(|u| {
            (u + 1..n).any(|v| (self.rows[u] & self.rows[v]).count_ones() >= 2)
        })
    }

    /// The graph with the given edges deleted. Edges not present are ignored.
    pub fn without_edges(&self, edges: &[Edge]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.rows[u] &= !(1 << v);
            g.rows[v] &= !(1 << u);
        }
        g
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut position = [usize::MAX; HARD_ORDER_LIMIT];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let rows = vertices
            .iter()
            .map(|&v| {
                Bits(self.rows[v]).fold(0u64, |acc, w| match position[w] {
                    usize::MAX => acc,
                    p => acc | 1 << p,
                })
            })
            .collect();
        Graph { rows }
    }

    /// Graph with vertex `v` removed; higher vertices shift down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.order()).filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabels so that old vertex `order[i]` becomes vertex `i`.
    /// `order` must be a permutation of `0..n`.
    pub fn relabeled(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.order());
        self.induced_subgraph(order)
    }

    /// Adds a new vertex `n` adjacent to every vertex in `neighbors`.
    pub fn with_vertex(&self, neighbors: u64) -> Graph {
        let n = self.order();
        assert!(n < HARD_ORDER_LIMIT);
        debug_assert_eq!(neighbors & !self.vertex_mask(), 0);
        let mut rows = self.rows.clone();
        for w in Bits(neighbors) {
            rows[w] |= 1 << n;
        }
        rows.push(neighbors);
        Graph { rows }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        assert!(shift + other.order() <= HARD_ORDER_LIMIT);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << shift));
        Graph { rows }
    }

    // Named families, mostly for tests and the catalog.

    pub fn path(n: usize) -> Graph {
        let edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::build(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::build(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Star on `n` vertices centered at 0.
    pub fn star(n: usize) -> Graph {
        let edges: Vec<Edge> = (1..n).map(|i| (0, i)).collect();
        Graph::build(n, &edges)
    }

    fn build(n: usize, edges: &[Edge]) -> Graph {
        Graph::from_edge_list_bounded(n, edges, HARD_ORDER_LIMIT)
            .expect("family constructors produce valid edge lists")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bit positions of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}
