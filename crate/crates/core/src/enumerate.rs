//! Isomorphism-free generation of connected graphs with bounded degree.
//!
//! Graphs grow one vertex at a time. A child `C = P + v` is kept only when
//! `v` is a valid canonical deletion: `C - v` must be isomorphic to `C - u*`,
//! where `u*` is the non-cut vertex of `C` with the largest canonical
//! position. Isomorphic children that pass the test necessarily share the
//! parent, so deduplicating among the children of a single parent is enough.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use thiserror::Error;

use crate::canon::{canonical_form, canonical_labeling, CanonicalForm};
use crate::graph::{Graph, DEFAULT_ORDER_BOUND, HARD_ORDER_LIMIT};
use crate::spectral::{classify, EnergyVerdict, SpectralError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphClass {
    /// Every connected graph.
    All,
    /// Connected graphs with `m = n - 1`.
    Trees,
    /// Connected graphs with `m >= n`.
    Cyclic,
    /// Connected graphs without a 4-cycle.
    QuadrangleFree,
}

/// Lower bound on the edge count of emitted graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeFloor {
    /// `m >= n`.
    Order,
    /// `m >= k`.
    Count(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EnumSpec {
    pub max_order: usize,
    pub max_degree: usize,
    pub class: GraphClass,
    pub min_edges: Option<EdgeFloor>,
    pub order_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("maximum order {order} exceeds the bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("maximum degree must be at least 1")]
    ZeroDegree,
}

impl EnumSpec {
    /// All connected graphs with maximum degree at most three.
    pub fn new(max_order: usize) -> EnumSpec {
        EnumSpec {
            max_order,
            max_degree: 3,
            class: GraphClass::All,
            min_edges: None,
            order_bound: DEFAULT_ORDER_BOUND,
        }
    }

    pub fn with_degree(mut self, max_degree: usize) -> EnumSpec {
        self.max_degree = max_degree;
        self
    }

    pub fn with_class(mut self, class: GraphClass) -> EnumSpec {
        self.class = class;
        self
    }

    pub fn with_min_edges(mut self, floor: EdgeFloor) -> EnumSpec {
        self.min_edges = Some(floor);
        self
    }

    pub fn with_order_bound(mut self, bound: usize) -> EnumSpec {
        self.order_bound = bound;
        self
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        let bound = self.order_bound.min(HARD_ORDER_LIMIT);
        if self.max_order > bound {
            return Err(EnumError::OrderTooLarge { order: self.max_order, bound });
        }
        if self.max_degree == 0 {
            return Err(EnumError::ZeroDegree);
        }
        Ok(())
    }

    /// Whether `g` passes every filter of the spec.
    pub fn accepts(&self, g: &Graph) -> bool {
        let (n, m) = (g.order(), g.size());
        if n == 0 || n > self.max_order || g.max_degree() > self.max_degree || !g.is_connected() {
            return false;
        }
        let class_ok = match self.class {
            GraphClass::All => true,
            GraphClass::Trees => m + 1 == n,
            GraphClass::Cyclic => m >= n,
            GraphClass::QuadrangleFree => !g.has_quadrangle(),
        };
        let floor_ok = match self.min_edges {
            None => true,
            Some(EdgeFloor::Order) => m >= n,
            Some(EdgeFloor::Count(k)) => m >= k,
        };
        class_ok && floor_ok
    }

    fn only_trees(&self) -> bool {
        self.class == GraphClass::Trees
    }

    fn only_quadrangle_free(&self) -> bool {
        self.class == GraphClass::QuadrangleFree
    }
}

/// Stream of pairwise non-isomorphic connected graphs, by ascending order and
/// then by canonical form. Every emitted graph is in canonical labeling.
pub fn connected_graphs(spec: EnumSpec) -> Result<ConnectedGraphs, EnumError> {
    spec.validate()?;
    let level = if spec.max_order == 0 {
        Vec::new()
    } else {
        let s1 = Graph::empty(1);
        alloc::vec![(canonical_form(&s1), s1)]
    };
    Ok(ConnectedGraphs { spec, level, position: 0 })
}

/// Trees with maximum degree at most `max_degree`, on up to `max_order` vertices.
pub fn trees(max_order: usize, max_degree: usize) -> Result<ConnectedGraphs, EnumError> {
    connected_graphs(EnumSpec::new(max_order).with_degree(max_degree).with_class(GraphClass::Trees))
}

pub struct ConnectedGraphs {
    spec: EnumSpec,
    /// All generated graphs of the current order (filters not yet applied).
    level: Vec<(CanonicalForm, Graph)>,
    position: usize,
}

impl ConnectedGraphs {
    pub fn spec(&self) -> &EnumSpec {
        &self.spec
    }

    fn next_level(&mut self) {
        let mut next = Vec::new();
        for (form, parent) in &self.level {
            next.extend(children(&self.spec, form, parent));
        }
        next.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        self.level = next;
        self.position = 0;
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            while let Some((_, g)) = self.level.get(self.position) {
                self.position += 1;
                if self.spec.accepts(g) {
                    return Some(g.clone());
                }
            }
            let order = self.level.first().map(|(_, g)| g.order())?;
            if order >= self.spec.max_order {
                self.level.clear();
                return None;
            }
            self.next_level();
        }
    }
}

/// Children of `parent` (in canonical labeling) that pass the canonical
/// deletion test, deduplicated, in canonical labeling.
fn children(
    spec: &EnumSpec,
    parent_form: &CanonicalForm,
    parent: &Graph,
) -> Vec<(CanonicalForm, Graph)> {
    let n = parent.order();
    let open: Vec<usize> = (0..n).filter(|&v| parent.degree(v) < spec.max_degree).collect();
    let widest = if spec.only_trees() { 1 } else { spec.max_degree }.min(open.len());
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for size in 1..=widest {
        for_each_subset(&open, size, |mask| {
            let child = parent.with_vertex(mask);
            if spec.only_quadrangle_free() && child.has_quadrangle() {
                return;
            }
            let labeling = canonical_labeling(&child);
            let star = *labeling
                .order
                .iter()
                .rev()
                .find(|&&v| is_non_cut_vertex(&child, v))
                .expect("a connected graph on two or more vertices has a non-cut vertex");
            let accepted =
                star == n || canonical_form(&child.without_vertex(star)) == *parent_form;
            if accepted && seen.insert(labeling.form.clone()) {
                out.push((labeling.form, child.relabeled(&labeling.order)));
            }
        });
    }
    out
}

fn is_non_cut_vertex(g: &Graph, v: usize) -> bool {
    let rest = g.vertex_mask() & !(1 << v);
    rest == 0 || g.reach_within(rest.trailing_zeros() as usize, rest) == rest
}

/// Calls `f` with the mask of every `size`-subset of `items`, in
/// lexicographic order of index tuples.
fn for_each_subset(items: &[usize], size: usize, mut f: impl FnMut(u64)) {
    fn go(items: &[usize], start: usize, left: usize, mask: u64, f: &mut impl FnMut(u64)) {
        if left == 0 {
            f(mask);
            return;
        }
        for i in start..=items.len() - left {
            go(items, i + 1, left - 1, mask | 1 << items[i], f);
        }
    }
    if size <= items.len() {
        go(items, 0, size, 0, &mut f);
    }
}

/// Classifies every graph of the stream and keeps the hypoenergetic ones.
/// Any unresolved verdict aborts the scan.
pub fn hypoenergetic_scan(spec: EnumSpec) -> Result<Vec<(Graph, EnergyVerdict)>, ScanError> {
    let mut hits = Vec::new();
    for g in connected_graphs(spec)? {
        let verdict = classify(&g).map_err(|source| ScanError::Spectral { graph: g.clone(), source })?;
        if verdict.is_hypoenergetic() {
            hits.push((g, verdict));
        }
    }
    Ok(hits)
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScanError {
    #[error(transparent)]
    Spec(#[from] EnumError),
    #[error("classification failed on {graph:?}: {source}")]
    Spectral { graph: Graph, source: SpectralError },
}
