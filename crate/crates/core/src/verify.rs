//! Independent checking of decomposition certificates.
//!
//! Nothing here calls into the cut search, the canonical labeling or the
//! bitmask component routines: connectivity is recomputed from edge lists and
//! catalog membership is decided by trying vertex permutations directly. Only
//! the eigenvalue solver is shared with the rest of the crate.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use thiserror::Error;

use crate::catalog::Exceptional;
use crate::certify::{Certificate, LeafReason, DEFAULT_MAX_CUT_SIZE};
use crate::graph::{Edge, Graph};
use crate::spectral::{energy, SpectralError};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    pub max_cut_size: usize,
    /// Slack allowed in every energy inequality.
    pub tolerance: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_cut_size: DEFAULT_MAX_CUT_SIZE, tolerance: 1e-8 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum NodeKind {
    Cut { cut_size: usize },
    Leaf(LeafReason),
}

/// Per-node record of a successful verification.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeCheck {
    /// `root`, `root.0`, `root.0.1`, ...
    pub path: String,
    pub kind: NodeKind,
    pub order: usize,
    pub size: usize,
    pub cyclomatic: usize,
    pub energy: f64,
    /// `E - n` at this node.
    pub slack: f64,
    /// `E(G) - E(G1) - E(G2)` at cut nodes.
    pub cut_slack: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    /// Nodes in pre-order.
    pub nodes: Vec<NodeCheck>,
    pub root_order: usize,
    pub root_energy: f64,
    pub max_cut_size: usize,
}

impl VerificationReport {
    pub fn root_slack(&self) -> f64 {
        self.nodes[0].slack
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Violation {
    #[error("root graph is disconnected")]
    RootDisconnected,
    #[error("root graph has maximum degree {0} > 3")]
    RootDegree(usize),
    #[error("cut edge {0:?} is not an edge of the node graph")]
    CutEdgeMissing(Edge),
    #[error("cut edge {0:?} does not join the two components")]
    CutEdgeInternal(Edge),
    #[error("cut lists an edge twice")]
    CutEdgeRepeated,
    #[error("deleting the cut leaves {0} components, not 2")]
    NotTwoSided(usize),
    #[error("child {0} does not match its component of G - F")]
    ChildMismatch(usize),
    #[error("child {index} is the exceptional graph {name}")]
    ChildExceptional { index: usize, name: Exceptional },
    #[error("child {index} has cyclomatic number {child}, parent has {parent}")]
    NoDescent { index: usize, parent: usize, child: usize },
    #[error("cut of size {size} exceeds the limit {max}")]
    CutTooLarge { size: usize, max: usize },
    #[error("TreeBase leaf is not a tree")]
    LeafNotTree,
    #[error("leaf graph is disconnected")]
    LeafDisconnected,
    #[error("SmallCyclomaticBase leaf has cyclomatic number {0}")]
    LeafCyclomatic(usize),
    #[error("leaf is the exceptional graph {0}")]
    LeafExceptional(Exceptional),
    #[error("E(G) = {parent} is below E(G1) + E(G2) = {children}")]
    EnergyIncrease { parent: f64, children: f64 },
    #[error("leaf energy {energy} is below its order {order}")]
    LeafEnergy { energy: f64, order: usize },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("certificate rejected at {path}: {violation}")]
pub struct VerifyError {
    pub path: String,
    pub violation: Violation,
}

pub fn verify_certificate(cert: &Certificate) -> Result<VerificationReport, VerifyError> {
    verify_certificate_with(cert, VerifyOptions::default())
}

pub fn verify_certificate_with(
    cert: &Certificate,
    options: VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    let root = cert.graph();
    let reject = |violation| VerifyError { path: String::from("root"), violation };
    if components(root).len() != 1 {
        return Err(reject(Violation::RootDisconnected));
    }
    let max_degree = (0..root.order()).map(|v| adjacency(root)[v].len()).max().unwrap_or(0);
    if max_degree > 3 {
        return Err(reject(Violation::RootDegree(max_degree)));
    }
    let mut nodes = Vec::new();
    let mut max_cut_size = 0;
    check_node(cert, String::from("root"), &options, &mut nodes, &mut max_cut_size)?;
    let root_energy = nodes[0].energy;
    Ok(VerificationReport { nodes, root_order: root.order(), root_energy, max_cut_size })
}

/// Returns the node's energy after checking it and its subtree.
fn check_node(
    node: &Certificate,
    path: String,
    options: &VerifyOptions,
    out: &mut Vec<NodeCheck>,
    max_cut_size: &mut usize,
) -> Result<f64, VerifyError> {
    let g = node.graph();
    let fail = |violation| VerifyError { path: path.clone(), violation };
    let comps = components(g);
    if comps.len() != 1 {
        return Err(fail(Violation::LeafDisconnected));
    }
    let cyclomatic = g.edges().len() + 1 - g.order();
    let e = energy(g).map_err(|err| fail(err.into()))?;
    let slot = out.len();
    out.push(NodeCheck {
        path: path.clone(),
        kind: NodeKind::Leaf(LeafReason::TreeBase),
        order: g.order(),
        size: g.edges().len(),
        cyclomatic,
        energy: e,
        slack: e - g.order() as f64,
        cut_slack: None,
    });

    match node {
        Certificate::Leaf { reason, .. } => {
            out[slot].kind = NodeKind::Leaf(*reason);
            match reason {
                LeafReason::TreeBase if cyclomatic != 0 => {
                    return Err(fail(Violation::LeafNotTree));
                }
                LeafReason::SmallCyclomaticBase if !(1..=2).contains(&cyclomatic) => {
                    return Err(fail(Violation::LeafCyclomatic(cyclomatic)));
                }
                _ => {}
            }
            if let Some(name) = catalog_match(g) {
                return Err(fail(Violation::LeafExceptional(name)));
            }
            if e < g.order() as f64 - options.tolerance {
                return Err(fail(Violation::LeafEnergy { energy: e, order: g.order() }));
            }
            Ok(e)
        }
        Certificate::Cut { cut, children, .. } => {
            out[slot].kind = NodeKind::Cut { cut_size: cut.len() };
            if cut.len() > options.max_cut_size {
                return Err(fail(Violation::CutTooLarge { size: cut.len(), max: options.max_cut_size }));
            }
            *max_cut_size = (*max_cut_size).max(cut.len());
            let edges = g.edges();
            let mut removed = BTreeSet::new();
            for &(u, v) in cut {
                let e = (u.min(v), u.max(v));
                if !edges.contains(&e) {
                    return Err(fail(Violation::CutEdgeMissing(e)));
                }
                if !removed.insert(e) {
                    return Err(fail(Violation::CutEdgeRepeated));
                }
            }
            let rest: Vec<Edge> = edges.into_iter().filter(|e| !removed.contains(e)).collect();
            let remaining = Graph::from_edge_list_bounded(g.order(), &rest, 64)
                .expect("subgraph of a valid graph");
            let parts = components(&remaining);
            if parts.len() != 2 {
                return Err(fail(Violation::NotTwoSided(parts.len())));
            }
            if let Some(&e) = removed.iter().find(|&&(u, v)| parts[0].contains(&u) == parts[0].contains(&v)) {
                return Err(fail(Violation::CutEdgeInternal(e)));
            }
            let mut child_energy = 0.0;
            for (index, (part, child)) in parts.iter().zip(children.iter()).enumerate() {
                let expected = induced(&remaining, part);
                if child.graph().order() != expected.0
                    || sorted_edges(child.graph()) != expected.1
                {
                    return Err(fail(Violation::ChildMismatch(index)));
                }
                let child_cyclomatic = expected.1.len() + 1 - expected.0;
                if child_cyclomatic >= cyclomatic {
                    return Err(fail(Violation::NoDescent {
                        index,
                        parent: cyclomatic,
                        child: child_cyclomatic,
                    }));
                }
                if let Some(name) = catalog_match(child.graph()) {
                    return Err(fail(Violation::ChildExceptional { index, name }));
                }
                let mut child_path = path.clone();
                let _ = write!(child_path, ".{index}");
                child_energy += check_node(child, child_path, options, out, max_cut_size)?;
            }
            if e < child_energy - options.tolerance {
                return Err(fail(Violation::EnergyIncrease { parent: e, children: child_energy }));
            }
            out[slot].cut_slack = Some(e - child_energy);
            Ok(e)
        }
    }
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.order()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Components by depth-first search, each sorted, ordered by smallest vertex.
fn components(g: &Graph) -> Vec<Vec<usize>> {
    let adj = adjacency(g);
    let mut label = vec![usize::MAX; g.order()];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..g.order() {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![start];
        label[start] = id;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if label[w] == usize::MAX {
                    label[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Order and sorted edge list of the subgraph induced by the sorted vertex
/// list `part`, renumbered `0..part.len()` in increasing order.
fn induced(g: &Graph, part: &[usize]) -> (usize, Vec<Edge>) {
    let index = |v: usize| part.binary_search(&v).ok();
    let mut edges: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter_map(|(u, v)| Some((index(u)?, index(v)?)))
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    (part.len(), edges)
}

fn sorted_edges(g: &Graph) -> Vec<Edge> {
    let mut e = g.edges();
    e.sort_unstable();
    e
}

/// Catalog membership by brute force over vertex permutations.
fn catalog_match(g: &Graph) -> Option<Exceptional> {
    let n = g.order();
    let m = g.edges().len();
    Exceptional::ALL.into_iter().find(|e| {
        e.order() == n && e.edges().len() == m && permutation_isomorphic(g, e.edges())
    })
}

fn permutation_isomorphic(g: &Graph, target: &[Edge]) -> bool {
    let n = g.order();
    let target: BTreeSet<Edge> = target.iter().copied().collect();
    let edges = g.edges();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mapped = edges.iter().all(|&(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            target.contains(&(a.min(b), a.max(b)))
        });
        if mapped {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
