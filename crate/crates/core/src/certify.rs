//! Decomposition certificates for connected cyclic graphs with maximum
//! degree at most three.
//!
//! A good edge cut `F` of a connected graph `G` with cyclomatic number `k`
//! leaves exactly two components, each with cyclomatic number below `k` and
//! neither isomorphic to a catalog graph. Since deleting an edge cut never
//! raises the energy, `E(G) >= E(G1) + E(G2)`, and the claim `E >= n` passes
//! from the components to `G`. Recursing until every piece is a tree or has
//! cyclomatic number one or two yields a [`Certificate`].

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::catalog::{is_exceptional, Exceptional};
use crate::cuts::{edge_connectivity, enumerate_two_sided_cuts, two_core, two_sided_cut, EdgeCut};
use crate::error::GraphError;
use crate::graph::{Bits, Edge, Graph};

/// Largest cut the search uses unless configured otherwise.
pub const DEFAULT_MAX_CUT_SIZE: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LeafReason {
    /// A tree outside the catalog.
    TreeBase,
    /// Cyclomatic number one or two, not `K_{2,3}`.
    SmallCyclomaticBase,
}

impl LeafReason {
    pub fn as_str(self) -> &'static str {
        match self {
            LeafReason::TreeBase => "TreeBase",
            LeafReason::SmallCyclomaticBase => "SmallCyclomaticBase",
        }
    }
}

impl fmt::Display for LeafReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for LeafReason {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "TreeBase" => Ok(LeafReason::TreeBase),
            "SmallCyclomaticBase" => Ok(LeafReason::SmallCyclomaticBase),
            _ => Err(()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutStrategy {
    ProofGuided,
    Exhaustive,
}

/// Which branch of the edge-connectivity case analysis produced a cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    /// The 2-core has a bridge.
    Case1,
    /// Minimum 2-cut of the 2-core, both sides cyclic.
    Subcase2_1,
    /// Minimum 2-cut of the 2-core, one side a tree.
    Subcase2_2,
    /// Minimum 3-cut of a cubic graph, both sides cyclic.
    Subcase3_1,
    /// Minimum 3-cut of a cubic graph, one side a tree.
    Subcase3_2,
    /// No case candidate worked; exhaustive search.
    Fallback,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::Case1 => "Case 1",
            CaseLabel::Subcase2_1 => "Subcase 2.1",
            CaseLabel::Subcase2_2 => "Subcase 2.2",
            CaseLabel::Subcase3_1 => "Subcase 3.1",
            CaseLabel::Subcase3_2 => "Subcase 3.2",
            CaseLabel::Fallback => "fallback",
        }
    }

    /// The edge connectivity this label belongs to, if any.
    pub fn connectivity(self) -> Option<usize> {
        match self {
            CaseLabel::Case1 => Some(1),
            CaseLabel::Subcase2_1 | CaseLabel::Subcase2_2 => Some(2),
            CaseLabel::Subcase3_1 | CaseLabel::Subcase3_2 => Some(3),
            CaseLabel::Fallback => None,
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CutReport {
    pub strategy: CutStrategy,
    /// Edge connectivity of the 2-core, when it was computed.
    pub core_connectivity: Option<usize>,
    pub case: CaseLabel,
    pub cut_size: usize,
    /// The cut came from the local search around an exceptional side rather
    /// than being a minimum cut of the 2-core itself.
    pub repaired: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    Leaf {
        graph: Graph,
        reason: LeafReason,
    },
    Cut {
        graph: Graph,
        /// Cut edges in the labels of `graph`, sorted.
        cut: Vec<Edge>,
        /// Present on certificates built by [`certify`], absent on parsed ones.
        report: Option<CutReport>,
        /// Components of `graph - cut`, each relabeled in increasing vertex
        /// order; the first holds vertex 0.
        children: Box<[Certificate; 2]>,
    },
}

impl Certificate {
    pub fn graph(&self) -> &Graph {
        match self {
            Certificate::Leaf { graph, .. } | Certificate::Cut { graph, .. } => graph,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Certificate::Leaf { .. })
    }

    /// Nodes in pre-order.
    pub fn nodes(&self) -> Vec<&Certificate> {
        let mut out = Vec::new();
        let mut stack = alloc::vec![self];
        while let Some(node) = stack.pop() {
            out.push(node);
            if let Certificate::Cut { children, .. } = node {
                stack.push(&children[1]);
                stack.push(&children[0]);
            }
        }
        out
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes().iter().filter(|n| n.is_leaf()).count()
    }

    pub fn cut_count(&self) -> usize {
        self.nodes().iter().filter(|n| !n.is_leaf()).count()
    }

    pub fn max_cut_size(&self) -> usize {
        self.nodes()
            .iter()
            .filter_map(|n| match n {
                Certificate::Cut { cut, .. } => Some(cut.len()),
                Certificate::Leaf { .. } => None,
            })
            .max()
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CertifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("maximum degree {0} exceeds 3")]
    DegreeTooLarge(usize),
    #[error("input is the exceptional graph {0}")]
    Exceptional(Exceptional),
    #[error("cut search needs cyclomatic number at least 3, got {0}")]
    BelowInductiveRange(usize),
    #[error("no good edge cut of size at most {max_cut_size} in {graph:?}")]
    Stuck { graph: Graph, max_cut_size: usize },
}

/// How a two-sided cut measures up against the good-cut conditions.
struct Assessment {
    descends: bool,
    exceptional: [Option<Exceptional>; 2],
}

impl Assessment {
    fn is_good(&self) -> bool {
        self.descends && self.exceptional.iter().all(Option::is_none)
    }
}

fn assess(g: &Graph, k: usize, cut: &EdgeCut) -> Assessment {
    let parts = cut.component_graphs(g);
    let descends = parts.iter().all(|p| p.size() + 1 - p.order() < k);
    Assessment { descends, exceptional: [is_exceptional(&parts[0]), is_exceptional(&parts[1])] }
}

fn connected_cyclomatic(g: &Graph) -> Result<usize, CertifyError> {
    Ok(g.cyclomatic_number()?)
}

/// Whether deleting `edges` from the connected graph `g` leaves exactly two
/// components, both with smaller cyclomatic number and neither isomorphic to
/// a catalog graph.
pub fn is_good_cut(g: &Graph, edges: &[Edge]) -> Result<bool, CertifyError> {
    let k = connected_cyclomatic(g)?;
    let Some(cut) = two_sided_cut(g, edges)? else {
        return Ok(false);
    };
    Ok(assess(g, k, &cut).is_good())
}

fn inductive_cyclomatic(g: &Graph) -> Result<usize, CertifyError> {
    let k = connected_cyclomatic(g)?;
    if k < 3 {
        return Err(CertifyError::BelowInductiveRange(k));
    }
    Ok(k)
}

/// First good cut in size-then-lexicographic order among cuts of at most
/// `max_size` edges.
pub fn find_good_cut_exhaustive(
    g: &Graph,
    max_size: usize,
) -> Result<Option<(EdgeCut, CutReport)>, CertifyError> {
    let k = inductive_cyclomatic(g)?;
    Ok(exhaustive(g, k, max_size, None))
}

fn exhaustive(
    g: &Graph,
    k: usize,
    max_size: usize,
    core_connectivity: Option<usize>,
) -> Option<(EdgeCut, CutReport)> {
    enumerate_two_sided_cuts(g, max_size).find(|cut| assess(g, k, cut).is_good()).map(|cut| {
        let report = CutReport {
            strategy: CutStrategy::Exhaustive,
            core_connectivity,
            case: CaseLabel::Fallback,
            cut_size: cut.len(),
            repaired: false,
        };
        (cut, report)
    })
}

/// Good cut following the case analysis on the edge connectivity of the
/// 2-core, with the default size limit.
pub fn find_good_cut_proof_guided(g: &Graph) -> Result<Option<(EdgeCut, CutReport)>, CertifyError> {
    find_good_cut_proof_guided_with(g, DEFAULT_MAX_CUT_SIZE)
}

/// Candidates come in this order:
///
/// 1. every minimum cut of the 2-core, lifted to `g`;
/// 2. for each of those that failed only because a side is a catalog graph, every cut
///    of at most `max_size` edges drawn from the edges touching the closed
///    neighborhood of the offending side (this covers the re-routed cuts the
///    case analysis builds around a `K_{2,3}` or a small star);
/// 3. failing all of those, the exhaustive search, labeled as a fallback.
pub fn find_good_cut_proof_guided_with(
    g: &Graph,
    max_size: usize,
) -> Result<Option<(EdgeCut, CutReport)>, CertifyError> {
    let k = inductive_cyclomatic(g)?;
    let core = two_core(g);
    let kappa = edge_connectivity(&core.graph)?;
    if kappa > 3 || kappa > max_size {
        return Ok(exhaustive(g, k, max_size, Some(kappa)));
    }

    let report = |case, cut_size, repaired| CutReport {
        strategy: CutStrategy::ProofGuided,
        core_connectivity: Some(kappa),
        case,
        cut_size,
        repaired,
    };

    let mut near_misses = Vec::new();
    for core_cut in enumerate_two_sided_cuts(&core.graph, kappa).filter(|c| c.len() == kappa) {
        let case = case_label(&core.graph, kappa, &core_cut);
        let lifted: Vec<Edge> = core_cut.edges().iter().map(|&e| core.lift(e)).collect();
        let cut = two_sided_cut(g, &lifted)?
            .expect("a minimum cut of the 2-core splits the host graph in two");
        let verdict = assess(g, k, &cut);
        if verdict.is_good() {
            let size = cut.len();
            return Ok(Some((cut, report(case, size, false))));
        }
        if verdict.descends {
            let mut offending = 0u64;
            for (side, exceptional) in cut.sides().iter().zip(verdict.exceptional) {
                if exceptional.is_some() {
                    offending |= side.iter().fold(0u64, |acc, &v| acc | 1 << v);
                }
            }
            near_misses.push((case, cut, offending));
        }
    }

    for (case, cut, offending) in near_misses {
        if let Some(repair) = repair_search(g, k, &cut, offending, max_size) {
            let size = repair.len();
            return Ok(Some((repair, report(case, size, true))));
        }
    }
    Ok(exhaustive(g, k, max_size, Some(kappa)))
}

fn case_label(core: &Graph, kappa: usize, cut: &EdgeCut) -> CaseLabel {
    let both_cyclic = cut
        .component_graphs(core)
        .iter()
        .all(|h| h.size() >= h.order());
    match (kappa, both_cyclic) {
        (1, _) => CaseLabel::Case1,
        (2, true) => CaseLabel::Subcase2_1,
        (2, false) => CaseLabel::Subcase2_2,
        (3, true) => CaseLabel::Subcase3_1,
        (3, false) => CaseLabel::Subcase3_2,
        _ => CaseLabel::Fallback,
    }
}

/// Local search for a good cut among the edges near the exceptional side(s).
fn repair_search(
    g: &Graph,
    k: usize,
    failed: &EdgeCut,
    offending: u64,
    max_size: usize,
) -> Option<EdgeCut> {
    let closed = Bits(offending).fold(offending, |acc, v| acc | g.neighbor_mask(v));
    let mut pool: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| closed >> u & 1 == 1 || closed >> v & 1 == 1)
        .collect();
    pool.extend_from_slice(failed.edges());
    pool.sort_unstable();
    pool.dedup();

    let mut combo: Vec<usize> = Vec::new();
    for size in 1..=max_size.min(pool.len()) {
        combo.clear();
        combo.extend(0..size);
        loop {
            let chosen: Vec<Edge> = combo.iter().map(|&i| pool[i]).collect();
            if let Ok(Some(cut)) = two_sided_cut(g, &chosen) {
                if assess(g, k, &cut).is_good() {
                    return Some(cut);
                }
            }
            if !next_combination(&mut combo, pool.len()) {
                break;
            }
        }
    }
    None
}

fn next_combination(combo: &mut [usize], m: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < m - (k - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    pub max_cut_size: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { max_cut_size: DEFAULT_MAX_CUT_SIZE }
    }
}

/// Builds a certificate that `E(g) >= n` for a connected graph with maximum
/// degree at most three that is not a catalog graph.
pub fn certify(g: &Graph) -> Result<Certificate, CertifyError> {
    certify_with(g, CertifyOptions::default())
}

pub fn certify_with(g: &Graph, options: CertifyOptions) -> Result<Certificate, CertifyError> {
    connected_cyclomatic(g)?;
    let max_degree = g.max_degree();
    if max_degree > 3 {
        return Err(CertifyError::DegreeTooLarge(max_degree));
    }
    if let Some(e) = is_exceptional(g) {
        return Err(CertifyError::Exceptional(e));
    }
    build(g.clone(), options)
}

fn build(g: Graph, options: CertifyOptions) -> Result<Certificate, CertifyError> {
    let c = connected_cyclomatic(&g)?;
    if c == 0 {
        return Ok(Certificate::Leaf { graph: g, reason: LeafReason::TreeBase });
    }
    if c <= 2 {
        return Ok(Certificate::Leaf { graph: g, reason: LeafReason::SmallCyclomaticBase });
    }
    let Some((cut, report)) = find_good_cut_proof_guided_with(&g, options.max_cut_size)? else {
        return Err(CertifyError::Stuck { graph: g, max_cut_size: options.max_cut_size });
    };
    let [left, right] = cut.component_graphs(&g);
    let children = Box::new([build(left, options)?, build(right, options)?]);
    Ok(Certificate::Cut { graph: g, cut: cut.edges().to_vec(), report: Some(report), children })
}
