//! The five exceptional graphs: the hypoenergetic connected graphs with
//! maximum degree at most three.

use core::fmt;
use core::str::FromStr;

use crate::canon::canonical_form;
use crate::graph::{Edge, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exceptional {
    /// A single vertex.
    S1,
    /// The star on three vertices.
    S3,
    /// The star on four vertices.
    S4,
    /// Two 3-stars whose centers are joined through a common middle vertex.
    W,
    /// The complete bipartite graph `K_{2,3}`.
    K23,
}

/// Edge list of `W`, found as the unique 7-vertex tree with maximum degree
/// three and energy below 7 (see the regeneration test in `enumerate`).
pub const W_EDGES: [Edge; 6] = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)];

const K23_EDGES: [Edge; 6] = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)];

impl Exceptional {
    pub const ALL: [Exceptional; 5] =
        [Exceptional::S1, Exceptional::S3, Exceptional::S4, Exceptional::W, Exceptional::K23];

    /// The four trees in the catalog.
    pub const TREES: [Exceptional; 4] =
        [Exceptional::S1, Exceptional::S3, Exceptional::S4, Exceptional::W];

    pub fn name(self) -> &'static str {
        match self {
            Exceptional::S1 => "S1",
            Exceptional::S3 => "S3",
            Exceptional::S4 => "S4",
            Exceptional::W => "W",
            Exceptional::K23 => "K23",
        }
    }

    pub fn order(self) -> usize {
        match self {
            Exceptional::S1 => 1,
            Exceptional::S3 => 3,
            Exceptional::S4 => 4,
            Exceptional::W => 7,
            Exceptional::K23 => 5,
        }
    }

    pub fn edges(self) -> &'static [Edge] {
        match self {
            Exceptional::S1 => &[],
            Exceptional::S3 => &[(0, 1), (0, 2)],
            Exceptional::S4 => &[(0, 1), (0, 2), (0, 3)],
            Exceptional::W => &W_EDGES,
            Exceptional::K23 => &K23_EDGES,
        }
    }

    pub fn graph(self) -> Graph {
        Graph::from_edge_list(self.order(), self.edges()).expect("catalog edge lists are valid")
    }

    pub fn is_tree(self) -> bool {
        self != Exceptional::K23
    }
}

impl fmt::Display for Exceptional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown exceptional graph name")]
pub struct UnknownName;

impl FromStr for Exceptional {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Exceptional::ALL.into_iter().find(|e| e.name() == s).ok_or(UnknownName)
    }
}

/// The catalog member isomorphic to `g`, if any.
pub fn is_exceptional(g: &Graph) -> Option<Exceptional> {
    let candidate = match (g.order(), g.size()) {
        (1, 0) => Exceptional::S1,
        (3, 2) => Exceptional::S3,
        (4, 3) => Exceptional::S4,
        (5, 6) => Exceptional::K23,
        (7, 6) => Exceptional::W,
        _ => return None,
    };
    if g.order() == 1 {
        return Some(candidate);
    }
    // cheap rejections before canonical comparison
    let reference = candidate.graph();
    let mut degrees = g.degree_sequence();
    let mut expected = reference.degree_sequence();
    degrees.sort_unstable();
    expected.sort_unstable();
    if degrees != expected {
        return None;
    }
    (canonical_form(g) == canonical_form(&reference)).then_some(candidate)
}
