//! Hypoenergetic graphs with maximum degree at most three.
//!
//! A connected graph is hypoenergetic when its energy, the sum of the
//! absolute values of its adjacency eigenvalues, is smaller than its order.
//! With maximum degree at most three exactly five such graphs exist: the
//! trees `S1`, `S3`, `S4`, `W` and the complete bipartite graph `K_{2,3}`.
//!
//! This crate checks that statement two ways. [`enumerate`] generates every
//! connected graph with bounded degree up to a given order, isomorphism-free,
//! and [`spectral`] classifies each one. [`certify`] builds decomposition
//! certificates for the cyclic case: a binary tree of edge cuts whose leaves
//! are trees or graphs of cyclomatic number at most two, each step justified
//! by the fact that deleting an edge cut never increases the energy.
//! [`verify`] re-checks such a certificate without reusing the search.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod canon;
pub mod catalog;
pub mod certify;
pub mod charpoly;
pub mod cuts;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod spectral;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, canonical_graph, canonical_labeling, CanonicalForm};
pub use catalog::{is_exceptional, Exceptional};
pub use certify::{certify, Certificate, CertifyError, CutReport, LeafReason};
pub use charpoly::{char_poly_int, IntPoly};
pub use cuts::{edge_connectivity, enumerate_two_sided_cuts, strip_pendants, two_sided_cut, EdgeCut};
pub use enumerate::{connected_graphs, hypoenergetic_scan, trees, EnumSpec, GraphClass};
pub use error::{Graph6Error, GraphError};
pub use graph::{Edge, Graph, DEFAULT_ORDER_BOUND, HARD_ORDER_LIMIT};
pub use graph6::{parse_graph6, to_graph6};
pub use spectral::{classify, energy, spectrum, Classification, EnergyVerdict, SpectralError, Spectrum};
pub use verify::{verify_certificate, VerificationReport, VerifyError};
