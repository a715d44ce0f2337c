use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("order {order} exceeds the bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("graph is disconnected, components {components:?}")]
    Disconnected { components: Vec<Vec<usize>> },
    #[error("need at least {needed} vertices, got {order}")]
    TooSmall { needed: usize, order: usize },
    #[error("edge {0:?} is not in the graph")]
    MissingEdge(Edge),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    /// A byte outside the printable range `63..=126`.
    InvalidByte(u8),
    /// The encoded order is above the configured bound.
    OrderTooLarge { order: usize, bound: usize },
    /// Fewer data bytes than the order requires.
    Truncated { expected: usize },
    TrailingGarbage,
    /// Padding bits in the last byte are not zero.
    NonZeroPadding,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {offset}: {kind:?}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}
