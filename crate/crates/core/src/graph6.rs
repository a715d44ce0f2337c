//! The graph6 text encoding.
//!
//! Layout: an order header followed by the upper triangle of the adjacency
//! matrix in column-major order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed big-endian into 6-bit groups, each group offset by 63.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Graph6Error, Graph6ErrorKind};
use crate::graph::{Graph, DEFAULT_ORDER_BOUND, HARD_ORDER_LIMIT};

const HEADER: &[u8] = b">>graph6<<";

/// Encodes `g` as a graph6 string (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let bytes = to_graph6_bytes(g);
    // every byte is in 63..=126
    String::from_utf8(bytes).expect("graph6 output is ASCII")
}

pub fn to_graph6_bytes(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbor_mask(j);
        for i in 0..j {
            acc = acc << 1 | (col >> i & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

/// Parses one graph6 line with the default order bound.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    parse_graph6_bounded(text, DEFAULT_ORDER_BOUND)
}

/// Parses one graph6 line. An optional `>>graph6<<` header is accepted and
/// trailing ASCII whitespace (line terminators) is ignored.
pub fn parse_graph6_bounded(text: &str, bound: usize) -> Result<Graph, Graph6Error> {
    let bound = bound.min(HARD_ORDER_LIMIT);
    let raw = text.trim_end().as_bytes();
    let start = if raw.starts_with(HEADER) { HEADER.len() } else { 0 };
    let body = &raw[start..];
    let err = |at: usize, kind| Graph6Error { offset: start + at, kind };

    if body.is_empty() {
        return Err(err(0, Graph6ErrorKind::Empty));
    }
    if let Some(at) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(at, Graph6ErrorKind::InvalidByte(body[at])));
    }

    let (n, mut pos) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else if body.get(1) != Some(&126) {
        if body.len() < 4 {
            return Err(err(body.len(), Graph6ErrorKind::Truncated { expected: 4 }));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    } else {
        if body.len() < 8 {
            return Err(err(body.len(), Graph6ErrorKind::Truncated { expected: 8 }));
        }
        let n = body[2..8].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 8)
    };
    if n > bound {
        return Err(err(0, Graph6ErrorKind::OrderTooLarge { order: n, bound }));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let data_len = bits.div_ceil(6);
    let data = &body[pos..];
    if data.len() < data_len {
        return Err(err(
            body.len(),
            Graph6ErrorKind::Truncated { expected: pos + data_len },
        ));
    }
    if data.len() > data_len {
        return Err(err(pos + data_len, Graph6ErrorKind::TrailingGarbage));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[data_len - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(pos + data_len - 1, Graph6ErrorKind::NonZeroPadding));
        }
    }
    pos += data_len;
    debug_assert_eq!(pos, body.len());
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_is_at_sign() {
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn known_encodings() {
        // Reference strings as produced by networkx / nauty's showg.
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::complete(2)), "A_");
        assert_eq!(to_graph6(&Graph::path(4)), "Ch");
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::complete_bipartite(2, 3)), "D]o");
        assert_eq!(to_graph6(&Graph::cycle(6)), "EhEG");
    }

    #[test]
    fn p4_round_trip() {
        let p4 = Graph::path(4);
        assert_eq!(parse_graph6(&to_graph6(&p4)).unwrap(), p4);
    }

    #[test]
    fn k23_round_trip_string() {
        let s = to_graph6(&Graph::complete_bipartite(2, 3));
        assert_eq!(to_graph6(&parse_graph6(&s).unwrap()), s);
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(parse_graph6(">>graph6<<Ch\n").unwrap(), Graph::path(4));
    }

    #[test]
    fn large_order_header() {
        let mut g = Graph::empty(63);
        g.insert_edge(0, 62);
        g.insert_edge(5, 6);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6_bounded(&s, 64).unwrap(), g);
        assert_eq!(
            parse_graph6(&s).unwrap_err().kind,
            Graph6ErrorKind::OrderTooLarge { order: 63, bound: 32 }
        );
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_graph6("").unwrap_err().kind, Graph6ErrorKind::Empty);
        assert_eq!(
            parse_graph6("C").unwrap_err(),
            Graph6Error { offset: 1, kind: Graph6ErrorKind::Truncated { expected: 2 } }
        );
        assert_eq!(
            parse_graph6("Chh").unwrap_err(),
            Graph6Error { offset: 2, kind: Graph6ErrorKind::TrailingGarbage }
        );
        assert_eq!(
            parse_graph6("C h").unwrap_err(),
            Graph6Error { offset: 1, kind: Graph6ErrorKind::InvalidByte(b' ') }
        );
        // K3 is "Bw"; setting a padding bit gives "Bx".
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(
            parse_graph6("Bx").unwrap_err(),
            Graph6Error { offset: 1, kind: Graph6ErrorKind::NonZeroPadding }
        );
        assert_eq!(parse_graph6("~?").unwrap_err().kind, Graph6ErrorKind::Truncated { expected: 4 });
    }
}
