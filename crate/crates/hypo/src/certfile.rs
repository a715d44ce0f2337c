//! Line-oriented certificate files.
//!
//! ```text
//! CERT 4 6
//! CUT 0-1,0-2,1-3,2-3 C~
//! LEAF TreeBase A_
//! LEAF TreeBase A_
//! ```
//!
//! The header gives the root order and size. Records follow in pre-order;
//! every `CUT` record is followed by its two subtrees. Cut edges use the
//! labels of the node graph, which is stored as graph6 on the same line.

use std::fmt::Write as _;

use hypo_core::graph6::parse_graph6_bounded;
use hypo_core::{to_graph6, Certificate, Edge, Graph6Error, LeafReason};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CertFileError {
    #[error("missing `CERT n m` header")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error("certificate ends before the tree is complete")]
    Truncated,
    #[error("line {0}: records after the end of the tree")]
    Trailing(usize),
    #[error("header says n={n} m={m}, root graph has n={root_n} m={root_m}")]
    HeaderMismatch { n: usize, m: usize, root_n: usize, root_m: usize },
}

pub fn write_certificate(cert: &Certificate) -> String {
    let root = cert.graph();
    let mut out = format!("CERT {} {}\n", root.order(), root.size());
    for node in cert.nodes() {
        match node {
            Certificate::Leaf { graph, reason } => {
                let _ = writeln!(out, "LEAF {reason} {}", to_graph6(graph));
            }
            Certificate::Cut { graph, cut, .. } => {
                let edges: Vec<String> = cut.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                let _ = writeln!(out, "CUT {} {}", edges.join(","), to_graph6(graph));
            }
        }
    }
    out
}

pub fn read_certificate(text: &str, bound: usize) -> Result<Certificate, CertFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or(CertFileError::MissingHeader)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match fields.as_slice() {
        ["CERT", n, m] => match (n.parse(), m.parse()) {
            (Ok(n), Ok(m)) => (n, m),
            _ => return Err(syntax(line, "header counts must be integers")),
        },
        _ => return Err(CertFileError::MissingHeader),
    };
    let records: Vec<(usize, &str)> = lines.collect();
    let mut pos = 0;
    let cert = parse_node(&records, &mut pos, bound)?;
    if let Some(&(line, _)) = records.get(pos) {
        return Err(CertFileError::Trailing(line));
    }
    let root = cert.graph();
    if (root.order(), root.size()) != (n, m) {
        return Err(CertFileError::HeaderMismatch { n, m, root_n: root.order(), root_m: root.size() });
    }
    Ok(cert)
}

fn syntax(line: usize, message: impl Into<String>) -> CertFileError {
    CertFileError::Syntax { line, message: message.into() }
}

fn parse_node(records: &[(usize, &str)], pos: &mut usize, bound: usize) -> Result<Certificate, CertFileError> {
    let &(line, text) = records.get(*pos).ok_or(CertFileError::Truncated)?;
    *pos += 1;
    let fields: Vec<&str> = text.split_whitespace().collect();
    let graph = |g6: &str| parse_graph6_bounded(g6, bound).map_err(|source| CertFileError::Graph6 { line, source });
    match fields.as_slice() {
        ["LEAF", reason, g6] => {
            let reason: LeafReason =
                reason.parse().map_err(|_| syntax(line, format!("unknown leaf reason `{reason}`")))?;
            Ok(Certificate::Leaf { graph: graph(g6)?, reason })
        }
        ["CUT", edges, g6] => {
            let cut = parse_edges(line, edges)?;
            let graph = graph(g6)?;
            let left = parse_node(records, pos, bound)?;
            let right = parse_node(records, pos, bound)?;
            Ok(Certificate::Cut { graph, cut, report: None, children: Box::new([left, right]) })
        }
        _ => Err(syntax(line, format!("expected `LEAF <reason> <graph6>` or `CUT <edges> <graph6>`, found `{text}`"))),
    }
}

fn parse_edges(line: usize, text: &str) -> Result<Vec<Edge>, CertFileError> {
    text.split(',')
        .map(|pair| {
            let (u, v) = pair.split_once('-').ok_or_else(|| syntax(line, format!("bad edge `{pair}`")))?;
            match (u.parse(), v.parse()) {
                (Ok(u), Ok(v)) => Ok((u, v)),
                _ => Err(syntax(line, format!("bad edge `{pair}`"))),
            }
        })
        .collect()
}
