//! Graph file formats: graph6 lines and plain edge lists.
//!
//! An edge list starts with a header line `n m` followed by `m` lines `u v`
//! with 0-based vertices. Blank lines and `#` comments are skipped, and a file
//! may hold several graphs one after another.

use std::fmt::Write as _;

use hypo_core::graph6::parse_graph6_bounded;
use hypo_core::{to_graph6, Graph, Graph6Error, GraphError};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Error, PartialEq)]
pub enum FormatError {
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error("line {line}: expected `{expected}`, found `{found}`")]
    Syntax { line: usize, expected: &'static str, found: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("edge list ends after {found} of {expected} edges")]
    MissingEdges { expected: usize, found: usize },
}

pub fn read_graphs(text: &str, format: GraphFormat, bound: usize) -> Result<Vec<Graph>, FormatError> {
    match format {
        GraphFormat::Graph6 => read_graph6_lines(text, bound),
        GraphFormat::Edgelist => read_edge_lists(text, bound),
    }
}

pub fn read_graph6_lines(text: &str, bound: usize) -> Result<Vec<Graph>, FormatError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6_bounded(l.trim(), bound).map_err(|source| FormatError::Graph6 { line: i + 1, source }))
        .collect()
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn two_numbers(line: usize, text: &str, expected: &'static str) -> Result<(usize, usize), FormatError> {
    let syntax = || FormatError::Syntax { line, expected, found: text.to_owned() };
    let mut it = text.split_whitespace();
    let a = it.next().and_then(|t| t.parse().ok()).ok_or_else(syntax)?;
    let b = it.next().and_then(|t| t.parse().ok()).ok_or_else(syntax)?;
    if it.next().is_some() {
        return Err(syntax());
    }
    Ok((a, b))
}

pub fn read_edge_lists(text: &str, bound: usize) -> Result<Vec<Graph>, FormatError> {
    let mut lines = content_lines(text);
    let mut out = Vec::new();
    while let Some((header_line, header)) = lines.next() {
        let (n, m) = two_numbers(header_line, header, "n m")?;
        let mut edges = Vec::with_capacity(m);
        for found in 0..m {
            let (line, text) = lines.next().ok_or(FormatError::MissingEdges { expected: m, found })?;
            edges.push(two_numbers(line, text, "u v")?);
        }
        let g = Graph::from_edge_list_bounded(n, &edges, bound)
            .map_err(|source| FormatError::Graph { line: header_line, source })?;
        out.push(g);
    }
    Ok(out)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => to_graph6(g) + "\n",
        GraphFormat::Edgelist => write_edge_list(g),
    }
}
