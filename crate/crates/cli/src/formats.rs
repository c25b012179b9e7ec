//! Text formats: edge-list files for digraphs and "v c" files for colorings.
//!
//! Edge lists start with the vertex count on the first significant line and
//! continue with one "u v" line per edge; '#' starts a comment and blank
//! lines are skipped. Coloring files use the same comment rules and hold one
//! "v c" line per vertex. Emission sorts edges by (u, v) and coloring lines
//! by vertex, so emitting and reparsing reproduces the input exactly.

use std::collections::HashSet;
use std::fmt;

use dichroma::{Coloring, Digraph};

/// A malformed input file, with the 1-based offending line (0 when the
/// problem concerns the file as a whole).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> ParseError {
        ParseError { line, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

/// Significant lines of a file: (1-based number, trimmed text), comments and
/// blanks dropped.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.trim()))
        .filter(|(_, s)| !s.is_empty() && !s.starts_with('#'))
}

pub fn parse_edge_list(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = significant_lines(text);
    let (first_no, first) = lines
        .next()
        .ok_or_else(|| ParseError::at(0, "missing vertex count line"))?;
    let n: usize = first
        .parse()
        .map_err(|_| ParseError::at(first_no, format!("expected vertex count, got '{first}'")))?;

    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (no, line) in lines {
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(ParseError::at(no, format!("expected 'u v', got '{line}'"))),
        };
        let u: usize = u
            .parse()
            .map_err(|_| ParseError::at(no, format!("invalid vertex '{u}'")))?;
        let v: usize = v
            .parse()
            .map_err(|_| ParseError::at(no, format!("invalid vertex '{v}'")))?;
        if u >= n || v >= n {
            let w = if u >= n { u } else { v };
            return Err(ParseError::at(
                no,
                format!("vertex {w} out of range for a digraph on {n} vertices"),
            ));
        }
        if u == v {
            return Err(ParseError::at(no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u, v)) {
            return Err(ParseError::at(no, format!("duplicate edge ({u}, {v})")));
        }
        edges.push((u, v));
    }
    Digraph::from_edge_list(n, &edges).map_err(|e| ParseError::at(0, e.to_string()))
}

/// Renders a digraph with the vertex count first and edges sorted by (u, v).
pub fn emit_edge_list(d: &Digraph) -> String {
    let mut edges: Vec<(usize, usize)> = d.edges().collect();
    edges.sort_unstable();
    let mut out = format!("{}\n", d.vertex_count());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a coloring file for a digraph on n vertices. Every vertex must
/// appear exactly once; line order is not significant.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring, ParseError> {
    let mut assignment = vec![usize::MAX; n];
    for (no, line) in significant_lines(text) {
        let mut it = line.split_whitespace();
        let (v, c) = match (it.next(), it.next(), it.next()) {
            (Some(v), Some(c), None) => (v, c),
            _ => return Err(ParseError::at(no, format!("expected 'v c', got '{line}'"))),
        };
        let v: usize = v
            .parse()
            .map_err(|_| ParseError::at(no, format!("invalid vertex '{v}'")))?;
        let c: usize = c
            .parse()
            .map_err(|_| ParseError::at(no, format!("invalid color '{c}'")))?;
        if v >= n {
            return Err(ParseError::at(
                no,
                format!("vertex {v} out of range for a digraph on {n} vertices"),
            ));
        }
        if assignment[v] != usize::MAX {
            return Err(ParseError::at(no, format!("vertex {v} colored twice")));
        }
        assignment[v] = c;
    }
    if let Some(v) = assignment.iter().position(|&c| c == usize::MAX) {
        return Err(ParseError::at(0, format!("vertex {v} has no color")));
    }
    Ok(Coloring::new(assignment))
}

/// Renders a coloring with a header comment recording the run parameters
/// (seed printed as '-' when none applies) and one "v c" line per vertex.
pub fn emit_coloring(
    c: &Coloring,
    m: usize,
    algo: &str,
    bound: usize,
    seed: Option<u64>,
) -> String {
    let seed = seed.map_or_else(|| "-".to_string(), |s| s.to_string());
    let mut out = format!("# m={m} algo={algo} bound={bound} seed={seed}\n");
    for (v, &color) in c.assignment().iter().enumerate() {
        out.push_str(&format!("{v} {color}\n"));
    }
    out
}
