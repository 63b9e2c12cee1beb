//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! 3
//! 1 2
//! 2 3
//! ```
//!
//! The first significant line is the vertex count; every further significant
//! line is one edge `i j` with 1-based endpoints.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::{normalize_pair, Graph};
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    let vertex_count = header.parse::<usize>().map_err(|_| Error::Parse {
        line: header_line,
        message: format!("expected a vertex count, found {header:?}"),
    })?;

    let mut pairs = Vec::new();
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [a, b] = fields.as_slice() else {
            return Err(Error::Parse {
                line,
                message: format!("expected two vertex ids, found {content:?}"),
            });
        };
        let parse_id = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("invalid vertex id {s:?}"),
            })
        };
        pairs.push((line, parse_id(a)?, parse_id(b)?));
    }

    if vertex_count == 0 {
        return Err(Error::Parse {
            line: header_line,
            message: Error::NoVertices.to_string(),
        });
    }
    // Validate edge by edge so errors carry the offending line.
    let mut seen = BTreeSet::new();
    for (line, i, j) in pairs {
        let edge = normalize_pair(vertex_count, i, j).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        if !seen.insert(edge) {
            return Err(Error::Parse {
                line,
                message: Error::DuplicateEdge(edge.0, edge.1).to_string(),
            });
        }
    }
    Ok(Graph::from_normalized(
        vertex_count,
        seen.into_iter().collect(),
    ))
}

/// Renders `graph` with edges `i < j` in lexicographic order.
pub fn write(graph: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", graph.vertex_count());
    for (i, j) in graph.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}
