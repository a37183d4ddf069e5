use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("missing header line \"<n> <edge count>\"")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn integer(token: &str, line: usize) -> Result<usize, EdgeListError> {
    token.parse().map_err(|_| EdgeListError::Syntax {
        line,
        message: format!("expected a non-negative integer, found {token:?}"),
    })
}

/// Parses the edge-list text format: a header line `n m` followed by
/// whitespace-separated vertex pairs, one per line. Blank lines and lines
/// starting with `#` are skipped. The edge count in the header is
/// informational; duplicates collapse, so it may exceed the final size.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines =
        text.lines().enumerate().map(|(k, l)| (k + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let mut tokens = header.split_whitespace();
    let n = integer(tokens.next().ok_or(EdgeListError::MissingHeader)?, hline)?;
    if let Some(count) = tokens.next() {
        integer(count, hline)?;
    }
    if let Some(extra) = tokens.next() {
        return Err(EdgeListError::Syntax { line: hline, message: format!("unexpected token {extra:?} in header") });
    }

    let mut edges = Vec::new();
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(EdgeListError::Syntax {
                line,
                message: format!("expected two vertex indices, found {}", tokens.len()),
            });
        }
        let a = integer(tokens[0], line)?;
        let b = integer(tokens[1], line)?;
        for vertex in [a, b] {
            if vertex >= n {
                return Err(EdgeListError::VertexOutOfRange { line, vertex, n });
            }
        }
        if a == b {
            return Err(EdgeListError::SelfLoop { line, vertex: a });
        }
        edges.push((a, b));
    }
    Ok(Graph::new(n, edges)?)
}
