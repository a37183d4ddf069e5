//! graph6 encoding: an order header followed by the upper triangle of the
//! adjacency matrix, column by column, packed big-endian six bits per
//! printable byte (bias 63).

use thiserror::Error;

use super::Graph;

/// Largest order representable with the one- or four-byte header.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

const BIAS: u8 = 63;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} outside the printable range 63..=126")]
    OutOfRange { offset: usize, byte: u8 },
    #[error("byte {offset}: malformed order header")]
    BadHeader { offset: usize },
    #[error("byte {offset}: bit stream truncated, expected {expected} body bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("byte {offset}: unexpected trailing data")]
    Trailing { offset: usize },
    #[error("graph6 order must be at least 1")]
    ZeroOrder,
    #[error("order {0} exceeds the supported graph6 range")]
    OrderTooLarge(usize),
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. A leading `>>graph6<<` marker and surrounding
/// whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let trimmed = text.trim();
    let (skip, line) = match trimmed.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if line.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (k, &b) in line.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(Graph6Error::OutOfRange { offset: skip + k, byte: b });
        }
    }

    let (n, header) = if line[0] < 126 {
        ((line[0] - BIAS) as usize, 1)
    } else {
        if line.len() < 4 {
            return Err(Graph6Error::BadHeader { offset: skip + line.len() });
        }
        if line[1] == 126 {
            // Eight-byte header, only used for n > 258047.
            return Err(Graph6Error::BadHeader { offset: skip + 1 });
        }
        let n = line[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        (n, 4)
    };
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }

    let expected = body_len(n);
    let body = &line[header..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated { offset: skip + line.len(), expected });
    }
    if body.len() > expected {
        return Err(Graph6Error::Trailing { offset: skip + header + expected });
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - BIAS;
            if byte & (0b10_0000 >> (bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Canonical graph6 encoding: shortest order header, zero-padded body.
pub fn serialize_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= GRAPH6_MAX_ORDER {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        return Err(Graph6Error::OrderTooLarge(n));
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
