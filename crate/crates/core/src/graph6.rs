//! graph6 text encoding (McKay's format) and the plain edge-list format.
//!
//! graph6 packs the upper triangle of the adjacency matrix, column by
//! column, six bits per printable byte. Orders up to 62 use a single size
//! byte; 63..=258047 use `~` plus three bytes. Decoding reports the byte
//! offset of the first malformed byte.

use crate::graph::{Graph, GraphError, MAX_ORDER};

const BIAS: u8 = 63;
const LONG_FORM_MARKER: u8 = 126; // '~'

/// Encodes a graph as a graph6 string.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG_FORM_MARKER);
        out.push(((n >> 12) & 0x3f) as u8 + BIAS);
        out.push(((n >> 6) & 0x3f) as u8 + BIAS);
        out.push((n & 0x3f) as u8 + BIAS);
    }

    let mut chunk = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if g.has_edge(i, j) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("printable ASCII")
}

/// Decodes a graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are tolerated.
pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let trimmed = text.trim();
    let body = trimmed.strip_prefix(">>graph6<<").unwrap_or(trimmed);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6 { offset: 0, reason: "empty input".into() });
    }

    let sixbit = |pos: usize| -> Result<usize, GraphError> {
        let b = *bytes.get(pos).ok_or_else(|| GraphError::Graph6 {
            offset: pos,
            reason: "truncated input".into(),
        })?;
        if !(BIAS..=LONG_FORM_MARKER).contains(&b) {
            return Err(GraphError::Graph6 {
                offset: pos,
                reason: format!("byte 0x{b:02x} outside graph6 range"),
            });
        }
        Ok((b - BIAS) as usize)
    };

    let (n, mut pos) = if bytes[0] == LONG_FORM_MARKER {
        if bytes.get(1) == Some(&LONG_FORM_MARKER) {
            return Err(GraphError::Graph6 {
                offset: 1,
                reason: "8-byte order form exceeds supported range".into(),
            });
        }
        let n = (sixbit(1)? << 12) | (sixbit(2)? << 6) | sixbit(3)?;
        (n, 4)
    } else {
        (sixbit(0)?, 1)
    };

    if n == 0 || n > MAX_ORDER {
        return Err(GraphError::Graph6 {
            offset: 0,
            reason: format!("order {n} outside supported 1..={MAX_ORDER}"),
        });
    }

    let bits = n * (n - 1) / 2;
    let expected_bytes = pos + bits.div_ceil(6);
    if bytes.len() != expected_bytes {
        return Err(GraphError::Graph6 {
            offset: bytes.len().min(expected_bytes),
            reason: format!(
                "expected {expected_bytes} bytes for order {n}, got {}",
                bytes.len()
            ),
        });
    }

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut chunk = 0usize;
    let mut remaining = 0u8;
    for j in 1..n {
        for i in 0..j {
            if remaining == 0 {
                chunk = sixbit(pos)?;
                pos += 1;
                remaining = 6;
            }
            remaining -= 1;
            if chunk >> remaining & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    if remaining > 0 && chunk & ((1 << remaining) - 1) != 0 {
        return Err(GraphError::Graph6 { offset: pos - 1, reason: "nonzero padding bits".into() });
    }

    Graph::from_edge_list(n, &edges)
}

/// Emits the plain edge-list format: order on the first line, one
/// `u v` pair per following line, 0-indexed.
pub fn to_edge_list_text(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the plain edge-list format. Blank lines are skipped.
pub fn from_edge_list_text(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (first_no, first) = lines
        .next()
        .ok_or_else(|| GraphError::EdgeList { line: 1, reason: "missing order line".into() })?;
    let n: usize = first.trim().parse().map_err(|_| GraphError::EdgeList {
        line: first_no + 1,
        reason: format!("order line {:?} is not a count", first.trim()),
    })?;

    let mut edges = Vec::new();
    for (no, line) in lines {
        let mut parts = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize, GraphError> {
            tok.ok_or_else(|| GraphError::EdgeList {
                line: no + 1,
                reason: "expected two endpoints".into(),
            })?
            .parse()
            .map_err(|_| GraphError::EdgeList { line: no + 1, reason: "bad endpoint".into() })
        };
        let u = parse(parts.next())?;
        let v = parse(parts.next())?;
        if parts.next().is_some() {
            return Err(GraphError::EdgeList {
                line: no + 1,
                reason: "trailing tokens after endpoints".into(),
            });
        }
        edges.push((u, v));
    }
    Graph::from_edge_list(n, &edges).map_err(|e| match e {
        GraphError::VertexOutOfRange { .. } | GraphError::SelfLoop { .. } => {
            GraphError::EdgeList { line: 0, reason: e.to_string() }
        }
        other => other,
    })
}
