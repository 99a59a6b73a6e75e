//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use super::{Graph, GraphError, MAX_VERTICES};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 { offset, reason: reason.into() }
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(err(skip + i, format!("byte {b:#04x} outside the printable graph6 range")));
        }
    }
    let first = *body.first().ok_or_else(|| err(skip, "empty input"))?;
    let (n, header_len) = if first < 126 {
        ((first - BIAS) as usize, 1)
    } else {
        if body.len() < 4 {
            return Err(err(skip + body.len(), "truncated size header"));
        }
        if body[1] == 126 {
            return Err(err(skip + 1, "vertex count out of supported range"));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(err(skip, format!("vertex count {n} out of supported range (max {MAX_VERTICES})")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let payload = &body[header_len..];
    if payload.len() < nbytes {
        return Err(err(
            skip + body.len(),
            format!("truncated payload: expected {nbytes} bytes, found {}", payload.len()),
        ));
    }
    if payload.len() > nbytes {
        return Err(err(skip + header_len + nbytes, "trailing bytes after payload"));
    }

    let bit = |k: usize| (payload[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    for pad in nbits..nbytes * 6 {
        if bit(pad) {
            return Err(err(skip + header_len + pad / 6, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, path};

    #[test]
    fn decodes_small_examples() {
        assert_eq!(parse_graph6("C~").unwrap(), complete(4));
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        // a-c, a-e, b-d, d-e on a..e
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), complete(4));
    }

    #[test]
    fn encodes_small_examples() {
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
        assert_eq!(emit_graph6(&complete(4)), "C~");
        let p4 = emit_graph6(&path(4));
        assert_eq!(p4.len(), 2);
        assert_eq!(parse_graph6(&p4).unwrap(), path(4));
    }

    #[test]
    fn reports_offsets() {
        assert_eq!(parse_graph6("").unwrap_err(), err(0, "empty input"));
        match parse_graph6("D") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match parse_graph6("C~~") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("C\x01") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        // 40 vertices is valid graph6 but beyond the supported range
        assert!(matches!(parse_graph6("g"), Err(GraphError::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("~~"), Err(GraphError::Graph6 { .. })));
    }
}
