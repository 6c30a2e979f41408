//! graph6 encoding and decoding.
//!
//! One graph per line, as produced by the usual small-graph generator tools.
//! The upper triangle of the adjacency matrix is packed column by column into
//! 6-bit groups, each stored as one printable byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

/// Decodes a single graph6 record. A leading ">>graph6<<" header is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut record = text.trim_end_matches(['\r', '\n']);
    let mut base = 0;
    if let Some(rest) = record.strip_prefix(HEADER) {
        record = rest;
        base = HEADER.len();
    }
    let bytes = record.as_bytes();
    if bytes.is_empty() {
        return Err(Error::graph6(base, "empty record"));
    }
    let (n, mut pos) = parse_order(bytes, base)?;
    let bit_count = n * (n.saturating_sub(1)) / 2;
    let byte_count = bit_count.div_ceil(6);
    if bytes.len() < pos + byte_count {
        return Err(Error::graph6(
            base + bytes.len(),
            format!("truncated record: expected {byte_count} adjacency bytes for order {n}"),
        ));
    }
    if bytes.len() > pos + byte_count {
        return Err(Error::graph6(base + pos + byte_count, "trailing garbage"));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut current = 0u8;
    let mut remaining = 0usize;
    for col in 1..n {
        for row in 0..col {
            if remaining == 0 {
                current = decode_byte(bytes[pos], base + pos)?;
                pos += 1;
                remaining = 6;
            }
            if current >> (remaining - 1) & 1 == 1 {
                edges.push((row, col));
            }
            remaining -= 1;
            bit += 1;
        }
    }
    debug_assert_eq!(bit, bit_count);
    Graph::from_edges(n, &edges)
}

fn parse_order(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    let b0 = decode_byte(bytes[0], base)? as usize;
    if bytes[0] != b'~' {
        if b0 > MAX_ORDER {
            return Err(order_too_large(b0, base));
        }
        return Ok((b0, 1));
    }
    // Long form: '~' then 3 bytes, or "~~" then 6 bytes. Orders that large are
    // far beyond the supported maximum, so decode just enough to report them.
    if bytes.len() >= 2 && bytes[1] == b'~' {
        if bytes.len() < 8 {
            return Err(Error::graph6(base, "malformed length prefix"));
        }
        let mut n = 0usize;
        for (i, &b) in bytes[2..8].iter().enumerate() {
            n = n << 6 | decode_byte(b, base + 2 + i)? as usize;
        }
        Err(order_too_large(n, base))
    } else {
        if bytes.len() < 4 {
            return Err(Error::graph6(base, "malformed length prefix"));
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = n << 6 | decode_byte(b, base + 1 + i)? as usize;
        }
        Err(order_too_large(n, base))
    }
}

fn order_too_large(n: usize, base: usize) -> Error {
    Error::graph6(
        base,
        format!("order {n} exceeds the supported maximum {MAX_ORDER}"),
    )
}

fn decode_byte(b: u8, offset: usize) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::graph6(
            offset,
            format!("out-of-range character 0x{b:02x}"),
        ))
    }
}

/// Encodes a graph as a graph6 record.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= 62);
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            acc = acc << 1 | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push((acc + 63) as char);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family, FamilySpec};

    // Hand-encoded oracle values, cross-checked against the published format:
    // K4 packs the six upper-triangle bits 111111 -> 63 -> '~', order byte 'C'.
    #[test]
    fn parses_k4() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
        let k4 = generate(&FamilySpec::of_order(Family::Complete, 4)).unwrap();
        assert_eq!(g, k4);
    }

    #[test]
    fn parses_single_edge_pair() {
        // 'A' = order 2; '_' = 95 -> 32 -> bits 100000, so the one bit is set.
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn parses_empty_4_vertex_graph() {
        let g = parse_graph6("C?").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn encodes_k4_and_empty() {
        let k4 = generate(&FamilySpec::of_order(Family::Complete, 4)).unwrap();
        assert_eq!(to_graph6(&k4), "C~");
        let e4 = Graph::empty(4).unwrap();
        assert_eq!(to_graph6(&e4), "C?");
    }

    #[test]
    fn header_is_tolerated() {
        let g = parse_graph6(">>graph6<<C~").unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn petersen_round_trips() {
        let g = generate(&FamilySpec::fixed(Family::Petersen)).unwrap();
        let h = parse_graph6(&to_graph6(&g)).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn truncated_record_reports_offset() {
        let err = parse_graph6("C").unwrap_err();
        assert!(matches!(err, Error::Graph6 { offset: 1, .. }), "{err}");
    }

    #[test]
    fn trailing_garbage_reports_offset() {
        let err = parse_graph6("C~~").unwrap_err();
        assert!(matches!(err, Error::Graph6 { offset: 2, .. }), "{err}");
    }

    #[test]
    fn out_of_range_character_reports_offset() {
        let err = parse_graph6("C!").unwrap_err();
        assert!(matches!(err, Error::Graph6 { offset: 1, .. }), "{err}");
    }

    #[test]
    fn oversized_order_is_rejected() {
        // '~' long form declaring a 63-vertex graph.
        let err = parse_graph6("~??~??????????").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("exceeds"), "{msg}");
    }

    #[test]
    fn zero_vertex_graph_round_trips() {
        let g = Graph::empty(0).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s, "?");
        assert_eq!(parse_graph6(&s).unwrap().n(), 0);
    }
}
