//! Short-form graph6 codec for graphs on at most 62 vertices.
//!
//! The format: one header byte `n + 63`, then the upper triangle of the
//! adjacency matrix read column by column (bit (u, v) for u < v, columns in
//! increasing v), packed six bits per byte most-significant first, each
//! data byte offset by 63. The final byte is zero-padded.

use super::Graph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte 0x{byte:02x} at offset {offset} is outside the graph6 range 63..=126")]
    ByteOutOfRange { byte: u8, offset: usize },
    #[error("long-form graph6 header at offset 0: only graphs on at most 62 vertices are supported")]
    LongForm,
    #[error("record too short: {n} vertices need {expected} data bytes, found {found}")]
    TooShort { n: usize, expected: usize, found: usize },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    BadPadding { offset: usize },
    #[error("graph on {n} vertices cannot be encoded in short form (limit 62)")]
    TooLarge { n: usize },
}

fn triangle_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn data_bytes(n: usize) -> usize {
    (triangle_bits(n) + 5) / 6
}

/// Decode a short-form graph6 record.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange { byte: b, offset });
        }
    }
    if bytes[0] == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (bytes[0] - 63) as usize;
    let expected = data_bytes(n);
    let data = &bytes[1..];
    if data.len() < expected {
        return Err(Graph6Error::TooShort { n, expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData { offset: 1 + expected });
    }

    let nbits = triangle_bits(n);
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'cols: for v in 1..n {
        for u in 0..v {
            let byte = data[bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                edges.push((u, v));
            }
            bit += 1;
            if bit == nbits {
                break 'cols;
            }
        }
    }
    // the spare low-order bits of the final byte must be zero
    if nbits % 6 != 0 {
        let last = data[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::BadPadding { offset: expected });
        }
    }
    Ok(Graph::new(n, &edges).expect("decoded edges are in range"))
}

/// Encode a graph as a short-form graph6 record.
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > 62 {
        return Err(Graph6Error::TooLarge { n });
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        // K_2, its complement, and K_3
        assert_eq!(encode_graph6(&Graph::complete(2)).unwrap(), "A_");
        assert_eq!(encode_graph6(&Graph::empty(2)).unwrap(), "A?");
        assert_eq!(encode_graph6(&Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2));
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
    }

    #[test]
    fn tiny_graphs() {
        assert_eq!(encode_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        assert_eq!(encode_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn roundtrip_misc() {
        for g in [
            Graph::path(7),
            Graph::cycle(6),
            Graph::star(9),
            Graph::hypercube(4),
            Graph::complete(10),
            Graph::empty(13),
            Graph::complete(3).disjoint_union(&Graph::path(4)),
        ] {
            let enc = encode_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&enc).unwrap(), g, "roundtrip failed for {enc}");
        }
    }

    #[test]
    fn trailing_newline_is_tolerated() {
        assert_eq!(parse_graph6("Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn malformed_records() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("B "),
            Err(Graph6Error::ByteOutOfRange { byte: b' ', offset: 1 })
        );
        assert_eq!(
            parse_graph6("\x10w"),
            Err(Graph6Error::ByteOutOfRange { byte: 0x10, offset: 0 })
        );
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::LongForm));
        assert_eq!(
            parse_graph6("B"),
            Err(Graph6Error::TooShort { n: 3, expected: 1, found: 0 })
        );
        assert_eq!(
            parse_graph6("Bww"),
            Err(Graph6Error::TrailingData { offset: 2 })
        );
        // K_3 needs only 3 bits; setting a padding bit is malformed
        assert_eq!(parse_graph6("Bx"), Err(Graph6Error::BadPadding { offset: 1 }));
    }

    #[test]
    fn encode_rejects_oversized() {
        assert_eq!(
            encode_graph6(&Graph::empty(63)),
            Err(Graph6Error::TooLarge { n: 63 })
        );
    }
}
