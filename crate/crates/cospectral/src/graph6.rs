//! graph6 encoding and decoding.
//!
//! The format packs the upper triangle of the adjacency matrix column by
//! column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) into 6-bit groups, each
//! stored as one printable byte offset by 63. The vertex count precedes the
//! bits: a single byte `n + 63` for `n <= 62`, `~` followed by three bytes
//! (18 bits) for `n <= 258047`, and `~~` followed by six bytes (36 bits)
//! beyond that. Decoding is strict: every byte must lie in `63..=126`,
//! the line must contain exactly the required number of bit bytes, and
//! padding bits must be zero.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. A leading `>>graph6<<` header is tolerated and
/// skipped; surrounding ASCII whitespace is ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let trimmed = line.trim();
    let body = trimmed.strip_prefix(HEADER).unwrap_or(trimmed);
    let base = trimmed.len() - body.len();
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 {
            pos: base,
            reason: "empty line".into(),
        });
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::Graph6 {
                pos: base + i,
                reason: format!("byte {b:#04x} outside printable range 63..=126"),
            });
        }
    }

    let (n, mut idx) = decode_size(bytes, base)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if bytes.len() - idx != byte_count {
        return Err(Error::Graph6 {
            pos: base + bytes.len().min(idx + byte_count),
            reason: format!(
                "expected {byte_count} adjacency bytes for n={n}, found {}",
                bytes.len() - idx
            ),
        });
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    let mut word = 0u8;
    let mut remaining = 0u8;
    for v in 1..n {
        for u in 0..v {
            if remaining == 0 {
                word = bytes[idx] - OFFSET;
                idx += 1;
                remaining = 6;
            }
            if word & 0b10_0000 != 0 {
                g.set_edge(u, v);
            }
            word <<= 1;
            remaining -= 1;
            bit += 1;
        }
    }
    debug_assert_eq!(bit, bit_count);
    if remaining > 0 && word & (((1u8 << remaining) - 1) << (6 - remaining)) != 0 {
        return Err(Error::Graph6 {
            pos: base + idx - 1,
            reason: "nonzero padding bits".into(),
        });
    }
    Ok(g)
}

fn decode_size(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - OFFSET) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::Graph6 {
                pos: base + bytes.len(),
                reason: "truncated 3-byte size prefix".into(),
            });
        }
        let n = read_groups(&bytes[1..4]);
        if n < 63 {
            return Err(Error::Graph6 {
                pos: base,
                reason: format!("non-minimal size prefix for n={n}"),
            });
        }
        return Ok((n, 4));
    }
    if bytes.len() < 8 {
        return Err(Error::Graph6 {
            pos: base + bytes.len(),
            reason: "truncated 6-byte size prefix".into(),
        });
    }
    let n = read_groups(&bytes[2..8]);
    if n < 258_048 {
        return Err(Error::Graph6 {
            pos: base,
            reason: format!("non-minimal size prefix for n={n}"),
        });
    }
    Ok((n, 8))
}

fn read_groups(bytes: &[u8]) -> usize {
    bytes
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize)
}

/// Encodes a graph as a graph6 line. Total on every [`Graph`]; equal graphs
/// produce equal strings.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut word = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            word = (word << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(word + OFFSET);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses every line of a graph6 file body, reporting failures per line
/// (1-based) while continuing with the rest. Blank lines and a standalone
/// header line are skipped.
pub fn parse_graph6_lines(text: &str) -> (Vec<(usize, Graph)>, Vec<(usize, Error)>) {
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t == HEADER {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => graphs.push((i + 1, g)),
            Err(e) => errors.push((i + 1, e)),
        }
    }
    (graphs, errors)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent reference decoder used as the oracle: works directly off
    /// the byte-level format definition with no shared code.
    fn reference_decode(line: &str) -> Option<(usize, Vec<(usize, usize)>)> {
        let bytes = line.trim().as_bytes();
        if bytes.is_empty() || bytes.iter().any(|&b| !(63..=126).contains(&b)) {
            return None;
        }
        let (n, start) = if bytes[0] == 126 {
            if bytes.len() > 1 && bytes[1] == 126 {
                let mut n = 0usize;
                for &b in bytes.get(2..8)? {
                    n = n * 64 + (b as usize - 63);
                }
                (n, 8)
            } else {
                let mut n = 0usize;
                for &b in bytes.get(1..4)? {
                    n = n * 64 + (b as usize - 63);
                }
                (n, 4)
            }
        } else {
            (bytes[0] as usize - 63, 1)
        };
        let mut bits = Vec::new();
        for &b in &bytes[start..] {
            let v = b - 63;
            for k in (0..6).rev() {
                bits.push(v >> k & 1 == 1);
            }
        }
        if bits.len() < n * (n - 1) / 2 {
            return None;
        }
        let mut edges = Vec::new();
        let mut it = bits.into_iter();
        for v in 1..n {
            for u in 0..v {
                if it.next()? {
                    edges.push((u, v));
                }
            }
        }
        Some((n, edges))
    }

    #[test]
    fn decode_matches_reference_oracle() {
        // expectations computed by the reference decoder, then frozen
        let (n, edges) = reference_decode("D?{").unwrap();
        assert_eq!((n, edges.clone()), (5, vec![(0, 4), (1, 4), (2, 4), (3, 4)]));
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edges(), edges);

        for line in ["@", "A_", "Bw", "C~", "EhEG", "FwCW?", "DQc"] {
            let (n, mut edges) = reference_decode(line).unwrap();
            edges.sort();
            let g = parse_graph6(line).unwrap();
            assert_eq!(g.vertex_count(), n, "{line}");
            assert_eq!(g.edges(), edges, "{line}");
            g.check_invariants().unwrap();
        }
    }

    #[test]
    fn known_encodings() {
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
        assert_eq!(write_graph6(&Graph::complete(4)), "C~");
        assert_eq!(write_graph6(&Graph::cycle(6).unwrap()), "EhEG");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn roundtrip_named_string() {
        let g = parse_graph6("FwCW?").unwrap();
        assert_eq!(write_graph6(&g), "FwCW?");
    }

    #[test]
    fn header_is_tolerated() {
        let g = parse_graph6(">>graph6<<C~").unwrap();
        assert_eq!(g, Graph::complete(4));
    }

    #[test]
    fn long_form_size_prefix() {
        let g = Graph::path(70);
        let enc = write_graph6(&g);
        assert_eq!(enc.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_are_rejected_with_position() {
        // out-of-range byte
        match parse_graph6("C\u{20}~~") {
            Err(Error::Graph6 { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("expected graph6 error, got {other:?}"),
        }
        // wrong number of adjacency bytes
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        // 'A_' = bit 100000 -> K2 with zero padding; 'A?' -> 2K1
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("A?").unwrap().edge_count(), 0);
        // 'A' + byte with low bits set must be rejected
        let bad = String::from_utf8(vec![b'A', 63 + 0b000001]).unwrap();
        assert!(parse_graph6(&bad).is_err());
        // truncated extended prefix
        assert!(parse_graph6("~??").is_err());
    }

    #[test]
    fn lines_parser_reports_line_numbers_and_continues() {
        let text = ">>graph6<<\n@\n\nnot-a-graph!\nC~\n";
        let (graphs, errors) = parse_graph6_lines(text);
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0].0, 2);
        assert_eq!(graphs[1].0, 5);
        assert_eq!(errors.len(), 1);
        assert_eq!(errors[0].0, 4);
    }
}
