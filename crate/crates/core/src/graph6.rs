//! graph6 encoding: size header followed by the upper adjacency triangle in
//! column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed big-endian
//! into 6-bit groups offset by 63.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("size header truncated at offset {offset}")]
    TruncatedHeader { offset: usize },
    #[error("payload truncated at offset {offset}: expected {expected} bytes, found {found}")]
    TruncatedPayload {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("non-zero padding bits in final byte at offset {offset}")]
    NonZeroPadding { offset: usize },
    #[error("graph order {n} exceeds the vertex cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

/// Decodes one graph6 record. A trailing line terminator and the optional
/// `>>graph6<<` prefix are accepted; nothing else is.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let (base, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte { offset: base + i, byte: b });
        }
    }

    let (n, header_len) = decode_size(body, base)?;
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge { n, cap: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let payload = &body[header_len..];
    if payload.len() < expected {
        return Err(Graph6Error::TruncatedPayload {
            offset: base + body.len(),
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData {
            offset: base + header_len + expected,
        });
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = payload[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding {
                offset: base + header_len + expected - 1,
            });
        }
    }
    Ok(Graph::from_adjacency(adj).expect("decoded rows are symmetric"))
}

fn decode_size(body: &[u8], base: usize) -> Result<(usize, usize), Graph6Error> {
    let group = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63))
    };
    if body[0] != 126 {
        return Ok((usize::from(body[0] - 63), 1));
    }
    if body.len() >= 2 && body[1] == 126 {
        if body.len() < 8 {
            return Err(Graph6Error::TruncatedHeader { offset: base + body.len() });
        }
        return Ok((group(&body[2..8]), 8));
    }
    if body.len() < 4 {
        return Err(Graph6Error::TruncatedHeader { offset: base + body.len() });
    }
    Ok((group(&body[1..4]), 4))
}

/// Encodes `g` as a canonical graph6 record without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// A graph6 decoding failure tagged with its 1-based line number.
#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error("read error: {0}")]
    Io(#[from] std::io::Error),
}

/// Reads graph6 records one per line, skipping blank lines.
pub fn read_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph, CorpusError>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(CorpusError::Io(e))),
            Ok(l) if l.trim().is_empty() => None,
            Ok(l) => Some(
                parse_graph6(l.trim_end())
                    .map_err(|source| CorpusError::Parse { line: i + 1, source }),
            ),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_records() {
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(write_graph6(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(parse_graph6("D??").unwrap(), Graph::empty(5).unwrap());
        // ten set bits: 111111 1111(00) -> '~' '{'
        assert_eq!(parse_graph6("D~{").unwrap(), Graph::complete(5).unwrap());
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn petersen_matches_nauty() {
        // Value produced by networkx for the same labelling.
        assert_eq!(write_graph6(&Graph::petersen()), "I?LRCecq?");
    }

    #[test]
    fn long_size_header() {
        let g = Graph::cycle(64).unwrap();
        let s = write_graph6(&g);
        assert_eq!(&s[..4], "~?@?");
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn error_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("D? ?"),
            Err(Graph6Error::BadByte { offset: 2, byte: b' ' })
        );
        assert_eq!(
            parse_graph6("D?"),
            Err(Graph6Error::TruncatedPayload { offset: 2, expected: 2, found: 1 })
        );
        assert_eq!(parse_graph6("D???"), Err(Graph6Error::TrailingData { offset: 3 }));
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::TruncatedHeader { offset: 2 }));
        assert_eq!(parse_graph6("B@"), Err(Graph6Error::NonZeroPadding { offset: 1 }));
        assert!(matches!(
            parse_graph6("~?@@"),
            Err(Graph6Error::TooLarge { n: 65, .. })
        ));
    }

    #[test]
    fn corpus_reader_reports_line_numbers() {
        let text = "Bw\n\nD??\nD?\n";
        let got: Vec<_> = read_graph6(text.as_bytes()).collect();
        assert_eq!(got.len(), 3);
        assert!(got[0].is_ok() && got[1].is_ok());
        assert!(matches!(got[2], Err(CorpusError::Parse { line: 4, .. })));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=64).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
                move |flags| {
                    let mut it = flags.into_iter();
                    let edges: Vec<_> = (1..n)
                        .flat_map(|j| (0..j).map(move |i| (i, j)))
                        .filter(|_| it.next().unwrap())
                        .collect();
                    Graph::from_edges(n, edges).unwrap()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            let s = write_graph6(&g);
            prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
