//! graph6 encoding.
//!
//! Layout: `N(n)` followed by the upper triangle of the adjacency matrix
//! read column by column, `(0,1),(0,2),(1,2),(0,3),...`, packed six bits per
//! byte (most significant first), each byte offset by 63, padded with zeros.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const HEADER: &[u8] = b">>graph6<<";

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// Returns `(n, bytes consumed)`.
fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    let sextet = |i: usize| -> Result<usize> {
        bytes
            .get(i)
            .ok_or_else(|| bad("truncated vertex count"))
            .map(|&b| (b - BIAS) as usize)
    };
    match bytes.first() {
        None => Err(bad("empty record")),
        Some(&126) if bytes.get(1) == Some(&126) => {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | sextet(i)?;
            }
            if n < 258_048 {
                return Err(bad("non-minimal 8-byte vertex count"));
            }
            Ok((n, 8))
        }
        Some(&126) => {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | sextet(i)?;
            }
            if n < 63 {
                return Err(bad("non-minimal 4-byte vertex count"));
            }
            Ok((n, 4))
        }
        Some(&b) => Ok(((b - BIAS) as usize, 1)),
    }
}

/// Encodes `g` as a graph6 record without a trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n, &mut out);
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 record. A single trailing `\n` (or `\r\n`) is
/// tolerated; anything else beyond the record is an error.
pub fn from_graph6(text: &[u8]) -> Result<Graph> {
    let text = text
        .strip_suffix(b"\n")
        .map(|t| t.strip_suffix(b"\r").unwrap_or(t))
        .unwrap_or(text);
    if let Some(pos) = text.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(bad(format!("byte {:#04x} at offset {pos} outside 63..=126", text[pos])));
    }
    let (n, head) = decode_order(text)?;
    let pairs = n * n.saturating_sub(1) / 2;
    let body = &text[head..];
    let need = pairs.div_ceil(6);
    if body.len() < need {
        return Err(bad(format!("expected {need} data bytes, found {}", body.len())));
    }
    if body.len() > need {
        return Err(bad(format!("{} bytes of trailing garbage", body.len() - need)));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[need - 1] - BIAS;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad("bit set in padding"));
        }
    }
    Ok(g)
}

/// Graphs serialize as their graph6 string.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_graph6(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        from_graph6(text.as_bytes()).map_err(serde::de::Error::custom)
    }
}

/// One line of a graph6 stream: its 1-based line number and decode result.
#[derive(Debug)]
pub struct StreamItem {
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph>,
}

/// Parses a newline-delimited graph6 stream. Blank lines and an optional
/// `>>graph6<<` header prefix are skipped; malformed lines surface as
/// `Err` items so callers can report and continue.
pub fn read_stream<R: BufRead>(reader: R) -> impl Iterator<Item = std::io::Result<StreamItem>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(e)),
        };
        let mut body = line.trim_end_matches('\r');
        if let Some(rest) = body.strip_prefix(std::str::from_utf8(HEADER).unwrap()) {
            body = rest;
        }
        if body.is_empty() {
            return None;
        }
        Some(Ok(StreamItem {
            line: i + 1,
            text: body.to_string(),
            graph: from_graph6(body.as_bytes()),
        }))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_records() {
        assert_eq!(from_graph6(b"C~").unwrap(), Graph::complete(4));
        assert_eq!(from_graph6(b"C?").unwrap(), Graph::empty(4));
        assert_eq!(to_graph6(&from_graph6(b"C~").unwrap()), "C~");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(from_graph6(b"?").unwrap(), Graph::empty(0));
        assert_eq!(from_graph6(b"@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn matches_petgraph_reference_string() {
        // edges a-c, a-e, b-d, d-e on five vertices encode as "DQc"
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn long_order_header() {
        let g = Graph::path(70);
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 70 - 64 + 63]);
        assert_eq!(from_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(from_graph6(b"").is_err());
        assert!(from_graph6(b"C~~").is_err()); // trailing garbage
        assert!(from_graph6(b"C").is_err()); // truncated
        assert!(from_graph6(b"C\x20").is_err()); // out of range byte
        // n=3 has 3 pairs, low 3 bits are padding
        assert!(from_graph6(b"B\x40").is_err());
        assert!(from_graph6(b"Bw").is_ok());
        assert!(from_graph6(b"~??").is_err()); // truncated long header
        assert!(from_graph6(b"~???").is_err()); // non-minimal
    }

    #[test]
    fn tolerates_one_newline() {
        assert_eq!(from_graph6(b"C~\n").unwrap(), Graph::complete(4));
        assert_eq!(from_graph6(b"C~\r\n").unwrap(), Graph::complete(4));
        assert!(from_graph6(b"C~\n\n").is_err());
    }

    #[test]
    fn stream_reports_bad_lines() {
        let data = b">>graph6<<C~\n\nC?\nnot graph6\nA_\n";
        let items: Vec<_> = read_stream(&data[..]).map(|r| r.unwrap()).collect();
        assert_eq!(items.len(), 4);
        assert_eq!(items[0].line, 1);
        assert!(items[0].graph.is_ok());
        assert_eq!(items[2].line, 4);
        assert!(items[2].graph.is_err());
        assert_eq!(items[3].graph.as_ref().unwrap().edge_count(), 1);
    }
}
