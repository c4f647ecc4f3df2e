//! graph6 reading and writing.
//!
//! Layout: a size header (one byte `63 + n` for `n <= 62`, `~` plus three
//! bytes for `n <= 258047`, `~~` plus six bytes beyond that), followed by the
//! upper triangle `(0,1), (0,2), (1,2), (0,3), ...` packed six bits per byte,
//! most significant bit first, each byte offset by 63. Padding bits are zero.

use crate::error::Graph6Error;
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn size_bytes(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![63 + n as u8]
    } else if n <= 258_047 {
        let mut out = vec![126];
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
        out
    } else {
        let mut out = vec![126, 126];
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
        out
    }
}

/// Canonical graph6 string for `g` (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = size_bytes(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn parse_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let digits = |start: usize, count: usize| -> Result<usize, Graph6Error> {
        if bytes.len() < start + count {
            return Err(Graph6Error::BadHeader {
                offset: bytes.len(),
            });
        }
        let mut n = 0usize;
        for (k, &b) in bytes[start..start + count].iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::BadHeader { offset: start + k });
            }
            n = (n << 6) | (b - 63) as usize;
        }
        Ok(n)
    };
    match bytes.first() {
        None => Err(Graph6Error::Empty),
        Some(&b) if (63..=125).contains(&b) => Ok(((b - 63) as usize, 1)),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                Ok((digits(2, 6)?, 8))
            } else {
                Ok((digits(1, 3)?, 4))
            }
        }
        Some(&b) => Err(Graph6Error::NonPrintable { offset: 0, byte: b }),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are tolerated.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let trimmed = text.trim();
    let (body, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (trimmed, 0),
    };
    let bytes = body.as_bytes();
    let (n, header_len) = parse_size(bytes).map_err(|e| shift(e, base))?;
    let data = &bytes[header_len..];
    for (k, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::NonPrintable {
                offset: base + header_len + k,
                byte: b,
            });
        }
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: data.len(),
        });
    }
    if nbits % 6 != 0 {
        let last = data[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::TrailingBits {
                offset: base + header_len + expected - 1,
            });
        }
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded indices are in range"))
}

fn shift(e: Graph6Error, base: usize) -> Graph6Error {
    match e {
        Graph6Error::BadHeader { offset } => Graph6Error::BadHeader {
            offset: offset + base,
        },
        Graph6Error::NonPrintable { offset, byte } => Graph6Error::NonPrintable {
            offset: offset + base,
            byte,
        },
        other => other,
    }
}
