//! graph6 codec.
//!
//! One graph per line: the order `n` (byte `n+63` for `n <= 62`, otherwise
//! `~` followed by three bytes carrying 18 bits), then the upper triangle
//! of the adjacency matrix in column-major order, packed into 6-bit chunks
//! (first bit most significant), each chunk offset by 63. Padding bits must
//! be zero. An optional `>>graph6<<` header is tolerated.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("graph order {n} exceeds the {MAX_VERTICES}-vertex limit (byte offset {offset})")]
    OrderTooLarge { n: u64, offset: usize },
    #[error("byte {byte:#04x} out of graph6 range at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("line has {actual} data bytes, expected {expected} (from offset {offset})")]
    LengthMismatch {
        expected: usize,
        actual: usize,
        offset: usize,
    },
    #[error("nonzero padding bits in final chunk at offset {offset}")]
    DirtyPadding { offset: usize },
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line (trailing newline/whitespace tolerated).
pub fn decode_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r', ' ', '\t']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    // Order field.
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte form encodes n >= 258048, far beyond the cap.
            let mut n: u64 = 0;
            for (i, &b) in bytes.iter().enumerate().take(8).skip(2) {
                check_byte(b, i)?;
                n = (n << 6) | u64::from(b - OFFSET);
            }
            return Err(Graph6Error::OrderTooLarge { n, offset: 0 });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::LengthMismatch {
                expected: 4,
                actual: bytes.len(),
                offset: 0,
            });
        }
        let mut n: u64 = 0;
        for (i, &b) in bytes.iter().enumerate().take(4).skip(1) {
            check_byte(b, i)?;
            n = (n << 6) | u64::from(b - OFFSET);
        }
        if n as usize > MAX_VERTICES {
            return Err(Graph6Error::OrderTooLarge { n, offset: 0 });
        }
        (n as usize, 4)
    } else {
        check_byte(bytes[0], 0)?;
        ((bytes[0] - OFFSET) as usize, 1)
    };

    let expected = data_len(n);
    if bytes.len() - pos != expected {
        return Err(Graph6Error::LengthMismatch {
            expected,
            actual: bytes.len() - pos,
            offset: pos,
        });
    }

    let mut g = Graph::empty(n).expect("n checked against cap");
    let mut chunk: u8 = 0;
    let mut bits_left = 0u32;
    for v in 1..n {
        for u in 0..v {
            if bits_left == 0 {
                check_byte(bytes[pos], pos)?;
                chunk = bytes[pos] - OFFSET;
                bits_left = 6;
                pos += 1;
            }
            bits_left -= 1;
            if (chunk >> bits_left) & 1 == 1 {
                g.add_edge(u, v).expect("in-range vertices");
            }
        }
    }
    // Remaining pad bits of the final chunk must be zero.
    if bits_left > 0 && chunk & ((1 << bits_left) - 1) != 0 {
        return Err(Graph6Error::DirtyPadding { offset: pos - 1 });
    }
    Ok(g)
}

fn check_byte(byte: u8, offset: usize) -> Result<(), Graph6Error> {
    if !(OFFSET..=126).contains(&byte) {
        return Err(Graph6Error::InvalidByte { byte, offset });
    }
    Ok(())
}

/// Canonical graph6 line for `g` (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + data_len(n));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut chunk: u8 = 0;
    let mut nbits = 0u32;
    for v in 1..n {
        for u in 0..v {
            chunk = (chunk << 1) | u8::from(g.has_edge(u, v));
            nbits += 1;
            if nbits == 6 {
                out.push(chunk + OFFSET);
                chunk = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((chunk << (6 - nbits)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
