//! graph6 codec: 6-bit chunks offset by 63, upper-triangle bits in column
//! order. Short form covers n <= 62; the 4-byte long form is accepted on
//! decode and used on encode for larger n.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {offset}: invalid graph6 byte 0x{byte:02x}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated graph6 string, expected {expected} data bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("byte {offset}: trailing bytes after graph data")]
    Trailing { offset: usize },
    #[error("byte {offset}: padding bits must be zero")]
    BadPadding { offset: usize },
    #[error("graph too large for graph6: n = {0}")]
    TooLarge(usize),
}

const HEADER: &str = ">>graph6<<";

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let mut offset = 0;
    let mut bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.starts_with(HEADER.as_bytes()) {
        bytes = &bytes[HEADER.len()..];
        offset += HEADER.len();
    }
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let check = |b: u8, off: usize| -> Result<u64, Graph6Error> {
        if !(63..=126).contains(&b) {
            Err(Graph6Error::InvalidByte {
                offset: off,
                byte: b,
            })
        } else {
            Ok((b - 63) as u64)
        }
    };
    // size field
    let n: usize;
    if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            // 8-byte form for n >= 258048: out of desk scale
            return Err(Graph6Error::TooLarge(258048));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                offset: offset + bytes.len(),
                expected: 4,
            });
        }
        let mut val = 0u64;
        for i in 1..4 {
            val = (val << 6) | check(bytes[i], offset + i)?;
        }
        n = val as usize;
        bytes = &bytes[4..];
        offset += 4;
    } else {
        n = check(bytes[0], offset)? as usize;
        bytes = &bytes[1..];
        offset += 1;
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = (nbits + 5) / 6;
    if bytes.len() < nbytes {
        return Err(Graph6Error::Truncated {
            offset: offset + bytes.len(),
            expected: nbytes,
        });
    }
    if bytes.len() > nbytes {
        return Err(Graph6Error::Trailing {
            offset: offset + nbytes,
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let chunk = check(bytes[bit / 6], offset + bit / 6)?;
            if chunk >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    // padding bits of the final chunk must be zero
    while bit < nbytes * 6 {
        let chunk = check(bytes[bit / 6], offset + bit / 6)?;
        if chunk >> (5 - bit % 6) & 1 == 1 {
            return Err(Graph6Error::BadPadding {
                offset: offset + bit / 6,
            });
        }
        bit += 1;
    }
    Ok(Graph::new(n, &edges).expect("decoded upper triangle is always simple"))
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    } else {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut chunk = 0u8;
    let mut fill = 0u8;
    for v in 1..n {
        for u in 0..v {
            chunk = (chunk << 1) | g.has_edge(u, v) as u8;
            fill += 1;
            if fill == 6 {
                out.push(chunk + 63);
                chunk = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push((chunk << (6 - fill)) + 63);
    }
    Ok(String::from_utf8(out).unwrap())
}
