//! graph6 encoding and decoding (McKay's format), bit-exact.

use anyhow::{bail, Result};
use misnormal_core::Graph;

/// Encodes a graph in graph6 format (without trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    // Upper triangle, column by column, packed big-endian into 6-bit groups.
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string (leading `>>graph6<<` header tolerated).
pub fn decode(text: &str) -> Result<Graph> {
    let text = text.trim().strip_prefix(">>graph6<<").unwrap_or(text.trim());
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        bail!("empty graph6 string");
    }
    let (pos, n): (usize, usize) = if bytes[0] == 126 {
        if bytes.len() > 1 && bytes[1] == 126 {
            if bytes.len() < 8 {
                bail!("truncated graph6 size prefix");
            }
            (8, decode_number(&bytes[2..8])?)
        } else {
            if bytes.len() < 4 {
                bail!("truncated graph6 size prefix");
            }
            (4, decode_number(&bytes[1..4])?)
        }
    } else {
        (1, check_byte(bytes[0])? as usize)
    };
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() - pos != needed {
        bail!("graph6 body has {} bytes, expected {needed} for n={n}", bytes.len() - pos);
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = check_byte(bytes[pos + bit_index / 6])?;
            if byte >> (5 - bit_index % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
        }
    }
    Ok(Graph::build(n, &edges)?)
}

fn check_byte(b: u8) -> Result<u8> {
    if !(63..=126).contains(&b) {
        bail!("invalid graph6 byte {b}");
    }
    Ok(b - 63)
}

fn decode_number(bytes: &[u8]) -> Result<usize> {
    let mut n = 0usize;
    for &b in bytes {
        n = (n << 6) | check_byte(b)? as usize;
    }
    Ok(n)
}
