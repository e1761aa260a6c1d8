use super::{Graph, MAX_ORDER};
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Encodes `g` in graph6: the order (one byte `n + 63` up to 62, otherwise
/// `~` plus three 6-bit bytes), then the upper triangle read column by
/// column, packed six bits per byte, each byte offset by 63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted; errors report the byte offset in the input.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                base + i,
                format!("byte {b:#04x} outside graph6 range"),
            ));
        }
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            return Err(Error::UnsupportedOrder {
                order: 258048,
                limit: MAX_ORDER,
            });
        }
        if bytes.len() < 4 {
            return Err(Error::parse(base + bytes.len(), "truncated order field"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order: n,
            limit: MAX_ORDER,
        });
    }
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    let data = &bytes[pos..];
    if data.len() != needed {
        let at = base + pos + data.len().min(needed);
        return Err(Error::parse(
            at,
            format!(
                "expected {needed} data bytes for order {n}, found {}",
                data.len()
            ),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            bit += 1;
        }
    }
    pos += needed;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}
