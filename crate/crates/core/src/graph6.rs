//! graph6 encoding and decoding.
//!
//! The upper triangle of the adjacency matrix is read column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), split into 6-bit groups
//! (big-endian, zero padded) and each group is offset by 63. The order is
//! prefixed as one byte `n + 63` for `n <= 62`, or `~` followed by three
//! 6-bit groups for larger `n`.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn encode_order(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
}

/// Encodes `g` as a graph6 string (no header, no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_order(n, &mut out);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    out
}

fn sextet(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::Graph6(format!("byte {b:#04x} outside the printable range")))
    }
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let first = *bytes
        .first()
        .ok_or_else(|| Error::Graph6("empty string".into()))?;
    if first != b'~' {
        return Ok((sextet(first)? as usize, &bytes[1..]));
    }
    let (width, rest) = if bytes.get(1) == Some(&b'~') {
        (6, &bytes[2..])
    } else {
        (3, &bytes[1..])
    };
    if rest.len() < width {
        return Err(Error::Graph6("truncated order field".into()));
    }
    let mut n = 0usize;
    for &b in &rest[..width] {
        n = (n << 6) | sextet(b)? as usize;
    }
    Ok((n, &rest[width..]))
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn decode(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let (n, body) = decode_order(text.as_bytes())?;
    if n > MAX_ORDER {
        return Err(Error::TooLarge { n, max: MAX_ORDER });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if k >= nbits {
                break 'outer;
            }
            let group = sextet(body[k / 6])?;
            if (group >> (5 - k % 6)) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = sextet(body[expected - 1])?;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::new(n, &edges_of(&rows))
}

fn edges_of(rows: &[u64]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (u, &r) in rows.iter().enumerate() {
        for v in u + 1..rows.len() {
            if r & (1 << v) != 0 {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Decodes a stream: one graph per nonempty line.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(decode)
        .collect()
}
