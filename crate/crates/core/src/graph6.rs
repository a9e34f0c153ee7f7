//! graph6 encoding (header-less, one graph per line).
//!
//! Upper-triangle bits in column order (0,1),(0,2),(1,2),(0,3),..., packed
//! six to a byte, offset 63, zero-padded at the end.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, VertexSet, MAX_VERTICES};

/// Largest order representable with the single-byte length prefix.
pub const SHORT_FORM_MAX: usize = 62;

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > SHORT_FORM_MAX {
        return Err(Error::TooLarge {
            n,
            limit: SHORT_FORM_MAX,
        });
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(bad("truncated length field"));
        }
        if bytes[1] == 126 {
            return Err(Error::TooLarge {
                n: 258048,
                limit: MAX_VERTICES,
            });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= SHORT_FORM_MAX {
            return Err(bad(format!("long length form used for n = {n}")));
        }
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n, limit: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let pad = expected * 6 - nbits;
    if pad > 0 {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    let mut adj: Vec<VertexSet> = vec![0; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[u] |= bit(v);
                adj[v] |= bit(u);
            }
            k += 1;
        }
    }
    Ok(Graph::from_raw(n, adj))
}
