//! graph6 encoding for graphs with at most 62 vertices (one-byte header).
//!
//! Header byte is `63 + n`; the body packs the upper triangle of the
//! adjacency matrix column by column, `(0,1),(0,2),(1,2),(0,3),...`, into
//! big-endian 6-bit groups, each offset by 63, zero-padded at the end.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_ORDER);
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let (&header, body) = bytes.split_first().ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=63 + MAX_ORDER as u8).contains(&header) {
        return Err(Error::Graph6(format!("header byte {header:#04x} does not encode an order in 0..={MAX_ORDER}")));
    }
    let n = (header - 63) as usize;
    if let Some(&bad) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Graph6(format!("byte {bad:#04x} outside the printable range 63..=126")));
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Error::Graph6(format!("body has {} bytes, order {n} needs {expected}", body.len())));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
