//! graph6 interchange for graphs of order at most 62 (single-byte order header).
//!
//! Upper-triangle adjacency bits are emitted column by column, `(0,1), (0,2), (1,2),
//! (0,3), ...`, packed big-endian into 6-bit groups, each offset by 63. The final
//! group is zero-padded.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_ORDER);
    let rows = g.rows();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((OFFSET + n as u8) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for row in &rows[..j] {
            group = group << 1 | (row >> j & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push((OFFSET + group) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((OFFSET + (group << (6 - filled))) as char);
    }
    out
}

pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Parse("empty graph6 string".into()))?;
    if head == b'~' {
        return Err(Error::Size(MAX_ORDER + 1));
    }
    if !(OFFSET..=OFFSET + MAX_ORDER as u8).contains(&head) {
        return Err(Error::Parse(format!(
            "invalid graph6 order byte {head:#04x}"
        )));
    }
    let n = (head - OFFSET) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {expected} for order {n}",
            body.len()
        )));
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for &b in body {
        if !(OFFSET..=OFFSET + 63).contains(&b) {
            return Err(Error::Parse(format!("invalid graph6 byte {b:#04x}")));
        }
        let v = b - OFFSET;
        bits.extend((0..6).rev().map(|k| v >> k & 1 == 1));
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(Error::Parse("nonzero graph6 padding bits".into()));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows(rows)
}
