//! graph6 short form and a plain edge-list text format.
//!
//! The graph6 short form covers graphs on at most 62 vertices: one header
//! byte `n + 63`, then the upper triangle of the adjacency matrix read
//! column by column (pair (i, j) with i < j ordered by j, then i), packed
//! into 6-bit groups most significant bit first, each group offset by 63
//! into the printable range, with zero bits padding the final group.

use crate::graph::{bit, Graph, MAX_VERTICES};
use crate::{Error, Result};

const OFFSET: u8 = 63;

/// Parses the graph6 short form. An optional `>>graph6<<` prefix is
/// accepted; anything else out of place is an error naming the byte
/// offset into the original input.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let raw = text.trim_end_matches(['\n', '\r']);
    let (bytes, base) = match raw.strip_prefix(">>graph6<<") {
        Some(rest) => (rest.as_bytes(), ">>graph6<<".len()),
        None => (raw.as_bytes(), 0),
    };
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset: base + offset,
        reason: reason.to_string(),
    };
    let Some(&header) = bytes.first() else {
        return Err(err(0, "empty input"));
    };
    if header == b'~' {
        return Err(err(0, "long form (n > 62) is not supported"));
    }
    if !(OFFSET..=OFFSET + MAX_VERTICES as u8).contains(&header) {
        return Err(err(0, "header byte out of range 63..=125"));
    }
    let n = (header - OFFSET) as usize;
    let pairs = n * (n - n.min(1)) / 2;
    let groups = pairs.div_ceil(6);
    if bytes.len() != 1 + groups {
        return Err(err(
            bytes.len().min(1 + groups),
            &format!("expected {} bytes for n = {n}, got {}", 1 + groups, bytes.len()),
        ));
    }
    let mut adj = vec![0u64; n];
    let mut idx = 0usize;
    for (gi, &b) in bytes[1..].iter().enumerate() {
        if !(OFFSET..OFFSET + 64).contains(&b) {
            return Err(err(1 + gi, "data byte out of range 63..=126"));
        }
        let group = b - OFFSET;
        for k in 0..6 {
            let set = group & (1 << (5 - k)) != 0;
            if idx < pairs {
                if set {
                    let (i, j) = pair_at(idx);
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
            } else if set {
                return Err(err(1 + gi, "nonzero padding bit"));
            }
            idx += 1;
        }
    }
    Ok(Graph::from_edges(
        n,
        &adj_to_edges(&adj),
    )
    .expect("decoded adjacency is in range"))
}

fn adj_to_edges(adj: &[u64]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (u, &row) in adj.iter().enumerate() {
        for v in crate::graph::bits_iter(row) {
            if u < v {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Pair index -> (i, j), the inverse of column-major upper-triangle order.
fn pair_at(idx: usize) -> (usize, usize) {
    // j is the largest column whose triangle fits below idx.
    let mut j = 1;
    let mut before = 0;
    while before + j <= idx {
        before += j;
        j += 1;
    }
    (idx - before, j)
}

/// Serializes to the graph6 short form; inverse of [`parse_graph6`].
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    debug_assert!(n <= MAX_VERTICES);
    let mut out = vec![OFFSET + n as u8];
    let mut group = 0u8;
    let mut fill = 0usize;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            fill += 1;
            if fill == 6 {
                out.push(OFFSET + group);
                group = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push(OFFSET + (group << (6 - fill)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable")
}

/// Parses a plain edge-list document:
///
/// ```text
/// # comment
/// 5        <- first significant line: vertex count
/// 0 1      <- one edge per line
/// 1 2
/// ```
///
/// Blank lines and `#` comments are skipped. Errors carry 1-based line
/// numbers.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: String| Error::EdgeList {
            line: i + 1,
            reason,
        };
        match g.as_mut() {
            None => {
                let n: usize = line
                    .parse()
                    .map_err(|_| err(format!("expected vertex count, got {line:?}")))?;
                if n > MAX_VERTICES {
                    return Err(Error::TooLarge {
                        what: "vertex count",
                        value: n,
                        max: MAX_VERTICES,
                    });
                }
                g = Some(Graph::empty(n));
            }
            Some(g) => {
                let mut parts = line.split_whitespace();
                let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
                    return Err(err(format!("expected two vertex ids, got {line:?}")));
                };
                let u: usize = a
                    .parse()
                    .map_err(|_| err(format!("bad vertex id {a:?}")))?;
                let v: usize = b
                    .parse()
                    .map_err(|_| err(format!("bad vertex id {b:?}")))?;
                g.add_edge(u, v)
                    .map_err(|e| err(e.to_string()))?;
            }
        }
    }
    g.ok_or(Error::EdgeList {
        line: text.lines().count() + 1,
        reason: "missing vertex count line".to_string(),
    })
}
