//! graph6 codec, short form only (at most 62 vertices).
//!
//! The first byte is `63 + n`. The upper triangle of the adjacency matrix
//! follows in column order `(0,1), (0,2), (1,2), (0,3), ..`, six bits per
//! byte, most significant first, each byte offset by 63 and the final byte
//! zero-padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count representable in the short form.
pub const MAX_VERTICES: usize = 62;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 word. A single trailing `\n` (or `\r\n`) is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text
        .strip_suffix('\n')
        .map(|t| t.strip_suffix('\r').unwrap_or(t))
        .unwrap_or(text);
    let bytes = text.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::Parse {
            offset: 0,
            message: "empty input".into(),
        });
    };
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Parse {
            offset,
            message: format!("byte {} outside the range 63..=126", bytes[offset]),
        });
    }
    if first == 126 {
        return Err(Error::Parse {
            offset: 0,
            message: "long-form graph6 (more than 62 vertices) is not supported".into(),
        });
    }
    let n = (first - 63) as usize;
    let expected = 1 + body_len(n);
    if bytes.len() < expected {
        return Err(Error::Parse {
            offset: bytes.len(),
            message: format!("truncated: {n} vertices need {expected} bytes, got {}", bytes.len()),
        });
    }
    if bytes.len() > expected {
        return Err(Error::Parse {
            offset: expected,
            message: "trailing bytes after graph".into(),
        });
    }

    let body = &bytes[1..];
    let bit = |i: usize| (body[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    let used = n * n.saturating_sub(1) / 2;
    for j in used..body.len() * 6 {
        if bit(j) {
            return Err(Error::Parse {
                offset: 1 + j / 6,
                message: "nonzero padding bits".into(),
            });
        }
    }
    Graph::from_edges(n, &edges)
}

/// Encodes `g` as a graph6 word (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::UnsupportedSize {
            what: "graph6 vertex count",
            size: n,
            limit: MAX_VERTICES,
        });
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses a graph6 file: one graph per line, blank lines skipped. Errors carry
/// the byte offset within the whole input.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut start = 0;
    for line in text.split_inclusive('\n') {
        let word = line.trim_end_matches(['\n', '\r']);
        if !word.trim().is_empty() {
            out.push(parse_graph6(word).map_err(|e| match e {
                Error::Parse { offset, message } => Error::Parse {
                    offset: start + offset,
                    message,
                },
                other => other,
            })?);
        }
        start += line.len();
    }
    Ok(out)
}
