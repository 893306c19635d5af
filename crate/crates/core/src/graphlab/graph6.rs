//! graph6 and edge-list formats.

use super::graph::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn bits_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Encodes `g` in graph6.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + bits_len(n).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let (mut acc, mut filled) = (0u8, 0);
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 word. Padding bits must be zero.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let byte = |i: usize| -> Result<u8> {
        let b = *bytes.get(i).ok_or_else(|| err(i, "unexpected end of input"))?;
        if !(63..=126).contains(&b) {
            return Err(err(i, format!("byte {b:#04x} outside 63..=126")));
        }
        Ok(b - 63)
    };
    let first = byte(0)?;
    let (n, mut pos) = if first < 63 {
        (first as usize, 1)
    } else {
        if byte(1)? == 63 {
            return Err(err(1, "orders above 258047 are not supported"));
        }
        let n = (0..3).try_fold(0usize, |acc, i| Ok::<_, Error>(acc << 6 | byte(1 + i)? as usize))?;
        if n <= 62 {
            return Err(err(0, "non-minimal order encoding"));
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(err(0, format!("order {n} exceeds {MAX_VERTICES}")));
    }
    let need = bits_len(n).div_ceil(6);
    if bytes.len() < pos + need {
        return Err(err(bytes.len(), format!("truncated: expected {} bytes", pos + need)));
    }
    let mut g = Graph::empty(n);
    let mut t = 0;
    let total = bits_len(n);
    let mut chunk = 0u8;
    for j in 1..n {
        for i in 0..j {
            if t % 6 == 0 {
                chunk = byte(pos)?;
                pos += 1;
            }
            if chunk >> (5 - t % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            t += 1;
        }
    }
    if !total.is_multiple_of(6) && chunk & ((1 << (6 - total % 6)) - 1) != 0 {
        return Err(err(pos - 1, "nonzero padding bits"));
    }
    if pos != bytes.len() {
        return Err(err(pos, "trailing bytes"));
    }
    Ok(g)
}

/// Whitespace edge list: an optional header line holding only the order,
/// then one `u v` pair per line. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_edge = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::EdgeList {
                line,
                reason: format!("not a vertex number: {s:?}"),
            })
        };
        match fields[..] {
            [n] if !seen_edge && order.is_none() => order = Some(num(n)?),
            [u, v] => {
                let (u, v) = (num(u)?, num(v)?);
                if u == v {
                    return Err(Error::EdgeList {
                        line,
                        reason: format!("self-loop at {u}"),
                    });
                }
                seen_edge = true;
                edges.push((line, u, v));
            }
            _ => {
                return Err(Error::EdgeList {
                    line,
                    reason: "expected `u v`".into(),
                })
            }
        }
    }
    let n = order.unwrap_or_else(|| edges.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0));
    if n > MAX_VERTICES {
        return Err(Error::EdgeList {
            line: 1,
            reason: format!("order {n} exceeds {MAX_VERTICES}"),
        });
    }
    let mut g = Graph::empty(n);
    for (line, u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::EdgeList {
                line,
                reason: format!("vertex out of range for order {n}"),
            });
        }
        g.add_edge(u, v);
    }
    Ok(g)
}
