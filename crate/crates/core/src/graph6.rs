//! graph6 codec.
//!
//! Header `N(n)`: one byte `n + 63` for `n <= 62`, `'~'` plus three 6-bit
//! groups for `n <= 258047`, `"~~"` plus six groups beyond that. The body is
//! the upper triangle in column order (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed six bits per byte, most significant first, each offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n, &mut out);

    let mut acc = 0u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Parses one graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside the printable range 63..=126")));
    }
    let (n, body) = decode_order(bytes)?;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!("order {n} needs {expected} body bytes, found {}", body.len())));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = 6 - nbits % 6;
        if (body[body.len() - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let group = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    match bytes {
        [] => Err(Error::Graph6("empty string".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((group(&rest[..6]), &rest[6..])),
        [126, 126, ..] => Err(Error::Graph6("truncated 8-byte order header".into())),
        [126, rest @ ..] if rest.len() >= 3 => Ok((group(&rest[..3]), &rest[3..])),
        [126, ..] => Err(Error::Graph6("truncated 4-byte order header".into())),
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}
