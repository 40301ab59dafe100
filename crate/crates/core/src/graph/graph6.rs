//! graph6 codec (the nauty/geng interchange format).
//!
//! Layout: `N(n)` followed by the upper triangle of the adjacency matrix read
//! column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed big-endian into
//! 6-bit groups, each group offset by 63 into printable ASCII. `N(n)` is one byte
//! `n + 63` for `n <= 62`, or `~` and three 6-bit bytes for `63 <= n <= 258047`.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &[u8] = b">>graph6<<";

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// newline are tolerated; padding bits must be zero.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut data = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    while let [rest @ .., b'\n' | b'\r'] = data {
        data = rest;
    }
    if data.is_empty() {
        return Err(Error::MalformedGraph6("empty input".into()));
    }
    if let Some(pos) = data.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!(
            "byte 0x{:02x} at offset {pos} is outside the graph6 alphabet",
            data[pos]
        )));
    }
    let (n, body) = if data[0] != 126 {
        ((data[0] - 63) as usize, &data[1..])
    } else if data.len() >= 2 && data[1] == 126 {
        // 8-byte size form, n >= 258048.
        return Err(Error::TooLarge(decode_size(data.get(2..8).ok_or_else(truncated)?)));
    } else {
        (decode_size(data.get(1..4).ok_or_else(truncated)?), &data[4..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::MalformedGraph6(format!("n = {n} needs {expected} data bytes, found {}", body.len())));
    }

    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad_mask = (1u8 << (6 - bits % 6)) - 1;
        if (body[expected - 1] - 63) & pad_mask != 0 {
            return Err(Error::MalformedGraph6("non-zero padding bits".into()));
        }
    }
    Ok(g)
}

fn truncated() -> Error {
    Error::MalformedGraph6("truncated size field".into())
}

fn decode_size(bytes: &[u8]) -> usize {
    bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// Encodes `g` as a graph6 line without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.extend_from_slice(&[126, ((n >> 12) & 63) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}
