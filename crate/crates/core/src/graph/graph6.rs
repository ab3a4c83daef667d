//! graph6 encoding and decoding.
//!
//! graph6 is the compact printable-ASCII interchange format for undirected
//! graphs: a size field, then the upper triangle of the adjacency matrix in
//! column-major order, six bits per byte, each byte offset by 63. The
//! decoder accepts an optional `>>graph6<<` prefix; the encoder never emits
//! one. All parse failures report the byte offset within the input string.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Encodes a graph as a graph6 string (no trailing newline, no header).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // 4-byte size field for 63..=258047; enough for our 64-vertex cap.
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string, with or without the `>>graph6<<` header.
///
/// Vertices are named by their indices. Errors carry the offset of the
/// offending byte in `input` (header included, when present).
pub fn decode_graph6(input: &str) -> Result<Graph> {
    let (base, body) = match input.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, input),
    };
    let err = |offset: usize, msg: String| Error::Graph6 {
        offset: base + offset,
        msg,
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input".to_string()));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(
                i,
                format!("byte 0x{b:02x} outside the graph6 range 63..=126"),
            ));
        }
    }
    let (n, payload_start) = decode_size(bytes, &err)?;
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "graph6 vertex count",
            got: n,
            limit: MAX_VERTICES,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let have = bytes.len() - payload_start;
    if have < need {
        return Err(err(
            bytes.len(),
            format!("payload too short: need {need} bytes, found {have}"),
        ));
    }
    if have > need {
        return Err(err(
            payload_start + need,
            format!("payload too long: need {need} bytes, found {have}"),
        ));
    }

    let mut g = Graph::new(n)?;
    // Walk the upper triangle column by column alongside the bit stream.
    let mut i = 0usize;
    let mut j = 1usize;
    for (bi, &b) in bytes[payload_start..].iter().enumerate() {
        let v = b - 63;
        for k in 0..6 {
            let bit = v >> (5 - k) & 1;
            if j >= n {
                if bit == 1 {
                    return Err(err(
                        payload_start + bi,
                        "nonzero padding bits".to_string(),
                    ));
                }
                continue;
            }
            if bit == 1 {
                g.add_edge(i, j)?;
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(g)
}

fn decode_size(
    bytes: &[u8],
    err: &impl Fn(usize, String) -> Error,
) -> Result<(usize, usize)> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(err(bytes.len(), "truncated 8-byte size field".into()));
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |n, &b| n << 6 | (b - 63) as usize);
        Ok((n, 8))
    } else {
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated 4-byte size field".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |n, &b| n << 6 | (b - 63) as usize);
        Ok((n, 4))
    }
}
